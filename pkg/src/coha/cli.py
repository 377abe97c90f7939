"""Command-line front end with deterministic machine-readable reports.

Every command builds a Report of homogeneous row dicts plus an overall
verdict, then serializes it as JSON (sorted keys), CSV (fixed header), or
a plain-text table.  Output for a fixed invocation is byte-identical run
to run; wall-clock timing goes to stderr so it never perturbs the stream.
Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import braiding, diffrep, kronecker, semistable
from .exactpoly import Poly, PolyParseError, parse_poly
from .hall import CohaElement, component_basis, gamma_degree, shuffle_product
from .quiver import BUILTIN_QUIVERS, QuiverParseError, builtin_quiver, parse_quiver
from .symmetric import schur


class UsageError(ValueError):
    """Bad flag or argument combination; maps to exit code 2."""


def _parse_dim(text: str, quiver) -> tuple:
    try:
        dim = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--dim expects comma-separated integers, got {text!r}")
    if len(dim) != quiver.n:
        raise UsageError(
            f"dimension vector {text!r} has {len(dim)} entries for {quiver.n} vertices"
        )
    if any(x < 0 for x in dim):
        raise UsageError(f"dimension vector entries must be nonnegative, got {text!r}")
    return dim


def _require_nonneg(args, *names):
    for name in names:
        value = getattr(args, name.replace("-", "_"))
        if value < 0:
            raise UsageError(f"--{name} must be nonnegative")


def _load_quiver(spec: str):
    if spec in BUILTIN_QUIVERS:
        return builtin_quiver(spec)
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = spec
    try:
        return parse_quiver(text)
    except QuiverParseError as exc:
        raise UsageError(f"--quiver: {exc}")


def _resolve_theta(args, quiver, default_theta):
    if getattr(args, "theta", None):
        try:
            theta = tuple(int(x) for x in args.theta.split(","))
        except ValueError:
            raise UsageError("--theta expects comma-separated integers")
        if len(theta) != quiver.n:
            raise UsageError("--theta length does not match the quiver")
        return theta
    if default_theta is not None:
        return default_theta
    return (0,) * quiver.n


# -- command implementations -------------------------------------------------


def _cmd_product(args):
    quiver, _ = _load_quiver(args.quiver)
    try:
        left = parse_poly(args.left)
        right = parse_poly(args.right)
    except PolyParseError as exc:
        raise UsageError(f"polynomial syntax: {exc}")
    dim_left = _parse_dim(args.dim_left, quiver)
    dim_right = _parse_dim(args.dim_right, quiver)
    try:
        f = CohaElement(quiver, dim_left, left)
        g = CohaElement(quiver, dim_right, right)
    except ValueError as exc:
        raise UsageError(str(exc))
    result = shuffle_product(f, g)
    item = {
        "dim_vector": list(result.dim),
        "product": result.render(),
    }
    if result.poly.is_homogeneous():
        item["coh"] = gamma_degree(result).coh
    return [item], True


def _cmd_schur_check(args):
    from itertools import combinations

    _require_nonneg(args, "kmax")
    if args.dmax < 1:
        raise UsageError("--dmax must be at least 1")
    a1, _ = builtin_quiver("a1")
    items = []
    ok = True
    for d in range(1, args.dmax + 1):
        for ks in combinations(range(args.kmax + 1), d):
            lam = tuple(ks[d - 1 - i] - (d - 1 - i) for i in range(d))
            element = CohaElement(a1, (1,), Poly.monomial({(0, 1): ks[0]}))
            for k in ks[1:]:
                element = shuffle_product(
                    element, CohaElement(a1, (1,), Poly.monomial({(0, 1): k}))
                )
            expected = schur(lam, d)
            match = element.poly == expected
            ok = ok and match
            items.append(
                {
                    "d": d,
                    "ks": ",".join(str(k) for k in ks),
                    "partition": ",".join(str(x) for x in lam),
                    "pass": match,
                }
            )
    return items, ok


def _cmd_sst_dims(args):
    quiver, default_theta = _load_quiver(args.quiver)
    theta = _resolve_theta(args, quiver, default_theta)
    dim = _parse_dim(args.dim, quiver)
    _require_nonneg(args, "deg-max")
    items = []
    for m in range(args.deg_max + 1):
        total = len(component_basis(quiver, dim, m))
        quotient, _ = semistable.sst_quotient(quiver, theta, dim, m)
        items.append(
            {
                "dim_vector": list(dim),
                "degree": m,
                "total": total,
                "unstable": total - quotient,
                "quotient": quotient,
            }
        )
    return items, True


def _cmd_hn_check(args):
    quiver, default_theta = _load_quiver(args.quiver)
    theta = _resolve_theta(args, quiver, default_theta)
    dim = _parse_dim(args.dim, quiver)
    _require_nonneg(args, "deg-max")
    if not any(dim):
        raise UsageError("--dim must be nonzero for hn-check")
    items = semistable.hn_dim_check(quiver, theta, dim, args.deg_max)
    return items, all(row["pass"] for row in items)


def _cmd_relations(args):
    _require_nonneg(args, "pmax", "qmax")
    items = kronecker.relation_grid(args.pmax, args.qmax)
    return items, all(row["holds"] for row in items)


def _cmd_pbw(args):
    _require_nonneg(args, "deg")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    items = kronecker.pbw_check(args.n, args.deg)
    return items, all(row["pass"] for row in items)


def _cmd_normal_order(args):
    try:
        word = kronecker.parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc))
    form = kronecker.normal_order(word)
    items = [
        {"word": kronecker.render_word(w), "coeff": str(c)}
        for w, c in sorted(form.items())
    ]
    if not items:
        items = [{"word": "0", "coeff": "0"}]
    return items, True


def _cmd_ybe(args):
    _require_nonneg(args, "weight")
    items = braiding.ybe_check(args.weight)
    return items, all(row["equal"] for row in items)


def _cmd_diffrep_check(args):
    _require_nonneg(args, "pmax", "qmax")
    if args.probe < 1:
        raise UsageError("--probe must be at least 1")
    items = diffrep.operator_relation_grid(args.pmax, args.qmax, args.probe)
    return items, all(row["pass"] for row in items)


def _cmd_faithfulness(args):
    _require_nonneg(args, "n", "weight")
    if args.n > 3:
        raise UsageError("--n is capped at 3")
    report = diffrep.faithfulness_probe(args.n, args.weight)
    item = {k: v for k, v in report.items() if k != "words"}
    return [item], True  # rank deficiency is evidence, not failure


_COMMANDS = {
    "product": _cmd_product,
    "schur-check": _cmd_schur_check,
    "sst-dims": _cmd_sst_dims,
    "hn-check": _cmd_hn_check,
    "relations": _cmd_relations,
    "pbw": _cmd_pbw,
    "normal-order": _cmd_normal_order,
    "ybe": _cmd_ybe,
    "diffrep-check": _cmd_diffrep_check,
    "faithfulness": _cmd_faithfulness,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coha",
        description="Exact quiver Hall-algebra computations and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.add_argument("--plot", help="also render a figure of the report to this file")

    p = sub.add_parser("product", help="shuffle product of two elements")
    p.add_argument("--quiver", default="k2", help="builtin alias or quiver file")
    p.add_argument("--left", required=True, help="polynomial text, e.g. 'x^2 - y'")
    p.add_argument("--right", required=True)
    p.add_argument("--dim-left", required=True, help="comma dimension vector")
    p.add_argument("--dim-right", required=True)
    common(p)

    p = sub.add_parser("schur-check", help="iterated products against Schur polynomials")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--dmax", type=int, default=3)
    common(p)

    p = sub.add_parser("sst-dims", help="semistable quotient dimensions per degree")
    p.add_argument("--quiver", default="k2")
    p.add_argument("--dim", required=True)
    p.add_argument("--theta", help="override stability, comma integers")
    p.add_argument("--deg-max", type=int, default=8)
    common(p)

    p = sub.add_parser("hn-check", help="HN strata dimension factorization check")
    p.add_argument("--quiver", default="k2")
    p.add_argument("--dim", required=True)
    p.add_argument("--theta")
    p.add_argument("--deg-max", type=int, default=6)
    common(p)

    p = sub.add_parser("relations", help="defining relations in the semistable quotient")
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    common(p)

    p = sub.add_parser("pbw", help="quotient dims vs standard monomials vs series")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--deg", type=int, default=8, help="cohomological degree cap")
    common(p)

    p = sub.add_parser("normal-order", help="rewrite a generator word")
    p.add_argument("word", help="e.g. 'e1 e0 f2'")
    common(p)

    p = sub.add_parser("ybe", help="Yang-Baxter experiment on weight-bounded triples")
    p.add_argument("--weight", type=int, default=6)
    common(p)

    p = sub.add_parser("diffrep-check", help="operator relations on Q[w_1, w_2, ...]")
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--probe", type=int, default=6)
    common(p)

    p = sub.add_parser("faithfulness", help="rank probe of standard-monomial operators")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--weight", type=int, default=4)
    common(p)

    return parser


def emit(report: dict, fmt: str) -> str:
    """Deterministic serialization of a report."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    items = report["items"]
    if fmt == "csv":
        header = sorted({key for row in items for key in row})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in items:
            writer.writerow([_csv_cell(row.get(key, "")) for key in header])
        return buf.getvalue()
    lines = [f"# {report['command']}"]
    if items:
        header = sorted({key for row in items for key in row})
        widths = [
            max(len(h), max((len(_csv_cell(row.get(h, ""))) for row in items), default=0))
            for h in header
        ]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in items:
            lines.append(
                "  ".join(
                    _csv_cell(row.get(h, "")).ljust(w) for h, w in zip(header, widths)
                )
            )
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, list):
        return ";".join(str(x) for x in value)
    return str(value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    runner = _COMMANDS[args.command]
    started = time.monotonic()
    try:
        items, passed = runner(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - started
    report = {
        "command": args.command,
        "items": items,
        "verdict": "pass" if passed else "fail",
    }
    payload = emit(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    if args.plot:
        from .plotting import save_report_figure

        save_report_figure(args.command, items, args.plot)
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
