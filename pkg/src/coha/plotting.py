"""Render report tables as figures next to the delimited output.

Every tabular CLI command accepts --plot FILE; the figure style depends on
the command: dimension tables become per-degree curves, relation grids
become pass/fail heatmaps, and verdict lists become bar summaries.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _dims_figure(ax, items, x_key, series):
    xs = [row[x_key] for row in items]
    for key in series:
        if items and key in items[0]:
            ax.plot(xs, [row[key] for row in items], marker="o", label=key)
    ax.set_xlabel(x_key)
    ax.set_ylabel("dimension")
    ax.legend()


def _grid_figure(fig, items):
    kinds = sorted({row["kind"] for row in items})
    axes = fig.subplots(1, max(len(kinds), 1), squeeze=False)[0]
    for ax, kind in zip(axes, kinds):
        rows = [r for r in items if r["kind"] == kind]
        p_max = max(r["p"] for r in rows)
        q_max = max(r["q"] for r in rows)
        grid = [[0.5] * (q_max + 1) for _ in range(p_max + 1)]
        for r in rows:
            grid[r["p"]][r["q"]] = 1.0 if r.get("pass", r.get("holds")) else 0.0
        ax.imshow(grid, vmin=0.0, vmax=1.0, cmap="RdYlGn", origin="lower")
        ax.set_title(kind)
        ax.set_xlabel("q")
        ax.set_ylabel("p")


def _verdict_bar(ax, items, flag_key):
    by_weight: dict = {}
    for row in items:
        key = row.get("weight", 0)
        ok, bad = by_weight.get(key, (0, 0))
        if row[flag_key]:
            by_weight[key] = (ok + 1, bad)
        else:
            by_weight[key] = (ok, bad + 1)
    weights = sorted(by_weight)
    ax.bar(weights, [by_weight[w][0] for w in weights], label="pass", color="tab:green")
    ax.bar(
        weights,
        [by_weight[w][1] for w in weights],
        bottom=[by_weight[w][0] for w in weights],
        label="fail",
        color="tab:red",
    )
    ax.set_xlabel("weight")
    ax.set_ylabel("count")
    ax.legend()


def save_report_figure(command: str, items: list, path: str) -> None:
    """Write a figure summarizing the command's report items."""
    fig = plt.figure(figsize=(7, 4.5))
    try:
        if command == "sst-dims":
            _dims_figure(fig.add_subplot(), items, "degree", ["total", "unstable", "quotient"])
        elif command == "hn-check":
            _dims_figure(fig.add_subplot(), items, "degree", ["total", "strata_sum"])
        elif command == "pbw":
            _dims_figure(
                fig.add_subplot(),
                items,
                "coh",
                ["quotient_dim", "monomial_count", "series_coeff"],
            )
        elif command in ("relations", "diffrep-check") and items:
            _grid_figure(fig, items)
        elif command == "ybe":
            _verdict_bar(fig.add_subplot(), items, "equal")
        elif command == "faithfulness":
            ax = fig.add_subplot()
            labels = [str(row["n"]) for row in items]
            ax.bar(labels, [row["monomials"] for row in items], label="monomials", alpha=0.6)
            ax.bar(labels, [row["rank"] for row in items], label="rank", alpha=0.6)
            ax.set_xlabel("n")
            ax.legend()
        else:
            flag = "pass" if (items and "pass" in items[0]) else None
            ax = fig.add_subplot()
            if flag:
                _verdict_bar(ax, items, flag)
            else:
                ax.text(0.5, 0.5, f"{command}: {len(items)} items", ha="center")
                ax.set_axis_off()
        fig.suptitle(command)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
    finally:
        plt.close(fig)
