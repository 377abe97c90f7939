import random

import pytest

from coha.diffrep import (
    apply_word,
    e_act,
    e_on_generator,
    f_act,
    faithfulness_probe,
    operator_relation_check,
    operator_relation_grid,
    probe_set,
    w,
)
from coha.exactpoly import Poly
from coha.kronecker import E, F, IndexConstraintViolated


def test_f_act_examples():
    assert f_act(1, Poly.const(1)) == w(1)
    assert f_act(2, w(1)) == w(1) * w(2)
    assert f_act(1, Poly.zero()).is_zero()


def test_e_on_generator_examples():
    assert e_on_generator(0, 0).is_zero()
    assert e_on_generator(0, 1) == w(1) ** 2
    assert e_on_generator(1, 0) == -(w(1) ** 2)


def test_e_on_generator_weight_homogeneous():
    # weight(w_n) = n: e_p(w_{q+1}) is homogeneous of weight p + q + 1
    for p in range(4):
        for q in range(4):
            img = e_on_generator(p, q)
            weights = {
                sum(slot * e for (_, slot), e in exps.items())
                for exps, _ in img.monomials()
            }
            assert weights <= {p + q + 1}


def test_e_act_examples():
    assert e_act(0, w(2) * w(1)) == w(1) ** 3
    assert e_act(3, Poly.const(1)).is_zero()
    assert e_act(0, w(2) ** 2) == 2 * w(1) ** 2 * w(2)


def test_e_act_leibniz_randomized():
    rng = random.Random(2718)
    for _ in range(15):
        def rand_wpoly():
            total = Poly.zero()
            for _ in range(rng.randint(1, 3)):
                exps = {
                    (0, rng.randint(1, 4)): rng.randint(0, 2) for _ in range(2)
                }
                total = total + Poly.monomial(exps, rng.randint(-3, 3))
            return total

        a, b = rand_wpoly(), rand_wpoly()
        p = rng.randint(0, 3)
        assert e_act(p, a * b) == e_act(p, a) * b + a * e_act(p, b)


def test_operator_relation_examples():
    assert operator_relation_check("FF", 0, 1)["pass"]
    assert operator_relation_check("EF_lt", 0, 1)["pass"]
    assert operator_relation_check("EF_gt", 2, 0)["pass"]
    assert operator_relation_check("EE", 0, 1, probe=6)["pass"]


def test_operator_relation_grid_small():
    rows = operator_relation_grid(3, 3, probe=4)
    assert rows and all(row["pass"] for row in rows)


def test_operator_relation_constraints():
    with pytest.raises(IndexConstraintViolated):
        operator_relation_check("EE", 2, 2)
    with pytest.raises(IndexConstraintViolated):
        operator_relation_check("EF_gt", 1, 1)


def test_apply_word_composition_order():
    # word e0 f1 acts as e0 after multiplication by w_1
    word = (E(0), F(1))
    target = w(1)
    assert apply_word(word, target) == e_act(0, w(1) * w(1))


def test_probe_set_counts():
    probes = probe_set(2, 3)
    # monomials of degree <= 2 in w_1..w_4: 1 + 4 + 10
    assert len(probes) == 15
    assert any(p == Poly.const(1) for p in probes)


def test_faithfulness_probe_reports():
    rep = faithfulness_probe(0, 3)
    assert rep["rank"] == 1 and rep["monomials"] == 1
    rep = faithfulness_probe(1, 3)
    assert rep["monomials"] == 7  # e_0..e_3, f_1..f_3
    assert rep["rank"] == rep["monomials"]
    assert rep["full_rank"]
    with pytest.raises(ValueError):
        faithfulness_probe(4, 2)
