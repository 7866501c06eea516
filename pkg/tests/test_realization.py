import random

import pytest

from twotl.qnum import S, T, qbinom
from twotl.realization import (
    InvalidRealization,
    Realization,
    STANDARD,
    UnknownGenerator,
    condition_iii,
    demazure_check,
    pairing,
    rank_two,
    reflection_action,
    standard_realization,
    validate,
)
from twotl.rings import IntegersMod, Specialization, specialize_poly


def test_pairing_examples():
    a2 = standard_realization("A2")
    assert pairing(a2, "s", "s") == 2
    assert pairing(a2, "s", "t") == -1
    b2 = standard_realization("B2")
    assert (pairing(b2, "s", "t"), pairing(b2, "t", "s")) == (-1, -2)
    with pytest.raises(UnknownGenerator):
        pairing(a2, "s", "u")


def test_reflection_examples():
    a2 = standard_realization("A2")
    alpha = a2.roots["s"]
    assert reflection_action(a2, "s", alpha) == tuple(-x for x in alpha)
    beta = (3, -7)
    assert reflection_action(a2, "s", reflection_action(a2, "s", beta)) == beta
    v = alpha
    for _ in range(3):
        v = reflection_action(a2, "s", reflection_action(a2, "t", v))
    assert v == alpha


@pytest.mark.parametrize("name", sorted(STANDARD))
def test_standard_data_validate(name):
    rep = validate(standard_realization(name))
    assert rep.passed, rep.to_json()
    assert all(rep.condition_i.values()) and all(rep.condition_ii.values())
    assert all(v["pass"] for v in rep.condition_iii.values())


def test_condition_iii_values():
    assert validate(standard_realization("A2")).condition_iii["s,t"]["value"] == "0"
    assert validate(standard_realization("H2(5)")).condition_iii["s,t"]["pass"]
    broken = validate(rank_two("Z", -2, -1, 3))
    assert broken.condition_iii["s,t"] == {"value": "1", "pass": False}
    assert not broken.passed


def test_infinite_order_skips_condition_iii():
    rep = validate(rank_two("Z", -2, -2, None))
    assert rep.condition_iii == {} and rep.passed


@pytest.mark.parametrize("p", [3, 5, 7])
def test_minpoly_form_matches_binomials_randomized(p):
    rng = random.Random(p)
    R = IntegersMod(p)
    for _ in range(100):
        a, b, m = rng.randrange(p), rng.randrange(p), rng.randrange(2, 10)
        res = condition_iii(R, a, b, m)  # raises if the two forms disagree
        sp = Specialization(R, a, b)
        brute = all(R.is_zero(specialize_poly(qbinom(m, k, c), sp))
                    for k in range(1, m) for c in (S, T))
        assert res["pass"] == brute


def test_demazure_examples():
    q = rank_two("Q", "-1", "-1", 3)
    assert all(demazure_check(q).values())
    a2 = standard_realization("A2")
    assert all(demazure_check(a2).values())
    cfg = rank_two("Z", -1, -1, 3).to_config()
    cfg["coroots"]["s"] = [2, 4]
    assert demazure_check(Realization.from_config(cfg))["s"] is False


def test_config_validation():
    cfg = standard_realization("A2").to_config()
    bad = dict(cfg, coxeter=[[1, 3], [4, 1]])
    with pytest.raises(InvalidRealization):
        Realization.from_config(bad)
    bad = dict(cfg, rank=3)
    with pytest.raises(InvalidRealization):
        Realization.from_config(bad)
    assert Realization.from_config(cfg).to_config() == cfg
