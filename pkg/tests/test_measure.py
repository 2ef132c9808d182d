"""Measures, level sets, σ-ideals, finiteness and spot diagnostics."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxitive import (
    INF,
    ONE,
    ZERO,
    ExtNonneg,
    MaxMeasure,
    MeasurableFn,
    Minimum,
    SetFunctionTable,
    SigmaIdeal,
    Space,
    SpaceMismatchError,
    StandardProduct,
    check_maxitive,
    delta_sharp,
    find_odot_spots,
    is_negligible,
    is_semi_odot_finite,
    is_sigma_odot_finite,
    measure_eval,
    semi_odot_finite_bruteforce,
)
from maxitive.errors import SizeCapError

from conftest import LABELS, rand_measure, rand_space

TIMES = StandardProduct()
MIN = Minimum()


def test_measure_eval_examples():
    sp = Space(["a", "b"])
    nu = MaxMeasure(sp, {"a": 1, "b": 3})
    assert nu(sp.full) == ExtNonneg(3)
    assert nu(sp.empty) == ZERO
    sp3 = Space(["a", "b", "c"])
    assert delta_sharp(sp3)(sp3.subset(["c"])) == ONE


def test_delta_sharp_masses():
    sp = Space(["a"])
    assert delta_sharp(sp).mass("a") == ONE
    sp3 = Space(["a", "b", "c"])
    assert delta_sharp(sp3)(sp3.full) == ONE
    assert delta_sharp(sp3)(sp3.empty) == ZERO


def test_space_mismatch_rejected():
    a = Space(["a", "b"])
    b = Space(["a", "c"])
    with pytest.raises(SpaceMismatchError):
        measure_eval(MaxMeasure(a, {"a": 1, "b": 2}), b.full)


def test_is_negligible():
    sp = Space(["a", "b"])
    mu = MaxMeasure(sp, {"a": 0, "b": 1})
    assert is_negligible(mu, sp.subset(["a"]))
    assert is_negligible(mu, sp.empty)
    assert not is_negligible(delta_sharp(sp), sp.subset(["a"]))


def test_sigma_odot_finiteness_examples():
    sp = Space(["a", "b"])
    assert is_sigma_odot_finite(TIMES, MaxMeasure(sp, {"a": 2, "b": 3}))
    sp3 = Space(["a", "b", "c"])
    assert not is_sigma_odot_finite(TIMES, MaxMeasure.constant(sp3, INF))
    assert is_sigma_odot_finite(MIN, MaxMeasure(Space(["a"]), {"a": INF}))


def test_sigma_finiteness_equals_total_finiteness():
    # finite-space collapse: all atoms ⊙-finite ⇔ μ(E) ⊙-finite
    rng = random.Random(0)
    for _ in range(300):
        sp = rand_space(rng)
        mu = rand_measure(rng, sp, allow_inf=True)
        for pm in (TIMES, MIN):
            assert is_sigma_odot_finite(pm, mu) == pm.is_odot_finite(mu.total)


def test_semi_finiteness_examples():
    assert not is_semi_odot_finite(TIMES, MaxMeasure(Space(["a"]), {"a": INF}))
    sp = Space(["a", "b"])
    assert is_semi_odot_finite(TIMES, MaxMeasure(sp, {"a": 5, "b": "1/7"}))
    assert is_semi_odot_finite(MIN, MaxMeasure(sp, {"a": INF, "b": 2}))


def test_semi_finiteness_agrees_with_bruteforce():
    rng = random.Random(1)
    for _ in range(200):
        sp = rand_space(rng, hi=5)
        mu = rand_measure(rng, sp, allow_inf=True)
        for pm in (TIMES, MIN):
            exhaustive = is_semi_odot_finite(pm, mu)
            assert exhaustive == semi_odot_finite_bruteforce(pm, mu)
            # atom-wise shortcut: fails exactly when some atom mass is ⊙-infinite
            assert exhaustive == all(pm.is_odot_finite(v) for v in mu.masses)
            # which on a finite atomic space coincides with σ-⊙-finiteness
            assert exhaustive == is_sigma_odot_finite(pm, mu)


def test_spots_examples(chain):
    sp = Space(["a", "b"])
    report = find_odot_spots(TIMES, MaxMeasure(sp, {"a": INF, "b": 1}))
    assert report.has_spots
    assert report.maximal_spot == sp.subset(["a"])
    assert report.atom_spots == ("a",)

    assert not find_odot_spots(TIMES, MaxMeasure(sp, {"a": 2, "b": 3})).has_spots

    sp1 = Space(["a"])
    report = find_odot_spots(chain, MaxMeasure(sp1, {"a": 2}))
    assert report.maximal_spot == sp1.subset(["a"])


def test_maximal_spot_is_a_spot():
    # every subset of the maximal spot has measure zero or ⊙-infinite
    rng = random.Random(2)
    for _ in range(100):
        sp = rand_space(rng, hi=5)
        mu = rand_measure(rng, sp, allow_inf=True)
        report = find_odot_spots(TIMES, mu)
        if not report.has_spots:
            continue
        spot = report.maximal_spot
        assert not TIMES.is_odot_finite(measure_eval(mu, spot))
        for B in sp.subsets():
            sub = B & spot
            v = measure_eval(mu, sub)
            assert v.is_zero or not TIMES.is_odot_finite(v)


def test_spot_implies_not_semi_finite():
    rng = random.Random(3)
    for _ in range(200):
        sp = rand_space(rng, hi=5)
        mu = rand_measure(rng, sp, allow_inf=True)
        for pm in (TIMES, MIN):
            if find_odot_spots(pm, mu).has_spots:
                assert not is_semi_odot_finite(pm, mu)


def test_check_maxitive_examples():
    sp = Space(["a", "b"])
    mu = MaxMeasure(sp, {"a": 1, "b": 1})
    assert check_maxitive(mu.table())
    additive = SetFunctionTable(sp, [ZERO, ONE, ONE, ExtNonneg(2)])
    assert not check_maxitive(additive)


def test_set_function_table_requires_zero_at_empty():
    sp = Space(["a"])
    with pytest.raises(ValueError):
        SetFunctionTable(sp, [ONE, ONE])


def test_check_maxitive_large_path_matches_pair_scan():
    rng = random.Random(4)
    sp = Space(list(LABELS)[:6])
    for _ in range(40):
        values = [ZERO] + [ExtNonneg(rng.randint(0, 3)) for _ in range((1 << 6) - 1)]
        table = SetFunctionTable(sp, values)
        pair_scan = all(
            table.values[a | b] == max(table.values[a], table.values[b])
            for a in range(1 << 6) for b in range(1 << 6))
        assert check_maxitive(table) == pair_scan


def test_measure_monotone_and_maxitive():
    rng = random.Random(5)
    for _ in range(50):
        sp = rand_space(rng, hi=5)
        mu = rand_measure(rng, sp, allow_inf=True)
        subsets = list(sp.subsets())
        for A in subsets:
            for B in subsets:
                union = measure_eval(mu, A | B)
                assert union == max(measure_eval(mu, A), measure_eval(mu, B))
                if A.issubset(B):
                    assert measure_eval(mu, A) <= measure_eval(mu, B)


def test_level_sets_and_support():
    sp = Space(["a", "b", "c"])
    f = MeasurableFn(sp, {"a": 0, "b": "1/2", "c": INF})
    assert f.strictly_above(ZERO) == sp.subset(["b", "c"])
    assert f.at_least(ExtNonneg("1/2")) == sp.subset(["b", "c"])
    assert f.level(INF) == sp.subset(["c"])
    assert f.support == sp.subset(["b", "c"])
    assert f.finite_positive_values() == [ExtNonneg("1/2")]
    assert f.attains_inf()


def test_indicator():
    sp = Space(["a", "b"])
    ind = MeasurableFn.indicator(sp.subset(["a"]), height=INF)
    assert ind("a") == INF and ind("b") == ZERO


def test_sigma_ideal_membership_and_generators():
    sp = Space(["a", "b", "c"])
    ideal = SigmaIdeal.from_generators(sp, [sp.subset(["a"]), sp.subset(["b"])])
    assert ideal.top == sp.subset(["a", "b"])
    assert ideal.contains(sp.subset(["a", "b"]))
    assert ideal.contains(sp.empty)
    assert not ideal.contains(sp.subset(["c"]))
    assert len(list(ideal.members())) == 4


def test_enumeration_caps():
    big = Space([f"x{i}" for i in range(21)])
    with pytest.raises(SizeCapError):
        list(big.subsets())
    with pytest.raises(SizeCapError):
        MaxMeasure.constant(big, ONE).table()


def test_measure_equality_is_by_value():
    sp = Space(["a", "b"])
    assert MaxMeasure(sp, {"a": 1, "b": 2}) == MaxMeasure(sp, {"a": "1", "b": "2"})
    assert MaxMeasure(sp, {"a": 1, "b": 2}) != MeasurableFn(sp, {"a": 1, "b": 2})


@settings(max_examples=60)
@given(data=st.data())
def test_subset_algebra(data):
    sp = Space(["a", "b", "c", "d"])
    m1 = data.draw(st.integers(0, 15))
    m2 = data.draw(st.integers(0, 15))
    from maxitive import SubsetB
    A, B = SubsetB(sp, m1), SubsetB(sp, m2)
    assert (A | B).mask == m1 | m2
    assert (A & B).mask == m1 & m2
    assert (A - B) | (A & B) == A
    assert (~A | A) == sp.full
    assert A.issubset(A | B)
