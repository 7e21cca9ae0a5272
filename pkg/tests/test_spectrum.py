from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersingular.algebra import INF
from supersingular.errors import InvalidInput, InvalidMu
from supersingular.spectrum import (
    CanonicalRegime,
    canonical_regime,
    exact_order_count,
    minimal_torsion_field_degree,
    ramification_bounds,
    torsion_spectrum,
    x_coordinate_spectrum,
)

F = Fraction


def test_regime_examples():
    assert canonical_regime(11, F(1, 3)) == CanonicalRegime("canonical", 0)
    assert canonical_regime(3, F(1, 5)) == CanonicalRegime("canonical", 1)
    assert canonical_regime(3, INF) == CanonicalRegime("no_canonical")
    assert canonical_regime(3, F(3, 4)) == CanonicalRegime("no_canonical")
    assert canonical_regime(3, F(1, 12)) == CanonicalRegime("canonical", 1)
    assert canonical_regime(3, F(1, 13)).s == 2
    with pytest.raises(InvalidMu):
        canonical_regime(3, 0)
    with pytest.raises(InvalidMu):
        canonical_regime(3, F(-1, 2))


def test_spectrum_121c2_level_one():
    assert torsion_spectrum(11, 1, F(1, 3)).multiset() == [(F(1, 15), 10), (F(1, 330), 110)]


def test_spectrum_9tors_level_two():
    spectrum = torsion_spectrum(3, 2, F(1, 5))
    assert spectrum.multiset() == [(F(1, 15), 6), (F(1, 30), 12), (F(1, 270), 54)]
    assert [e.tag for e in spectrum.entries] == ["top", "layer", "off"]
    assert [e.above_canonical for e in spectrum.entries] == [True, True, False]


def test_spectrum_past_the_threshold():
    spectrum = torsion_spectrum(3, 3, F(1, 5))
    assert spectrum.multiset() == [(F(1, 135), 54), (F(1, 270), 108), (F(1, 2430), 486)]
    assert spectrum.total_count == 648 and spectrum.weighted_sum == 1


def test_spectrum_without_canonical_subgroup():
    spectrum = torsion_spectrum(3, 1, INF)
    assert spectrum.multiset() == [(F(1, 8), 8)]
    assert spectrum.entries[0].tag == "uniform"


def test_x_coordinates():
    assert x_coordinate_spectrum(torsion_spectrum(3, 2, F(1, 5))) == [(F(-2, 15), 3), (F(-1, 15), 6), (F(-1, 135), 27)]
    assert x_coordinate_spectrum(torsion_spectrum(11, 1, F(1, 3))) == [(F(-2, 15), 5), (F(-1, 165), 55)]
    assert x_coordinate_spectrum(torsion_spectrum(3, 1, INF)) == [(F(-1, 4), 4)]
    # the three 2-torsion points have distinct x-coordinates
    assert x_coordinate_spectrum(torsion_spectrum(2, 1, INF)) == [(F(-2, 3), 3)]


def test_ramification_examples():
    r = ramification_bounds(3, 1, canonical_regime(3, INF), torsion_spectrum(3, 1, INF))
    assert (r.e_P_lower, r.e_p_divisibility, r.lcm_denominators, r.e_P_strict) == (8, 8, 8, False)
    r = ramification_bounds(11, 1, canonical_regime(11, F(1, 3)), torsion_spectrum(11, 1, F(1, 3)))
    assert r.lcm_denominators == 330 and r.e_P_strict and r.e_p_divisibility is None
    r = ramification_bounds(3, 2, canonical_regime(3, F(1, 5)), torsion_spectrum(3, 2, F(1, 5)))
    assert r.lcm_denominators == 270
    with pytest.raises(InvalidInput):
        ramification_bounds(3, 1, canonical_regime(3, INF), torsion_spectrum(3, 2, INF))


def test_minimal_torsion_field_degree():
    assert minimal_torsion_field_degree([(3, 1)]) == 8
    assert minimal_torsion_field_degree([(5, 1), (7, 1)]) == 1152
    assert minimal_torsion_field_degree([(2, 2)]) == 12


mus = st.one_of(st.fractions(min_value=F(1, 10**4), max_value=5, max_denominator=10**4), st.just(INF)).filter(
    lambda m: m is INF or m > 0
)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11, 13, 17]), st.integers(1, 5), mus)
def test_count_and_sum_invariants(p, n, mu):
    spectrum = torsion_spectrum(p, n, mu)
    assert spectrum.total_count == exact_order_count(p, n)
    assert spectrum.weighted_sum == 1
    assert all(e.valuation > 0 for e in spectrum.entries)
    vals = [v for v, _ in spectrum.multiset()]
    assert vals == sorted(set(vals), reverse=True)
    # elements above the canonical subgroup strictly dominate the rest
    above = [e.valuation for e in spectrum.entries if e.above_canonical]
    below = [e.valuation for e in spectrum.entries if not e.above_canonical]
    if above and below:
        assert min(above) > max(below)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), mus)
def test_ramification_report_consistency(p, n, mu):
    spectrum = torsion_spectrum(p, n, mu)
    regime = canonical_regime(p, mu)
    r = ramification_bounds(p, n, regime, spectrum)
    for e in spectrum.entries:
        assert r.lcm_denominators % e.valuation.denominator == 0
    assert r.e_P_lower == exact_order_count(p, n)
    assert r.e_p_lower == p**n - p ** (n - 1) + 1
