import pytest

from opmono import (
    Regime,
    EnumerationCapExceeded,
    count,
    count_by_length,
    degree,
    enumerate_monomials,
    is_canonical,
    multiplicity,
    parse_monomial,
)
from helpers import multidegrees

QUARTET = {
    Regime.FREE: 30,
    Regime.COMM_UNARY: 18,
    Regime.COMM_MULT: 17,
    Regime.COMM_BOTH: 10,
}


@pytest.mark.parametrize("regime,size", QUARTET.items(), ids=[r.value for r in QUARTET])
def test_box_example_sizes(regime, size):
    ms = enumerate_monomials(2, 2, (2, 1), regime)
    assert len(ms) == len(set(ms)) == size


def test_known_membership():
    free = set(enumerate_monomials(2, 2, (2, 1), Regime.FREE))
    for text in ["P1(P1(P2(**)))", "P2(P1(P1(*)*))", "P1(P2(*))P1(*)", "*P2(P1(P1(*)))"]:
        assert parse_monomial(text) in free
    canon = set(enumerate_monomials(2, 2, (2, 1), Regime.COMM_UNARY))
    assert parse_monomial("P1(P1(P2(**)))") in canon
    assert parse_monomial("P2(P1(P1(**)))") not in canon


def test_one_operator_example():
    got = set(enumerate_monomials(1, 2, (1,), Regime.FREE))
    want = {parse_monomial(t) for t in ["P1(**)", "P1(*)*", "*P1(*)"]}
    assert got == want


def test_every_element_canonical_with_right_grading():
    for regime in Regime:
        for r, s in multidegrees(2, 5):
            for m in enumerate_monomials(2, r, s, regime):
                assert is_canonical(m, regime)
                assert degree(m) == r
                assert multiplicity(m, 2) == s


def test_matches_counting_engine_small():
    for regime in Regime:
        for d in (1, 2):
            for r, s in multidegrees(d, 6):
                assert len(enumerate_monomials(d, r, s, regime)) == count(regime, d, r, s)


def test_quotient_monotonicity():
    for d in (1, 2):
        for r, s in multidegrees(d, 6):
            sizes = {reg: len(enumerate_monomials(d, r, s, reg)) for reg in Regime}
            assert sizes[Regime.COMM_BOTH] <= sizes[Regime.COMM_UNARY] <= sizes[Regime.FREE]
            assert sizes[Regime.COMM_BOTH] <= sizes[Regime.COMM_MULT] <= sizes[Regime.FREE]


def test_count_by_length_examples():
    assert count_by_length(2, 3, 10, Regime.COMM_UNARY) == 21
    assert count_by_length(3, 2, 6, Regime.COMM_UNARY) == 16
    for regime in Regime:
        assert count_by_length(1, 2, 2, regime) == 1


def test_cap_guard():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_monomials(3, 9, (5, 5, 5), Regime.FREE, cap=1000)
    # a request under the cap still works
    assert len(enumerate_monomials(1, 3, (1,), Regime.FREE, cap=1000)) == count(
        Regime.FREE, 1, 3, (1,))


def test_rejects_bad_degree():
    with pytest.raises(ValueError):
        enumerate_monomials(2, 0, (0, 0), Regime.FREE)
