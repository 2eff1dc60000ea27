import pytest
from hypothesis import given, settings

from conftest import tournaments
from tournament_lab.core import C3, C4, ONE, TWO, U5, W5, dual, inv, lex_product, lex_sum, mask_of, transitive
from tournament_lab.errors import BudgetExceeded, TooSmall
from tournament_lab.indices import (
    Delta_of_n,
    big_delta,
    big_delta_all_comodules,
    delta_of_n,
    index_report,
    is_comodular_decomposition,
    is_Delta_maximal,
    is_delta_maximal,
    max_packing,
    reversal_witness,
    small_delta,
    small_delta_oracle,
)
from tournament_lab.modular import is_indecomposable, minimal_comodules


def test_big_delta_examples():
    d, dec = big_delta(transitive(5))
    assert d == 3 and dec.as_lists() == [[0], [4], [1, 2]]
    d, dec = big_delta(C3)
    assert d == 0 and dec.blocks == ()
    d, dec = big_delta(C4)
    assert d == 2 and set(dec.blocks) == {mask_of([0, 1]), mask_of([2, 3])}


def test_decomposition_blocks_are_minimal():
    for t in (transitive(7), C4, lex_product(C3, TWO)):
        d, dec = big_delta(t)
        assert len(dec) == d
        assert set(dec.blocks) <= set(minimal_comodules(t))
        assert is_comodular_decomposition(t, dec.blocks)
        assert len(dec.singletons) <= 2


def test_small_delta_examples():
    assert small_delta(transitive(5)) == 2
    assert small_delta(U5) == 0
    assert small_delta(lex_sum(C3, [ONE, ONE, lex_product(TWO, TWO)])) == 2
    with pytest.raises(TooSmall):
        small_delta(transitive(4))


def test_oracle_examples():
    for t, want in ((transitive(5), 2), (W5, 0), (transitive(6), 2)):
        k, b = small_delta_oracle(t)
        assert k == want and len(b) == want
        assert is_indecomposable(inv(t, b))
    with pytest.raises(BudgetExceeded):
        small_delta_oracle(transitive(5), budget=1)
    with pytest.raises(TooSmall):
        small_delta_oracle(transitive(4))


def test_maximality_examples():
    assert is_delta_maximal(transitive(7))
    assert not is_delta_maximal(U5)
    assert is_delta_maximal(lex_product(C3, TWO))
    assert is_Delta_maximal(transitive(4))
    assert not is_Delta_maximal(C4)
    assert is_Delta_maximal(transitive(3))
    with pytest.raises(TooSmall):
        is_Delta_maximal(TWO)


def test_extremal_formulas():
    assert [Delta_of_n(n) for n in range(3, 9)] == [2, 3, 3, 4, 4, 5]
    assert [delta_of_n(n) for n in range(5, 12)] == [2, 2, 2, 3, 3, 3, 3]


def test_max_packing_brute_force():
    # against exhaustive search over all subfamilies
    from itertools import combinations

    cands = [0b1, 0b110, 0b1100, 0b11, 0b11000, 0b10000, 0b1000000, 0b0100001]
    best = 0
    for r in range(len(cands) + 1):
        for fam in combinations(cands, r):
            used = 0
            ok = True
            for s in fam:
                if s & used:
                    ok = False
                    break
                used |= s
            if ok:
                best = max(best, r)
    assert len(max_packing(cands)) == best


def test_index_report_witness():
    rep = index_report(transitive(6))
    assert rep.big_delta == 4 and rep.small_delta == 2
    assert len(rep.witness_arcs) == 2 and is_indecomposable(inv(transitive(6), rep.witness_arcs))
    assert index_report(C4).small_delta is None
    assert reversal_witness(transitive(5), 1) is None


@settings(max_examples=60, deadline=None)
@given(tournaments(min_n=5, max_n=7))
def test_formula_matches_oracle(t):
    assert small_delta(t) == small_delta_oracle(t)[0]


@given(tournaments(max_n=7))
def test_packing_reduction(t):
    assert big_delta(t)[0] == big_delta_all_comodules(t)


@given(tournaments(max_n=7))
def test_duality(t):
    assert big_delta(t)[0] == big_delta(dual(t))[0]
    if t.n >= 5:
        assert small_delta(t) == small_delta(dual(t))


@given(tournaments(min_n=3, max_n=8))
def test_decomposable_iff_index_at_least_two(t):
    assert (not is_indecomposable(t)) == (big_delta(t)[0] >= 2)
