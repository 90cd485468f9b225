import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import brute_dist, brute_tally, brute_tau_ev
from rankdrift import (
    AllPairsIncomparable,
    DomainError,
    NoComparablePairs,
    PairTally,
    PenaltyConfig,
    Ranking,
    RankingSeries,
    StructuralError,
    kendall_dist_p,
    kendall_tau_classic,
    normalized_strength,
    tally_pairs,
    tau_corrected_pair,
    tau_evolutive,
)

N = None  # absent entrant


# -- strategies ---------------------------------------------------------------

@st.composite
def permutations(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return draw(st.permutations(range(1, n + 1)))


@st.composite
def partial_pair(draw, max_n=12):
    """Two rankings over one universe, with ties and absences."""
    n = draw(st.integers(2, max_n))
    slot = st.one_of(st.none(), st.integers(1, n))
    a = draw(st.lists(slot, min_size=n, max_size=n))
    b = draw(st.lists(slot, min_size=n, max_size=n))
    return a, b


penalties = st.sampled_from([0.0, 0.25, 0.5]) | st.floats(0.0, 0.5)


# -- construction ---------------------------------------------------------------

def test_ranking_rejects_single_entrant():
    with pytest.raises(StructuralError):
        Ranking([1])


@pytest.mark.parametrize("bad", [[0, 1], [-1, 2], [1.5, 2], ["1", 2], [True, 2]])
def test_ranking_rejects_non_positive_integers(bad):
    with pytest.raises(DomainError):
        Ranking(bad)


def test_ranking_str_marks_absence():
    assert str(Ranking([1, N, 2])) == "[1, •, 2]"


def test_series_needs_two_rankings_of_equal_size():
    with pytest.raises(StructuralError):
        RankingSeries([[1, 2]])
    with pytest.raises(StructuralError):
        RankingSeries([[1, 2], [1, 2, 3]])
    with pytest.raises(StructuralError):
        RankingSeries([[1, 2], [2, 1]], labels=["GP1"])


@pytest.mark.parametrize("p", [-0.01, 0.51, 1.0])
def test_penalty_range(p):
    with pytest.raises(DomainError):
        PenaltyConfig(p)


# -- tally_pairs ------------------------------------------------------------------

@pytest.mark.parametrize(
    "a, b, expected",
    [
        ([1, 2, 3], [3, 2, 1], PairTally(0, 3, 0, 0, 3)),
        ([1, 2, 3], [1, 2, 3], PairTally(3, 0, 0, 0, 3)),
        ([1, 2, N], [2, 1, N], PairTally(0, 1, 0, 0, 1)),
        ([1, 1, 2], [1, 2, 3], PairTally(2, 0, 1, 0, 3)),
        ([1, 1, 2], [2, 2, 1], PairTally(0, 2, 0, 1, 3)),
    ],
)
def test_tally_examples(a, b, expected):
    assert tally_pairs(a, b) == expected


def test_tally_size_mismatch():
    with pytest.raises(StructuralError):
        tally_pairs([1, 2], [1, 2, 3])


def test_tally_with_fewer_than_two_common_entrants():
    assert tally_pairs([1, N, 2], [N, 1, 2]).comparable == 0


@given(partial_pair())
def test_tally_matches_brute_force(pair):
    a, b = pair
    t = tally_pairs(a, b)
    assert (t.concordant, t.discordant, t.tie_penalized, t.tied_both, t.comparable) == brute_tally(a, b)
    assert t.concordant + t.discordant + t.tie_penalized + t.tied_both == t.comparable


# -- classic tau -----------------------------------------------------------------

def test_classic_tau_examples():
    assert kendall_tau_classic([1, 2, 3], [3, 2, 1]) == -1.0
    assert kendall_tau_classic([1, 2, 3], [1, 2, 3]) == 1.0
    assert kendall_tau_classic([1, 2, 3, 4], [2, 1, 4, 3]) == pytest.approx(1 / 3, abs=1e-15)


@pytest.mark.parametrize("a, b", [([1, 1, 2], [1, 2, 3]), ([1, 2, N], [1, 2, 3])])
def test_classic_tau_refuses_partial_rankings(a, b):
    with pytest.raises(DomainError, match="tau_corrected_pair"):
        kendall_tau_classic(a, b)


# -- penalised distance / corrected pair ------------------------------------------

def test_distance_examples():
    assert kendall_dist_p([1, 2, 3], [1, 2, 3]) == 0.0
    assert kendall_dist_p([1, 2, 3], [3, 2, 1]) == 1.0
    assert kendall_dist_p([1, 1, 2], [1, 2, 3], PenaltyConfig(0.5)) == pytest.approx(1 / 6, abs=1e-15)
    assert kendall_dist_p([1, 1, 2], [1, 2, 3], 0.0) == 0.0


def test_distance_without_comparable_pairs():
    with pytest.raises(NoComparablePairs):
        kendall_dist_p([1, N, N], [N, 1, 2])


def test_corrected_pair_examples():
    assert tau_corrected_pair([1, 2, 3, 4], [2, 1, 4, 3]) == pytest.approx(1 / 3, abs=1e-15)
    assert tau_corrected_pair([1, N, 2], [2, N, 1]) == -1.0
    assert tau_corrected_pair([1, 2, N], [1, 2, N]) == 1.0


@given(permutations())
def test_corrected_pair_reduces_to_classic(perm):
    ident = list(range(1, len(perm) + 1))
    assert abs(tau_corrected_pair(ident, perm) - kendall_tau_classic(ident, perm)) <= 1e-12


@given(partial_pair(), penalties)
def test_distance_matches_exact_rational(pair, p):
    a, b = pair
    assume(brute_tally(a, b)[4] > 0)
    assert kendall_dist_p(a, b, p) == pytest.approx(float(brute_dist(a, b, Fraction(p))), abs=1e-15)


@given(partial_pair(), penalties)
def test_ranges_and_symmetry(pair, p):
    a, b = pair
    assume(tally_pairs(a, b).comparable > 0)
    d = kendall_dist_p(a, b, p)
    tau = tau_corrected_pair(a, b, p)
    assert 0.0 <= d <= 1.0
    assert -1.0 <= tau <= 1.0
    assert tau == tau_corrected_pair(b, a, p)


@given(partial_pair(), st.floats(0.0, 0.5), st.floats(0.0, 0.5))
def test_penalty_monotonicity(pair, p1, p2):
    a, b = pair
    t = tally_pairs(a, b)
    assume(t.comparable > 0 and abs(p1 - p2) > 1e-9)
    lo, hi = sorted((p1, p2))
    d_lo, d_hi = kendall_dist_p(a, b, lo), kendall_dist_p(a, b, hi)
    if t.tie_penalized:
        assert d_lo < d_hi
    else:
        assert d_lo == d_hi


# -- evolutive coefficient ----------------------------------------------------------

def test_evolutive_examples():
    same = tau_evolutive([[1, 2, 3]] * 4)
    assert (same.tau_ev, same.ns) == (1.0, 0.0)

    flip = tau_evolutive([[1, 2, 3], [3, 2, 1], [1, 2, 3]])
    assert (flip.tau_ev, flip.ns) == (-1.0, 1.0)

    res = tau_evolutive([[1, 2, 3], [2, 1, 3], [2, 1, 3]])
    assert res.tau_ev == pytest.approx(2 / 3, abs=1e-15)
    assert res.ns == pytest.approx(1 / 6, abs=1e-15)
    assert [d.tau for d in res.pair_details] == pytest.approx([1 / 3, 1.0])


def test_evolutive_skips_incomparable_steps():
    series = RankingSeries([[1, 2, N, N], [N, N, 1, 2], [N, N, 2, 1]], labels=["r1", "r2", "r3"])
    res = tau_evolutive(series)
    assert res.skipped_pairs == 1
    assert res.pair_details[0].skipped and res.pair_details[0].label == "r1->r2"
    assert res.tau_ev == -1.0


def test_evolutive_all_incomparable():
    with pytest.raises(AllPairsIncomparable):
        tau_evolutive([[1, 2, N, N], [N, N, 1, 2]])


@st.composite
def partial_series(draw, max_n=8, max_m=6):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(2, max_m))
    slot = st.one_of(st.none(), st.integers(1, n))
    return [draw(st.lists(slot, min_size=n, max_size=n)) for _ in range(m)]


@given(partial_series(), penalties)
def test_evolutive_matches_oracle_and_is_consistent(rows, p):
    assume(any(brute_tally(a, b)[4] for a, b in zip(rows, rows[1:])))
    res = tau_evolutive(rows, p)
    assert res.tau_ev == pytest.approx(float(brute_tau_ev(rows, Fraction(p))), abs=1e-12)
    assert -1.0 <= res.tau_ev <= 1.0
    assert 0.0 <= res.ns <= 1.0
    assert res.ns == (1 - res.tau_ev) / 2


@given(partial_series(), st.randoms(use_true_random=False))
def test_relabeling_invariance(rows, rnd):
    assume(any(brute_tally(a, b)[4] for a, b in zip(rows, rows[1:])))
    perm = list(range(len(rows[0])))
    rnd.shuffle(perm)
    series = RankingSeries(rows)
    assert tau_evolutive(series.permuted(perm)).tau_ev == pytest.approx(tau_evolutive(series).tau_ev, abs=1e-12)


# -- NS ------------------------------------------------------------------------------

@pytest.mark.parametrize("tau, ns", [(1.0, 0.0), (-1.0, 1.0), (0.5, 0.25), (0.0, 0.5)])
def test_normalized_strength(tau, ns):
    assert normalized_strength(tau) == ns


@pytest.mark.parametrize("tau", [1.0001, -1.5, math.nan])
def test_normalized_strength_domain(tau):
    with pytest.raises(DomainError):
        normalized_strength(tau)
