"""Merging candidate groups into classified strata."""

import random
from fractions import Fraction

import pytest

from gitstrata.beta_solver import solve_candidates
from gitstrata.case_catalog import builtin_case, zero_vector
from gitstrata.orbit_sieve import sieve
from gitstrata.stratifier import dedup_and_classify, veq
from gitstrata.weyl_action import weyl_list

H = Fraction(1, 2)


def groups_for(case, threads=1):
    actions = weyl_list(case)
    out = []
    for R in range(case.rank, 0, -1):
        reps = sieve(case, R, actions)
        out.append((R, solve_candidates(case, R, reps, threads=threads)))
    return out


def test_veq():
    a = (Fraction(1, 2), Fraction(0))
    b = (Fraction(2, 4), Fraction(0, 3))
    assert veq(a, b)
    assert not veq(a, (Fraction(1, 2), Fraction(1)))
    with pytest.raises(ValueError):
        veq(a, a[:1])


def test_line_case_single_stratum(line_case):
    """Worked out by hand: the pair projects to the origin and is dropped,
    each singleton gives the same chamber point (-1/2, 1/2)."""
    groups = groups_for(line_case)
    strata = dedup_and_classify(line_case, groups)
    assert len(strata) == 1
    (rec,) = strata.records
    assert rec.beta == (-H, H)
    assert rec.z_indices == (2,)
    assert rec.w_indices == ()
    assert [w[0] for w in rec.witnesses] == [1]


def test_toy_case_strata(toy_case):
    """Worked out by hand from the four weights (+-1/2, -+1/2, +-1/2, -+1/2)."""
    strata = dedup_and_classify(toy_case, groups_for(toy_case))
    table = {rec.beta: (rec.z_indices, rec.w_indices) for rec in strata.records}
    assert table == {
        (-H, H, -H, H): ((4,), ()),
        (-H, H, Fraction(0), Fraction(0)): ((2, 4), ()),
        (Fraction(0), Fraction(0), -H, H): ((3, 4), ()),
    }


def test_zero_candidates_are_dropped(toy_case):
    groups = groups_for(toy_case)
    accepted = sum(len(cands) for _, cands in groups)
    strata = dedup_and_classify(toy_case, groups)
    zero = zero_vector(toy_case)
    witnesses = sum(len(rec.witnesses) for rec in strata.records)
    zeros = sum(
        1 for _, cands in groups for cand in cands if veq(cand.beta, zero)
    )
    assert zeros >= 1
    assert witnesses == accepted - zeros
    for rec in strata.records:
        assert not veq(rec.beta, zero)


def test_case1_dedup_bookkeeping():
    case = builtin_case(1)
    groups = groups_for(case)
    strata = dedup_and_classify(case, groups)
    assert len(strata) == 49
    assert strata.candidate_counts == ((5, 17), (4, 29), (3, 13), (2, 7), (1, 1))
    betas = [rec.beta for rec in strata.records]
    assert len(set(betas)) == len(betas)
    for rec in strata.records:
        assert rec.witnesses
        assert not set(rec.z_indices) & set(rec.w_indices)
        assert list(rec.z_indices) == sorted(rec.z_indices)
        assert list(rec.w_indices) == sorted(rec.w_indices)
        # groups are merged from the largest subset size down
        assert all(w[0] <= rec.witnesses[0][0] for w in rec.witnesses)


def test_conformance_dedup_matches_hashing():
    case = builtin_case(1)
    groups = groups_for(case)
    fast = dedup_and_classify(case, groups)
    slow = dedup_and_classify(case, groups, conformance_dedup=True)
    assert fast.records == slow.records
    assert fast.candidate_counts == slow.candidate_counts


def test_shuffle_insensitive_as_sets():
    """Reordering candidates inside each group may reorder the output, but
    the set of classified triples and the total witness count must match."""
    case = builtin_case(1)
    groups = groups_for(case)
    rng = random.Random(7)
    shuffled = []
    for R, cands in groups:
        mixed = list(cands)
        rng.shuffle(mixed)
        shuffled.append((R, tuple(mixed)))
    base = dedup_and_classify(case, groups)
    moved = dedup_and_classify(case, shuffled)
    as_set = lambda s: {(r.beta, r.z_indices, r.w_indices) for r in s.records}
    assert as_set(base) == as_set(moved)
    total = lambda s: sum(len(r.witnesses) for r in s.records)
    assert total(base) == total(moved)
