"""Case descriptors, weight vectors, and the config file format."""

from fractions import Fraction

import pytest

from gitstrata.case_catalog import (
    BUILTIN_IDS,
    builtin_case,
    case_config_text,
    chamber_sort,
    coord_strides,
    inner_product,
    parse_case_config,
    slot_dims,
    slot_index_sets,
    weights,
    zero_vector,
)

EXPECTED_SHAPE = {
    1: (18, 8, 5, 72),
    2: (30, 8, 6, 1440),
    3: (40, 9, 7, 2880),
    4: (56, 8, 7, 40320),
}


def test_builtin_shapes():
    for cid in BUILTIN_IDS:
        case = builtin_case(cid)
        assert (case.N, case.D, case.rank, case.weyl_order) == EXPECTED_SHAPE[cid]


def test_builtin_unknown_id():
    with pytest.raises(ValueError):
        builtin_case(5)


def test_block_bounds():
    assert builtin_case(1).block_bounds == ((0, 3), (3, 6), (6, 8))
    assert builtin_case(4).block_bounds == ((0, 8),)


def test_slot_dims():
    assert slot_dims(builtin_case(1)) == (3, 3, 2)
    assert slot_dims(builtin_case(2)) == (15, 2)
    assert slot_dims(builtin_case(3)) == (10, 4)
    assert slot_dims(builtin_case(4)) == (56,)


def test_coord_strides():
    # the last slot varies slowest, the one before it fastest
    assert coord_strides(builtin_case(1)) == (3, 1, 9)
    assert coord_strides(builtin_case(2)) == (1, 15)
    assert coord_strides(builtin_case(4)) == (1,)


def test_slot_index_sets_wedge(wedge_case):
    (pairs,) = slot_index_sets(wedge_case)
    assert pairs == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def test_weights_count_and_block_sums():
    for cid in BUILTIN_IDS:
        case = builtin_case(cid)
        ws = weights(case)
        assert len(ws) == case.N
        for gamma in ws:
            assert len(gamma) == case.D
            for lo, hi in case.block_bounds:
                assert sum(gamma[lo:hi], Fraction(0)) == 0


def test_first_weight_case1():
    # index 1 always corresponds to the all-ones multi-index
    gamma = weights(builtin_case(1))[0]
    third = Fraction(1, 3)
    assert gamma == (
        1 - third, -third, -third,
        1 - third, -third, -third,
        Fraction(1, 2), -Fraction(1, 2),
    )


def test_last_weight_case4():
    # the final index is the top pair set {6,7,8} of the single wedge slot
    gamma = weights(builtin_case(4))[-1]
    q = Fraction(3, 8)
    assert gamma == (-q, -q, -q, -q, -q, 1 - q, 1 - q, 1 - q)


def test_weights_distinct():
    for cid in BUILTIN_IDS:
        ws = weights(builtin_case(cid))
        assert len(set(ws)) == len(ws)


def test_inner_product_exact():
    case = builtin_case(1)
    a = weights(case)[0]
    assert inner_product(case, a, a) == sum(x * x for x in a)
    with pytest.raises(ValueError):
        inner_product(case, a, a[:-1])


def test_chamber_sort_blockwise():
    case = builtin_case(1)
    v = tuple(Fraction(x) for x in (3, 1, 2, 0, -1, 5, 9, -9))
    assert chamber_sort(case, v) == tuple(
        Fraction(x) for x in (1, 2, 3, -1, 0, 5, -9, 9)
    )


def test_zero_vector():
    assert zero_vector(builtin_case(2)) == (Fraction(0),) * 8


def test_config_roundtrip():
    for cid in BUILTIN_IDS:
        case = builtin_case(cid)
        again = parse_case_config(case_config_text(case))
        assert again == case


def test_config_rejects_bad_documents():
    bad = [
        "not json",
        "[1, 2]",
        '{"factors": [], "slots": [[1, "standard"]]}',
        '{"factors": [2, 0], "slots": [[1, "standard"]]}',
        '{"factors": [2], "slots": []}',
        '{"factors": [2], "slots": [[1, "cube"]]}',
        '{"factors": [2], "slots": [[2, "standard"]]}',
        '{"factors": [2], "slots": [[1, "wedge3"]]}',
        '{"factors": [2], "slots": [[1, "standard"]], "label": ""}',
        '{"factors": [2], "slots": [[1]]}',
    ]
    for text in bad:
        with pytest.raises(ValueError):
            parse_case_config(text)


def test_toy_case_weights(toy_case):
    # four weights (e_i - 1/2) x (e_j - 1/2), first factor index fast
    h = Fraction(1, 2)
    assert weights(toy_case) == [
        (h, -h, h, -h),
        (-h, h, h, -h),
        (h, -h, -h, h),
        (-h, h, -h, h),
    ]
