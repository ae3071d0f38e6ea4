"""Pair construction (both methods), verification certificates, degrees."""

from __future__ import annotations

import pytest

from pteseq import (
    AffineMap,
    MaterializationCapError,
    PairFormatError,
    Provenance,
    PtePair,
    pair_degree,
    pair_from_affine,
    pair_from_difference,
    pair_from_json_dict,
    power_sum,
    verify_pair,
)
from pteseq.pte import (
    FAIL_CARDINALITY,
    FAIL_EARLY_DIFFERENCE,
    FAIL_NO_DIFFERENCE,
    FAIL_OVERLAP,
    METHOD_AFFINE,
    METHOD_DIFFERENCE,
    METHOD_EXTERNAL,
)


def test_power_sum_frozen_values():
    assert power_sum([7, 11, 12], 2) == 314
    assert power_sum([8, 9, 13], 2) == 314
    assert power_sum([0], 0) == 1  # 0**0 counts as 1
    assert power_sum([], 5) == 0
    assert power_sum([-2, 3], 3) == 19


def test_power_sum_rejects_negative_exponent():
    with pytest.raises(ValueError):
        power_sum([1], -1)


def test_affine_frozen_examples():
    pair = pair_from_affine(3, AffineMap(2, 1))
    assert pair.u_set == (3, 5, 13)
    assert pair.v_set == (1, 9, 11)
    assert pair.claimed_n == 3

    pair = pair_from_affine(2, AffineMap(1, 0))
    assert pair.u_set == (1, 2)
    assert pair.v_set == (0, 3)

    # Reflecting positions of sequence 3 lands exactly on the m=1
    # difference pair.
    pair = pair_from_affine(3, AffineMap(-1, 13))
    assert pair.u_set == (7, 11, 12)
    assert pair.v_set == (8, 9, 13)


def test_affine_provenance_recorded():
    pair = pair_from_affine(4, AffineMap(-3, 7))
    assert pair.provenance == Provenance(
        method=METHOD_AFFINE, seq_index=4, scale=-3, offset=7
    )


def test_affine_rejects_small_index_and_zero_scale():
    with pytest.raises(ValueError):
        pair_from_affine(1, AffineMap(1, 0))
    with pytest.raises(ValueError):
        AffineMap(0, 5)


def test_affine_sets_are_map_images():
    base = pair_from_affine(5, AffineMap(1, 0))
    for p, l in ((2, 3), (-1, 0), (-4, 11)):
        mapped = pair_from_affine(5, AffineMap(p, l))
        assert set(mapped.u_set) == {p * x + l for x in base.u_set}
        assert set(mapped.v_set) == {p * x + l for x in base.v_set}


@pytest.mark.parametrize("n", range(2, 9))
def test_affine_pairs_verify_with_first_difference_at_n(n):
    for p, l in ((1, 0), (3, -17), (-2, 5)):
        report = verify_pair(pair_from_affine(n, AffineMap(p, l)))
        assert report.is_valid
        assert report.first_difference == n


@pytest.mark.parametrize("n", range(2, 7))
def test_affine_virtual_matches_materialized(n):
    amap = AffineMap(-2, 9)
    assert pair_from_affine(n, amap, virtual=True) == pair_from_affine(n, amap)


def test_affine_respects_materialization_cap():
    with pytest.raises(MaterializationCapError):
        pair_from_affine(28, AffineMap(1, 0))
    pair_from_affine(5, AffineMap(1, 0), cap=None)


def test_difference_frozen_examples():
    pair = pair_from_difference(0)
    assert (pair.u_set, pair.v_set, pair.claimed_n) == ((2,), (3,), 1)

    pair = pair_from_difference(1)
    assert pair.u_set == (7, 11, 12)
    assert pair.v_set == (8, 9, 13)
    assert pair.claimed_n == 3
    assert pair.provenance == Provenance(method=METHOD_DIFFERENCE, diff_index=1)

    pair = pair_from_difference(2)
    assert pair.u_set == (27, 31, 32, 35, 36, 41, 42, 46, 47, 51, 52)
    assert pair.v_set == (28, 29, 33, 34, 38, 39, 44, 45, 48, 49, 53)
    assert pair.claimed_n == 5


def test_difference_rejects_negative_index():
    with pytest.raises(ValueError):
        pair_from_difference(-1)


@pytest.mark.parametrize("m", range(5))
def test_difference_sums_agree_through_2m(m):
    pair = pair_from_difference(m)
    for s in range(2 * m + 1):
        assert power_sum(pair.u_set, s) == power_sum(pair.v_set, s), (m, s)


@pytest.mark.parametrize("m", range(5))
def test_difference_pairs_verify_at_2m_plus_1(m):
    report = verify_pair(pair_from_difference(m))
    assert report.is_valid
    assert report.first_difference == 2 * m + 1


@pytest.mark.parametrize("m", range(4))
def test_difference_virtual_matches_materialized(m):
    assert pair_from_difference(m, virtual=True) == pair_from_difference(m)


def test_difference_set_sizes_track_support_growth():
    # |u| = |v| for every difference pair, and both halves grow with m.
    sizes = [len(pair_from_difference(m).u_set) for m in range(5)]
    assert sizes == [1, 3, 11, 43, 171]
    for m in range(5):
        pair = pair_from_difference(m)
        assert len(pair.u_set) == len(pair.v_set)


def test_verify_valid_certificate_contents():
    report = verify_pair(pair_from_difference(1))
    assert report.is_valid
    assert report.checked_through == 3
    assert report.first_difference == 3
    assert report.failure_reason is None
    assert report.sums_table == (
        (0, 3, 3),
        (1, 30, 30),
        (2, 314, 314),
        (3, 3402, 3438),
    )


def test_verify_overlap():
    report = verify_pair(PtePair((1, 2), (2, 3), 1))
    assert not report.is_valid
    assert report.failure_reason == FAIL_OVERLAP
    assert report.checked_through == 0
    assert report.first_difference is None
    assert report.sums_table == ()


def test_verify_cardinality_mismatch():
    report = verify_pair(PtePair((1,), (2, 3), 1))
    assert not report.is_valid
    assert report.failure_reason == FAIL_CARDINALITY


def test_verify_early_difference():
    report = verify_pair(PtePair((1, 2), (0, 3), 3))
    assert not report.is_valid
    assert report.failure_reason == FAIL_EARLY_DIFFERENCE
    assert report.first_difference == 2
    assert report.checked_through == 2
    assert report.sums_table == ((0, 2, 2), (1, 3, 3), (2, 5, 9))


def test_verify_no_difference_at_claimed_exponent():
    # The real first difference is 3, so claiming 2 must fail without
    # hiding where the sums actually diverge.
    report = verify_pair(PtePair((7, 11, 12), (8, 9, 13), 2))
    assert not report.is_valid
    assert report.failure_reason == FAIL_NO_DIFFERENCE
    assert report.first_difference == 3
    assert report.checked_through == 3


def test_verify_empty_sets():
    report = verify_pair(PtePair((), (), 1))
    assert not report.is_valid
    assert report.failure_reason == FAIL_NO_DIFFERENCE
    assert report.first_difference is None


def test_verify_scan_covers_claim_and_size():
    # With a claim far above the actual difference, the scan still stops
    # at the first difference rather than the full claimed range.
    report = verify_pair(PtePair((1, 2), (0, 3), 9))
    assert report.checked_through == 2
    # With a claim below the set size, the size bounds the scan instead.
    report = verify_pair(PtePair((7, 11, 12), (8, 9, 13), 1))
    assert report.checked_through == 3
    assert report.failure_reason == FAIL_NO_DIFFERENCE


def test_verify_report_json_uses_decimal_strings():
    doc = verify_pair(pair_from_difference(1)).to_json_dict()
    assert doc["is_valid"] is True
    assert doc["first_difference"] == 3
    assert doc["sums_table"][3] == [3, "3402", "3438"]
    assert doc["failure_reason"] is None


def test_pair_degree_frozen_examples():
    assert pair_degree((7, 11, 12), (8, 9, 13)) == 2
    assert pair_degree((1, 2), (0, 3)) == 1
    assert pair_degree((1,), (2,)) == 0


def test_pair_degree_validation():
    with pytest.raises(ValueError):
        pair_degree((), ())
    with pytest.raises(ValueError):
        pair_degree((1, 2), (2, 3))
    with pytest.raises(ValueError):
        pair_degree((1,), (2, 3))


def test_pair_degree_is_first_difference_minus_one():
    cases = [pair_from_difference(m) for m in range(4)]
    cases += [
        pair_from_affine(n, AffineMap(p, l))
        for n in range(2, 7)
        for p, l in ((1, 0), (-3, 4))
    ]
    for pair in cases:
        report = verify_pair(pair)
        degree = pair_degree(pair.u_set, pair.v_set)
        assert degree == report.first_difference - 1
        assert degree < len(pair.u_set)


def test_pair_json_round_trip_preserves_provenance():
    for pair in (
        pair_from_affine(3, AffineMap(-1, 13)),
        pair_from_difference(2),
        PtePair((1, 2), (0, 3), 2),
    ):
        assert pair_from_json_dict(pair.to_json_dict()) == pair


def test_pair_json_frozen_document():
    doc = pair_from_difference(1).to_json_dict()
    assert doc == {
        "u": [7, 11, 12],
        "v": [8, 9, 13],
        "n": 3,
        "provenance": {"method": "difference", "m": 1},
    }


def test_pair_json_sorts_and_dedupes_elements():
    pair = pair_from_json_dict({"u": [3, 1, 1], "v": [2, 0, 2], "n": 1})
    assert pair.u_set == (1, 3)
    assert pair.v_set == (0, 2)
    assert pair.provenance.method == METHOD_EXTERNAL


def test_pair_json_schema_violations():
    good = {"u": [1], "v": [2], "n": 1}
    with pytest.raises(PairFormatError):
        pair_from_json_dict([good])
    for key in ("u", "v", "n"):
        broken = dict(good)
        del broken[key]
        with pytest.raises(PairFormatError):
            pair_from_json_dict(broken)
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "u": "1"})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "u": [1.5]})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "u": [True]})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "n": True})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "n": 0})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "n": "3"})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "provenance": "affine"})
    with pytest.raises(PairFormatError):
        pair_from_json_dict({**good, "provenance": {"method": "guess"}})
    with pytest.raises(PairFormatError):
        pair_from_json_dict(
            {**good, "provenance": {"method": "affine", "p": "2"}}
        )


def test_pair_json_semantic_problems_left_to_verify():
    # Overlap and size mismatch are schema-valid; the verifier owns them.
    pair = pair_from_json_dict({"u": [1, 2], "v": [2, 3], "n": 1})
    assert verify_pair(pair).failure_reason == FAIL_OVERLAP
    pair = pair_from_json_dict({"u": [1], "v": [2, 3], "n": 1})
    assert verify_pair(pair).failure_reason == FAIL_CARDINALITY


def test_pair_json_accepts_all_methods():
    for method in (METHOD_AFFINE, METHOD_DIFFERENCE, METHOD_EXTERNAL):
        pair = pair_from_json_dict(
            {"u": [1], "v": [2], "n": 1, "provenance": {"method": method}}
        )
        assert pair.provenance.method == method
