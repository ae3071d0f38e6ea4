"""Acceptance gate: one test per shipping criterion, with time limits.

Each test asserts exact equality (never tolerances — all arithmetic here
is integer/rational) and finishes within its stated wall-clock budget.
Run with -v to get one pass/fail line per criterion.
"""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager

from pteseq import (
    AffineMap,
    IntPolynomial,
    MomentVector,
    SearchSpec,
    element_at,
    exhaustive_search,
    f_poly_coeffs,
    generate,
    moment,
    moments_fast,
    naive_verify,
    pair_from_affine,
    pair_from_difference,
    pair_from_json_dict,
    power_sum,
    support_sets,
    verify_pair,
)
from tests.conftest import run_cli


@contextmanager
def deadline(seconds: float):
    start = time.monotonic()
    yield
    elapsed = time.monotonic() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def oriented(pair):
    u, v = pair.u_set, pair.v_set
    return (u, v) if u[0] < v[0] else (v, u)


def test_criterion_1_exact_small_listings():
    with deadline(1):
        assert str(generate(1)) == "+-"
        assert str(generate(2)) == "+--+"
        assert str(generate(3)) == "+--0++-"
        sup = support_sets(generate(4))
        assert sup.x_set == frozenset({1, 2, 6, 7, 11, 12})
        assert sup.y_set == frozenset({4, 5, 8, 9, 13})


def test_criterion_2_moment_vanishing_range():
    with deadline(60):
        for n in range(1, 17):
            seq = generate(n)
            for t in range(n):
                assert moment(seq, t) == 0, (n, t)
            assert moment(seq, n) != 0, n


def test_criterion_3_shift_poly_degree_law():
    with deadline(30):
        for n in range(1, 11):
            for s in range(n, n + 6):
                assert f_poly_coeffs(n, s).degree == s - n, (n, s)
            for s in range(n):
                poly = f_poly_coeffs(n, s)
                assert poly.degree is None, (n, s)
                assert set(poly.coefficients) == {0}, (n, s)


def test_criterion_4_random_affine_pairs_verify():
    with deadline(30):
        rng = random.Random(20260816)
        for case in range(100):
            n = rng.randint(2, 8)
            scale = rng.choice([p for p in range(-10, 11) if p])
            offset = rng.randint(-100, 100)
            pair = pair_from_affine(n, AffineMap(scale, offset))
            report = verify_pair(pair)
            assert report.is_valid, (case, n, scale, offset)
            assert report.first_difference == n, (case, n, scale, offset)


def test_criterion_5_difference_pairs_equal_sums():
    with deadline(60):
        pair = pair_from_difference(1)
        assert pair.u_set == (7, 11, 12)
        assert pair.v_set == (8, 9, 13)
        for s in (0, 1, 2):
            assert power_sum((7, 11, 12), s) == power_sum((8, 9, 13), s)
        report = verify_pair(pair)
        assert report.first_difference == 3
        assert report.sums_table[3] == (3, 3402, 3438)
        for m in range(1, 7):
            pair = pair_from_difference(m)
            for s in range(2 * m + 1):
                assert power_sum(pair.u_set, s) == power_sum(pair.v_set, s), (
                    m,
                    s,
                )
            assert verify_pair(pair).first_difference == 2 * m + 1, m


def test_criterion_6_search_completeness_and_agreement():
    with deadline(60):
        result = exhaustive_search(SearchSpec(0, 13, 3, 2))
        found = {(p.u_set, p.v_set) for p in result.pairs}
        assert ((0, 4, 5), (1, 2, 6)) in found
        assert ((7, 11, 12), (8, 9, 13)) in found
        for pair in result.pairs:
            assert naive_verify(pair).is_valid, pair

        # Completeness: every pair the generators can place inside [0, 13]
        # must already be in the result.
        expected = [pair_from_difference(1)]
        in_range_maps = (
            [(1, l) for l in range(8)]
            + [(-1, l) for l in range(6, 14)]
            + [(2, 0), (2, 1), (-2, 12), (-2, 13)]
        )
        for p, l in in_range_maps:
            expected.append(pair_from_affine(3, AffineMap(p, l)))
        for pair in expected:
            members = set(pair.u_set) | set(pair.v_set)
            assert members <= set(range(14)), pair
            assert oriented(pair) in found, pair


def test_criterion_7_virtual_and_fast_paths_agree():
    with deadline(10):
        for n in range(1, 13):
            seq = generate(n)
            for i in range(len(seq)):
                assert element_at(n, i) == seq[i], (n, i)
    for n in range(1, 15):
        fast = moments_fast(n, 20)
        seq = generate(n)
        for t in range(21):
            assert fast.values[t] == moment(seq, t), (n, t)
    with deadline(10):
        values = moments_fast(40, 39).values
        assert values == (0,) * 40


def test_criterion_8_json_and_exit_code_contract():
    with deadline(10):
        for pair in (
            pair_from_affine(3, AffineMap(-1, 13)),
            pair_from_difference(2),
            pair_from_json_dict({"u": [1, 2], "v": [0, 3], "n": 2}),
        ):
            assert pair_from_json_dict(pair.to_json_dict()) == pair
        vector = moments_fast(5, 8)
        assert MomentVector.from_json_dict(vector.to_json_dict()) == vector
        poly = f_poly_coeffs(3, 7)
        assert IntPolynomial.from_json_dict(poly.to_json_dict()) == poly

        valid = json.dumps(pair_from_difference(1).to_json_dict())
        invalid = json.dumps({"u": [7, 11, 12], "v": [8, 9, 13], "n": 2})
        overlap = json.dumps({"u": [1, 2], "v": [2, 3], "n": 1})
        suite = [
            (("verify",), valid, 0),
            (("verify", "--naive"), valid, 0),
            (("verify",), invalid, 1),
            (("verify",), overlap, 1),
            (("verify",), '{"u": [7,', 2),
            (("verify",), '{"u": [1], "v": [2]}', 2),
            (("verify",), '{"u": [1], "v": [2], "n": true}', 2),
            (("frobnicate",), None, 2),
            (("seq", "-n", "8", "--cap", "10"), None, 3),
            (("search", "--lo", "0", "--hi", "30", "--size", "8",
              "--degree", "2"), None, 3),
        ]
        for argv, stdin, expected in suite:
            proc = run_cli(*argv, stdin=stdin)
            assert proc.returncode == expected, (argv, proc.stderr)
