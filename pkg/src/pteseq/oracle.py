"""Independent ground truth: brute-force search and naive re-verification.

Everything here deliberately avoids the optimized code paths: power sums
are schoolbook repeated multiplication, and the search enumerates every
subset pair (pre-bucketed by cheap signatures, which discards nothing).
The rest of the package is judged against this module, not the other way
around.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from . import _backend, pseq, pte
from .errors import WorkBudgetError
from .pseq import DEFAULT_CAP
from .pte import PtePair, VerificationReport

#: Default work budget, in candidate-pair evaluations.
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchSpec:
    """Search space: m-subsets of [lo, hi] paired at degree >= min_degree."""

    lo: int
    hi: int
    set_size: int
    min_degree: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]")
        if self.set_size < 1:
            raise ValueError(f"set size must be >= 1, got {self.set_size}")
        if self.min_degree < 0:
            raise ValueError(
                f"minimum degree must be >= 0, got {self.min_degree}"
            )


@dataclass(frozen=True)
class SearchResult:
    """Canonicalized pairs found, with work statistics."""

    pairs: tuple[PtePair, ...]
    examined: int
    found: int

    def to_json_dict(self) -> dict:
        return {
            "pairs": [p.to_json_dict() for p in self.pairs],
            "stats": {"examined": self.examined, "found": self.found},
        }


def _naive_power(x: int, s: int) -> int:
    # Schoolbook repeated multiplication; 0**0 comes out as 1.
    out = 1
    for _ in range(s):
        out = out * x
    return out


def _naive_sum(values: tuple[int, ...], s: int) -> int:
    total = 0
    for x in values:
        total = total + _naive_power(x, s)
    return total


def naive_verify(pair: PtePair) -> VerificationReport:
    """Re-verify a pair through a separate code path.

    Same report contract as pte.verify_pair, field for field, but sharing
    no arithmetic with it: sums come from _naive_sum above.
    """
    u, v = pair.u_set, pair.v_set
    overlapping = [x for x in u if x in v]
    if overlapping:
        return VerificationReport(False, 0, None, (), pte.FAIL_OVERLAP)
    if len(u) != len(v):
        return VerificationReport(False, 0, None, (), pte.FAIL_CARDINALITY)
    limit = pair.claimed_n if pair.claimed_n > len(u) else len(u)
    table = []
    first = None
    for s in range(limit + 1):
        su, sv = _naive_sum(u, s), _naive_sum(v, s)
        table.append((s, su, sv))
        if su != sv:
            first = s
            break
    checked = table[-1][0]
    if first == pair.claimed_n:
        return VerificationReport(True, checked, first, tuple(table), None)
    if first is not None and first < pair.claimed_n:
        reason = pte.FAIL_EARLY_DIFFERENCE
    else:
        reason = pte.FAIL_NO_DIFFERENCE
    return VerificationReport(False, checked, first, tuple(table), reason)


def _orient(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical orientation: the set containing the overall minimum first."""
    return (a, b) if a[0] < b[0] else (b, a)


def exhaustive_search(
    spec: SearchSpec, *, budget: int = DEFAULT_BUDGET, threads: int = 1
) -> SearchResult:
    """Every disjoint subset pair in range with equal sums for s=1..d.

    Complete within the search space: subsets are grouped by power-sum
    signature (exponents 1..min(d, 2)) and only groups that could possibly
    match are paired, so nothing is missed.  Exponent 0 is implied by the
    equal set sizes.  Results come back canonicalized (elements ascending,
    the set containing the overall minimum first, pairs sorted) with
    claimed_n set to each pair's measured first differing exponent, and
    every one double-checked by naive_verify.

    The work estimate C(hi-lo+1, m)**2 is compared against `budget` up
    front; a too-large space raises WorkBudgetError without starting.
    `examined` counts candidate pair comparisons actually made.  threads
    > 1 splits signature groups across a thread pool (pure-Python path);
    output is identical regardless.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    size = spec.hi - spec.lo + 1
    estimate = comb(size, spec.set_size) ** 2
    if estimate > budget:
        raise WorkBudgetError(estimate, budget)
    if threads == 1:
        raw, examined = _backend.search_pairs(
            spec.lo, spec.hi, spec.set_size, spec.min_degree
        )
    else:
        buckets = _backend.pure.bucket_subsets(
            spec.lo, spec.hi, spec.set_size, spec.min_degree
        )
        raw = []
        examined = 0
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for found, count in pool.map(
                lambda group: _backend.pure.check_group(group, spec.min_degree),
                buckets.values(),
            ):
                raw.extend(found)
                examined += count
    pairs = []
    for u, v in sorted(_orient(a, b) for a, b in raw):
        degree = pte.pair_degree(u, v)
        pair = PtePair(u_set=u, v_set=v, claimed_n=degree + 1)
        report = naive_verify(pair)
        if not report.is_valid or degree < spec.min_degree:
            raise AssertionError(f"search produced a bad pair: {pair}")
        pairs.append(pair)
    return SearchResult(pairs=tuple(pairs), examined=examined, found=len(pairs))


@dataclass(frozen=True)
class MethodEntry:
    """One difference pair and the affine witness reproducing it, if any."""

    diff_index: int
    pair: PtePair
    scale: int | None
    offset: int | None

    def to_json_dict(self) -> dict:
        doc: dict = {"m": self.diff_index, "pair": self.pair.to_json_dict()}
        if self.scale is not None:
            doc["p"] = self.scale
            doc["l"] = self.offset
        return doc


@dataclass(frozen=True)
class MethodComparison:
    """Descriptive comparison of the two generation methods.

    matched/unmatched split the difference pairs by whether some affine
    map within bounds reproduces them exactly (as unordered set pairs).
    affine_only_count is the number of distinct affine pairs, over the
    same sequence indices and bounds, that no difference pair equals;
    affine_only_sample holds (seq_index, scale, offset) witnesses for the
    first few.
    """

    matched: tuple[MethodEntry, ...]
    unmatched: tuple[MethodEntry, ...]
    affine_only_count: int
    affine_only_sample: tuple[tuple[int, int, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "matched": [e.to_json_dict() for e in self.matched],
            "unmatched": [e.to_json_dict() for e in self.unmatched],
            "affine_only": {
                "count": self.affine_only_count,
                "sample": [
                    {"seq_index": n, "p": p, "l": l}
                    for n, p, l in self.affine_only_sample
                ],
            },
        }


def _pair_digest(a: tuple[int, ...], b: tuple[int, ...]) -> bytes:
    u, v = _orient(a, b)
    return hashlib.sha256(repr((u, v)).encode()).digest()


def compare_methods(
    m_max: int,
    p_bound: int,
    l_bound: int,
    *,
    budget: int = DEFAULT_BUDGET,
    cap: int | None = DEFAULT_CAP,
    sample_size: int = 5,
) -> MethodComparison:
    """Empirically compare the two pair-generation methods.

    For each m in 1..m_max, checks whether the difference pair equals the
    affine image of the supports of sequence 2m+1 under any map with
    |scale| <= p_bound, |offset| <= l_bound, and counts the distinct
    affine pairs no difference pair matches.  Purely descriptive — the
    result asserts nothing about either method.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    if p_bound < 1:
        raise ValueError(f"p_bound must be >= 1, got {p_bound}")
    if l_bound < 0:
        raise ValueError(f"l_bound must be >= 0, got {l_bound}")
    maps_count = 2 * p_bound * (2 * l_bound + 1)
    work = sum(
        maps_count * pseq.length_of(2 * m + 1) for m in range(1, m_max + 1)
    )
    if work > budget:
        raise WorkBudgetError(work, budget)

    scales = [p for p in range(-p_bound, p_bound + 1) if p != 0]
    matched = []
    unmatched = []
    affine_only = 0
    sample: list[tuple[int, int, int]] = []
    for m in range(1, m_max + 1):
        dpair = pte.pair_from_difference(m, cap=cap)
        diff_u, diff_v = dpair.u_set, dpair.v_set
        n = 2 * m + 1
        supports = pseq.support_sets(pseq.generate(n, cap=cap))
        xs = sorted(supports.x_set)
        ys = sorted(supports.y_set | {0})  # position 0 joins the +1 side
        witness: tuple[int, int] | None = None
        seen: set[bytes] = set()
        for p in scales:
            for l in range(-l_bound, l_bound + 1):
                u = tuple(p * i + l for i in xs)
                v = tuple(p * i + l for i in ys)
                if p < 0:
                    u = u[::-1]
                    v = v[::-1]
                hit = (u == diff_u and v == diff_v) or (
                    u == diff_v and v == diff_u
                )
                if hit:
                    if witness is None:
                        witness = (p, l)
                    continue
                digest = _pair_digest(u, v)
                if digest not in seen:
                    seen.add(digest)
                    if len(sample) < sample_size:
                        sample.append((n, p, l))
        affine_only += len(seen)
        entry = MethodEntry(
            diff_index=m,
            pair=dpair,
            scale=witness[0] if witness else None,
            offset=witness[1] if witness else None,
        )
        (matched if witness else unmatched).append(entry)
    return MethodComparison(
        matched=tuple(matched),
        unmatched=tuple(unmatched),
        affine_only_count=affine_only,
        affine_only_sample=tuple(sample),
    )
