"""Equal-power-sum pairs: generation by two methods, degrees, certificates.

A pair here is two disjoint finite integer sets of equal size whose power
sums agree for every exponent 0..n-1 and differ at n.  Method one maps the
sign supports of a single sequence through an affine image; method two
takes set differences of supports between two consecutive sequences.
Verification scans the exponents directly with exact arithmetic and
reports a full certificate either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import pseq
from .errors import PairFormatError
from .pseq import DEFAULT_CAP, PSeq

_CODE_PLUS = pseq._CODE_PLUS
_CODE_MINUS = pseq._CODE_MINUS

METHOD_AFFINE = "affine"
METHOD_DIFFERENCE = "difference"
METHOD_EXTERNAL = "external"

FAIL_OVERLAP = "overlap"
FAIL_CARDINALITY = "cardinality-mismatch"
FAIL_EARLY_DIFFERENCE = "early-difference"
FAIL_NO_DIFFERENCE = "no-difference-at-n"


@dataclass(frozen=True)
class AffineMap:
    """The integer map i -> scale * i + offset, with nonzero scale."""

    scale: int
    offset: int

    def __post_init__(self) -> None:
        if self.scale == 0:
            raise ValueError("affine scale must be nonzero")

    def __call__(self, i: int) -> int:
        return self.scale * i + self.offset


@dataclass(frozen=True)
class Provenance:
    """How a pair was produced; fields beyond `method` apply selectively."""

    method: str
    seq_index: int | None = None
    scale: int | None = None
    offset: int | None = None
    diff_index: int | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {"method": self.method}
        if self.seq_index is not None:
            doc["seq_index"] = self.seq_index
        if self.scale is not None:
            doc["p"] = self.scale
        if self.offset is not None:
            doc["l"] = self.offset
        if self.diff_index is not None:
            doc["m"] = self.diff_index
        return doc


EXTERNAL = Provenance(method=METHOD_EXTERNAL)


@dataclass(frozen=True)
class PtePair:
    """Two integer sets with a claimed first differing exponent.

    u_set and v_set are kept sorted; generated pairs satisfy the
    disjointness and equal-cardinality invariants, while pairs read from
    external documents may violate them — verify_pair reports rather
    than assumes.
    """

    u_set: tuple[int, ...]
    v_set: tuple[int, ...]
    claimed_n: int
    provenance: Provenance = EXTERNAL

    def to_json_dict(self) -> dict:
        return {
            "u": list(self.u_set),
            "v": list(self.v_set),
            "n": self.claimed_n,
            "provenance": self.provenance.to_json_dict(),
        }


@dataclass(frozen=True)
class VerificationReport:
    """Certificate from scanning a pair's power sums exponent by exponent.

    sums_table rows are (exponent, sum over u_set, sum over v_set) for
    every exponent checked, i.e. 0..checked_through.  first_difference is
    the minimal exponent with differing sums, when one was found; for
    disjoint nonempty equal-size sets it always exists and is at most the
    set size, since equal power sums through the size force equal sets.
    """

    is_valid: bool
    checked_through: int
    first_difference: int | None
    sums_table: tuple[tuple[int, int, int], ...]
    failure_reason: str | None

    def to_json_dict(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "checked_through": self.checked_through,
            "first_difference": self.first_difference,
            "sums_table": [
                [s, str(su), str(sv)] for s, su, sv in self.sums_table
            ],
            "failure_reason": self.failure_reason,
        }


def power_sum(values: Iterable[int], s: int) -> int:
    """Exact sum of x**s over the values, with 0**0 = 1."""
    if s < 0:
        raise ValueError(f"exponent must be >= 0, got {s}")
    return sum(x**s for x in values)


def pair_from_affine(
    n: int,
    amap: AffineMap,
    *,
    cap: int | None = DEFAULT_CAP,
    virtual: bool = False,
) -> PtePair:
    """Image of sequence n's sign supports under an affine map.

    u_set collects scale*i + offset over positions carrying -1, v_set over
    positions carrying +1 — including position 0, which always carries +1.
    The result is a valid pair whose sums first differ exactly at n.
    Requires n >= 2; with virtual=True the sequence is streamed instead of
    materialized and the cap does not apply.
    """
    if n < 2:
        raise ValueError(f"affine pairs require sequence index >= 2, got {n}")
    source: PSeq | int = n if virtual else pseq.generate(n, cap=cap)
    u: list[int] = []
    v: list[int] = []
    for base, chunk in pseq._iter_code_chunks(source):
        for offset, code in enumerate(chunk):
            if code == _CODE_MINUS:
                u.append(amap(base + offset))
            elif code == _CODE_PLUS:
                v.append(amap(base + offset))
    return PtePair(
        u_set=tuple(sorted(u)),
        v_set=tuple(sorted(v)),
        claimed_n=n,
        provenance=Provenance(
            method=METHOD_AFFINE,
            seq_index=n,
            scale=amap.scale,
            offset=amap.offset,
        ),
    )


def pair_from_difference(
    m: int, *, cap: int | None = DEFAULT_CAP, virtual: bool = False
) -> PtePair:
    """Support-set differences between sequences 2m+2 and 2m+1.

    The smaller sequence's supports are subsets of the larger one's, and
    the differences form equal-size disjoint sets whose power sums agree
    for every s in 0..2m.  claimed_n = 2m+1 records that equality range;
    whether the sums differ exactly at 2m+1 is measured by verify_pair,
    not assumed here.  m = 0 is permitted as a degenerate case (equality
    at s = 0 only).
    """
    if m < 0:
        raise ValueError(f"difference index must be >= 0, got {m}")
    small_n, big_n = 2 * m + 1, 2 * m + 2
    if virtual:
        small = pseq.support_sets(small_n)
        big = pseq.support_sets(big_n)
    else:
        small = pseq.support_sets(pseq.generate(small_n, cap=cap))
        big = pseq.support_sets(pseq.generate(big_n, cap=cap))
    return PtePair(
        u_set=tuple(sorted(big.x_set - small.x_set)),
        v_set=tuple(sorted(big.y_set - small.y_set)),
        claimed_n=small_n,
        provenance=Provenance(method=METHOD_DIFFERENCE, diff_index=m),
    )


def verify_pair(pair: PtePair) -> VerificationReport:
    """Check the full pair definition and return a certificate.

    Never raises: structural failures (overlap, size mismatch) and sum
    failures (difference before the claimed exponent, or agreement at it)
    are encoded in failure_reason.  The scan runs from exponent 0 until
    the first difference, bounded by max(claimed_n, set size).
    """
    u, v = pair.u_set, pair.v_set
    if set(u) & set(v):
        return VerificationReport(False, 0, None, (), FAIL_OVERLAP)
    if len(u) != len(v):
        return VerificationReport(False, 0, None, (), FAIL_CARDINALITY)
    limit = max(pair.claimed_n, len(u))
    table = []
    first = None
    for s in range(limit + 1):
        su, sv = power_sum(u, s), power_sum(v, s)
        table.append((s, su, sv))
        if su != sv:
            first = s
            break
    checked = table[-1][0]
    if first == pair.claimed_n:
        return VerificationReport(True, checked, first, tuple(table), None)
    if first is not None and first < pair.claimed_n:
        reason = FAIL_EARLY_DIFFERENCE
    else:  # sums agreed at the claimed exponent (or sets are empty)
        reason = FAIL_NO_DIFFERENCE
    return VerificationReport(False, checked, first, tuple(table), reason)


def pair_degree(u_set: Iterable[int], v_set: Iterable[int]) -> int:
    """Largest d with power sums equal for every s in 0..d.

    Requires disjoint nonempty sets of equal size.  Equal power sums for
    s = 1..size would force the sets to be equal (Newton's identities),
    so the scan is guaranteed to stop at d < size.
    """
    u = tuple(sorted(set(u_set)))
    v = tuple(sorted(set(v_set)))
    if not u:
        raise ValueError("sets must be nonempty")
    if set(u) & set(v):
        raise ValueError("sets overlap")
    if len(u) != len(v):
        raise ValueError("sets differ in cardinality")
    for s in range(1, len(u) + 1):
        if power_sum(u, s) != power_sum(v, s):
            return s - 1
    raise AssertionError(
        "unreachable: disjoint nonempty equal-size sets must differ "
        "by exponent len(u)"
    )


def pair_from_json_dict(doc: dict) -> PtePair:
    """Parse a pair document, canonicalizing element order within sets.

    Raises PairFormatError on schema violations.  Semantic violations
    (overlap, size mismatch) are preserved for verify_pair to report.
    """
    if not isinstance(doc, dict):
        raise PairFormatError("pair document must be a JSON object")
    for key in ("u", "v", "n"):
        if key not in doc:
            raise PairFormatError(f"pair document missing {key!r}")
    sets = {}
    for key in ("u", "v"):
        raw = doc[key]
        if not isinstance(raw, list) or any(
            not isinstance(x, int) or isinstance(x, bool) for x in raw
        ):
            raise PairFormatError(f"{key!r} must be a list of integers")
        sets[key] = tuple(sorted(set(raw)))
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise PairFormatError("'n' must be a positive integer")
    provenance = EXTERNAL
    if "provenance" in doc:
        raw_prov = doc["provenance"]
        if not isinstance(raw_prov, dict):
            raise PairFormatError("'provenance' must be an object")
        method = raw_prov.get("method")
        if method not in (METHOD_AFFINE, METHOD_DIFFERENCE, METHOD_EXTERNAL):
            raise PairFormatError(f"unknown provenance method: {method!r}")
        fields = {}
        for key, attr in (
            ("seq_index", "seq_index"),
            ("p", "scale"),
            ("l", "offset"),
            ("m", "diff_index"),
        ):
            if key in raw_prov:
                value = raw_prov[key]
                if not isinstance(value, int) or isinstance(value, bool):
                    raise PairFormatError(
                        f"provenance field {key!r} must be an integer"
                    )
                fields[attr] = value
        provenance = Provenance(method=method, **fields)
    return PtePair(
        u_set=sets["u"], v_set=sets["v"], claimed_n=n, provenance=provenance
    )
