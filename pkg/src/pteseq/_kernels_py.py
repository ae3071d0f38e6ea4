"""Pure-Python kernels: sequence storage, virtual access, and subset search.

This module is one of two interchangeable backends (see `_backend`); the
other is the compiled extension `_kernels`.  Both expose the same functions
with identical semantics.  The compiled backend is restricted to the 64-bit
integer domain and raises OverflowError outside it; this one works at any
size.

Element codes: 0 = zero, 1 = plus one, 2 = minus one.  The packed form
stores four codes per byte, little-endian within the byte (element i sits
in byte i >> 2 at bit offset 2 * (i & 3)).
"""

from __future__ import annotations

from itertools import combinations

CODE_ZERO = 0
CODE_PLUS = 1
CODE_MINUS = 2

# Swaps the plus/minus codes, fixes zero.
_NEGATE = bytes.maketrans(bytes((0, 1, 2)), bytes((0, 2, 1)))


def sequence_lengths(n: int) -> list[int]:
    """Element counts of the first n sequences, by the length recurrence."""
    out = [2]
    for idx in range(1, n):
        out.append(2 * out[-1] if idx % 2 else 2 * out[-1] - 1)
    return out


def grow_codes(codes: bytes, mirror: bool) -> bytes:
    """One construction step: mirror-append, or center-zero anti-mirror."""
    if mirror:
        return codes + codes[::-1]
    core = codes[:-1]
    return core + b"\x00" + core[::-1].translate(_NEGATE)


def materialize_codes(n: int) -> bytes:
    """Unpacked code string of the n-th sequence, built in one buffer."""
    lengths = sequence_lengths(n)
    buf = bytearray(lengths[-1])
    buf[0] = CODE_PLUS
    buf[1] = CODE_MINUS
    cur = 2
    for idx in range(1, n):
        if idx % 2:
            buf[cur : 2 * cur] = buf[cur - 1 :: -1]
            cur *= 2
        else:
            k = cur - 1
            buf[k] = CODE_ZERO
            buf[k + 1 : 2 * k + 1] = buf[k - 1 :: -1].translate(_NEGATE)
            cur = 2 * k + 1
    return bytes(buf)


def pack_codes(codes: bytes) -> bytes:
    """Pack one code per byte into four codes per byte.

    Every input byte must be a valid code (< 4); anything larger would
    bleed into the neighboring field.
    """
    pad = -len(codes) % 4
    if pad:
        codes = codes + b"\x00" * pad
    q = len(codes) // 4
    acc = (
        int.from_bytes(codes[0::4], "little")
        | int.from_bytes(codes[1::4], "little") << 2
        | int.from_bytes(codes[2::4], "little") << 4
        | int.from_bytes(codes[3::4], "little") << 6
    )
    return acc.to_bytes(q, "little")


def unpack_codes(packed: bytes, count: int) -> bytes:
    """Inverse of pack_codes, truncated to the leading `count` codes."""
    q = len(packed)
    acc = int.from_bytes(packed, "little")
    mask = int.from_bytes(b"\x03" * q, "little")
    out = bytearray(4 * q)
    out[0::4] = (acc & mask).to_bytes(q, "little")
    out[1::4] = (acc >> 2 & mask).to_bytes(q, "little")
    out[2::4] = (acc >> 4 & mask).to_bytes(q, "little")
    out[3::4] = (acc >> 6 & mask).to_bytes(q, "little")
    return bytes(out[:count])


def code_at(n: int, i: int) -> int:
    """Element code at position i of sequence n, without materializing.

    Walks the construction backwards, reflecting the position through
    whichever clause built each level; O(n) time, O(n) length table.
    """
    lengths = sequence_lengths(n)
    negated = False
    while n > 1:
        prev_len = lengths[n - 2]
        if (n - 1) % 2:
            if i >= prev_len:
                i = 2 * prev_len - 1 - i
        else:
            k = prev_len - 1
            if i == k:
                return CODE_ZERO
            if i > k:
                i = 2 * k - i
                negated = not negated
        n -= 1
    code = CODE_PLUS if i == 0 else CODE_MINUS
    if negated:
        code = CODE_MINUS if code == CODE_PLUS else CODE_PLUS
    return code


def extract_codes(n: int, start: int, stop: int) -> bytes:
    """Codes of the half-open window [start, stop) of sequence n.

    Maps the window down level by level instead of touching single
    elements, so streaming a long sequence in chunks costs roughly
    output size, not output size times depth.  Recursion depth is n.
    """
    lengths = sequence_lengths(n)
    return bytes(_extract(n, lengths, start, stop))


def _extract(n: int, lengths: list[int], start: int, stop: int) -> bytes:
    if start >= stop:
        return b""
    if n == 1:
        return bytes((CODE_PLUS, CODE_MINUS))[start:stop]
    prev_len = lengths[n - 2]
    if (n - 1) % 2:
        left = _extract(n - 1, lengths, start, min(stop, prev_len))
        if stop <= prev_len:
            return left
        rs = max(start, prev_len)
        right = _extract(n - 1, lengths, 2 * prev_len - stop, 2 * prev_len - rs)
        return left + right[::-1]
    k = prev_len - 1
    parts = []
    if start < k:
        parts.append(_extract(n - 1, lengths, start, min(stop, k)))
    if start <= k < stop:
        parts.append(b"\x00")
    if stop > k + 1:
        rs = max(start, k + 1)
        seg = _extract(n - 1, lengths, 2 * k - (stop - 1), 2 * k - rs + 1)
        parts.append(seg[::-1].translate(_NEGATE))
    return b"".join(parts)


def bucket_subsets(
    lo: int, hi: int, m: int, d: int
) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Group all m-subsets of [lo, hi] by low power-sum signature.

    The signature covers exponents 1..min(d, 2); two sets with equal power
    sums through d necessarily share it, so pairing within buckets loses
    nothing.
    """
    sig_exps = range(1, min(d, 2) + 1)
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for sub in combinations(range(lo, hi + 1), m):
        key = tuple(sum(x**s for x in sub) for s in sig_exps)
        buckets.setdefault(key, []).append(sub)
    return buckets


def check_group(
    group: list[tuple[int, ...]], d: int
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], int]:
    """Disjoint pairs within one bucket with equal power sums for s=1..d.

    Returns (pairs, number of pair comparisons made).  Exponents 1..2 are
    already equal via the bucket key.
    """
    pairs = []
    examined = 0
    for i, a in enumerate(group):
        sa = frozenset(a)
        for b in group[i + 1 :]:
            examined += 1
            if not sa.isdisjoint(b):
                continue
            if all(
                sum(x**s for x in a) == sum(x**s for x in b)
                for s in range(3, d + 1)
            ):
                pairs.append((a, b))
    return pairs, examined


def search_pairs(
    lo: int, hi: int, m: int, d: int
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], int]:
    """All disjoint m-subset pairs of [lo, hi] with equal sums for s=1..d."""
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    examined = 0
    for group in bucket_subsets(lo, hi, m, d).values():
        found, count = check_group(group, d)
        pairs.extend(found)
        examined += count
    return pairs, examined
