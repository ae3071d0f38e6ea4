# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: sequence storage, virtual access, and subset search.

Mirrors `_kernels_py` function for function; see that module for the code
and packing conventions.  Everything here works in the signed 64-bit
domain and raises OverflowError beyond it, which the dispatcher in
`_backend` turns into a pure-Python fallback.
"""

from libc.stdlib cimport free, malloc

CODE_ZERO = 0
CODE_PLUS = 1
CODE_MINUS = 2

cdef unsigned char C_ZERO = 0
cdef unsigned char C_PLUS = 1
cdef unsigned char C_MINUS = 2

# Lengths double each step; stop well before signed-64 wraparound.
cdef long long LENGTH_LIMIT = <long long> 1 << 61


cdef inline unsigned char _negate(unsigned char code) nogil:
    return 3 - code if code else 0


cdef int _fill_lengths(long long n, long long *lengths) except -1:
    cdef long long length = 2
    cdef long long idx
    lengths[0] = 2
    for idx in range(1, n):
        if length > LENGTH_LIMIT:
            raise OverflowError("sequence length exceeds the 64-bit kernel domain")
        length = 2 * length if idx % 2 else 2 * length - 1
        lengths[idx] = length
    return 0


def sequence_lengths(long long n):
    """Element counts of the first n sequences, by the length recurrence."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    cdef long long *lengths = <long long *> malloc(n * sizeof(long long))
    if lengths is NULL:
        raise MemoryError()
    cdef long long idx
    try:
        _fill_lengths(n, lengths)
        return [lengths[idx] for idx in range(n)]
    finally:
        free(lengths)


def grow_codes(const unsigned char[::1] codes, bint mirror):
    """One construction step: mirror-append, or center-zero anti-mirror."""
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t k, i
    out = bytearray(2 * n if mirror else 2 * n - 1)
    cdef unsigned char[::1] view = out
    if mirror:
        for i in range(n):
            view[i] = codes[i]
            view[2 * n - 1 - i] = codes[i]
    else:
        k = n - 1
        for i in range(k):
            view[i] = codes[i]
            view[2 * k - i] = _negate(codes[i])
        view[k] = C_ZERO
    return bytes(out)


def materialize_codes(long long n):
    """Unpacked code string of the n-th sequence, built in one buffer."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    cdef long long *lengths = <long long *> malloc(n * sizeof(long long))
    if lengths is NULL:
        raise MemoryError()
    try:
        _fill_lengths(n, lengths)
        out = bytearray(lengths[n - 1])
    finally:
        free(lengths)
    cdef unsigned char[::1] view = out
    cdef long long cur = 2, idx, i, k
    view[0] = C_PLUS
    view[1] = C_MINUS
    for idx in range(1, n):
        if idx % 2:
            for i in range(cur):
                view[2 * cur - 1 - i] = view[i]
            cur = 2 * cur
        else:
            k = cur - 1
            for i in range(k):
                view[2 * k - i] = _negate(view[i])
            view[k] = C_ZERO
            cur = 2 * k + 1
    return bytes(out)


def pack_codes(const unsigned char[::1] codes):
    """Pack one code per byte into four codes per byte."""
    cdef Py_ssize_t n = codes.shape[0]
    out = bytearray((n + 3) // 4)
    cdef unsigned char[::1] view = out
    cdef Py_ssize_t i
    for i in range(n):
        view[i >> 2] = view[i >> 2] | (codes[i] << (2 * (i & 3)))
    return bytes(out)


def unpack_codes(const unsigned char[::1] packed, long long count):
    """Inverse of pack_codes, truncated to the leading `count` codes."""
    if count < 0 or count > 4 * packed.shape[0]:
        raise ValueError("count out of range for the packed payload")
    cdef Py_ssize_t n = count
    out = bytearray(n)
    cdef unsigned char[::1] view = out
    cdef Py_ssize_t i
    for i in range(n):
        view[i] = (packed[i >> 2] >> (2 * (i & 3))) & 3
    return bytes(out)


def code_at(long long n, long long i):
    """Element code at position i of sequence n, without materializing."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    cdef long long *lengths = <long long *> malloc(n * sizeof(long long))
    if lengths is NULL:
        raise MemoryError()
    cdef bint negated = False
    cdef long long level = n, prev_len, k, pos = i
    cdef unsigned char code
    try:
        _fill_lengths(n, lengths)
        if pos < 0 or pos >= lengths[n - 1]:
            raise IndexError(f"position {i} out of range for sequence {n}")
        while level > 1:
            prev_len = lengths[level - 2]
            if (level - 1) % 2:
                if pos >= prev_len:
                    pos = 2 * prev_len - 1 - pos
            else:
                k = prev_len - 1
                if pos == k:
                    return CODE_ZERO
                if pos > k:
                    pos = 2 * k - pos
                    negated = not negated
            level -= 1
    finally:
        free(lengths)
    code = C_PLUS if pos == 0 else C_MINUS
    if negated:
        code = _negate(code)
    return code


cdef int _write_window(
    long long level,
    long long s,
    long long e,
    unsigned char *out,
    long long pos,
    bint rev,
    bint neg,
    long long *lengths,
) except -1:
    # Writes the window [s, e) of `level` into out[pos : pos + e - s],
    # reversed when rev, sign-flipped when neg.  Output slot of original
    # index j is pos + (j - s), or pos + (e - 1 - j) under rev.
    cdef long long prev_len, k, e1, s1, j
    cdef unsigned char code
    if e <= s:
        return 0
    if level == 1:
        for j in range(s, e):
            code = C_PLUS if j == 0 else C_MINUS
            if neg:
                code = _negate(code)
            out[pos + (e - 1 - j if rev else j - s)] = code
        return 0
    prev_len = lengths[level - 2]
    if (level - 1) % 2:
        # Mirror step: [0, prev_len) verbatim, [prev_len, 2*prev_len)
        # reflected through 2*prev_len - 1.
        if e <= prev_len:
            return _write_window(level - 1, s, e, out, pos, rev, neg, lengths)
        if s >= prev_len:
            return _write_window(
                level - 1, 2 * prev_len - e, 2 * prev_len - s,
                out, pos, not rev, neg, lengths,
            )
        _write_window(
            level - 1, s, prev_len,
            out, pos + (e - prev_len if rev else 0), rev, neg, lengths,
        )
        _write_window(
            level - 1, 2 * prev_len - e, prev_len,
            out, pos + (0 if rev else prev_len - s), not rev, neg, lengths,
        )
        return 0
    # Center step: [0, k) verbatim, a zero at k, (k, 2k] reflected through
    # 2k and negated.
    k = prev_len - 1
    if s < k:
        e1 = e if e < k else k
        _write_window(
            level - 1, s, e1,
            out, pos + (e - e1 if rev else 0), rev, neg, lengths,
        )
    if s <= k < e:
        out[pos + (e - 1 - k if rev else k - s)] = C_ZERO
    if e > k + 1:
        s1 = s if s > k + 1 else k + 1
        _write_window(
            level - 1, 2 * k - e + 1, 2 * k - s1 + 1,
            out, pos + (0 if rev else s1 - s), not rev, not neg, lengths,
        )
    return 0


def extract_codes(long long n, long long start, long long stop):
    """Codes of the half-open window [start, stop) of sequence n."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    cdef long long *lengths = <long long *> malloc(n * sizeof(long long))
    if lengths is NULL:
        raise MemoryError()
    cdef long long size
    cdef unsigned char[::1] view
    try:
        _fill_lengths(n, lengths)
        if start < 0 or stop > lengths[n - 1] or start > stop:
            raise ValueError("window out of range")
        size = stop - start
        out = bytearray(size)
        if size:
            view = out
            _write_window(n, start, stop, &view[0], 0, False, False, lengths)
        return bytes(out)
    finally:
        free(lengths)


cdef long long _int_pow(long long x, int s) nogil:
    cdef long long out = 1
    cdef int i
    for i in range(s):
        out = out * x
    return out


def search_pairs(long long lo, long long hi, int m, int d):
    """All disjoint m-subset pairs of [lo, hi] with equal sums for s=1..d.

    The caller must ensure m * max(|lo|, |hi|, 1)**max(d, 2) fits in a
    signed 64-bit integer; the dispatcher's guard does.
    """
    cdef long long size = hi - lo + 1
    pairs = []
    if m < 1 or m > size:
        return pairs, 0
    cdef long long *idx = <long long *> malloc(m * sizeof(long long))
    cdef long long *flat = NULL
    if idx is NULL:
        raise MemoryError()
    cdef dict buckets = {}
    cdef long long s1, s2, val
    cdef long long examined = 0
    cdef Py_ssize_t count, a, b, j, t
    cdef int s
    cdef bint disjoint, equal
    cdef long long sa, sb
    cdef long long ai, bi
    try:
        # Enumerate m-subsets in lexicographic order, bucketing by the
        # power-sum signature over exponents 1..min(d, 2).
        for j in range(m):
            idx[j] = j
        while True:
            s1 = 0
            s2 = 0
            for j in range(m):
                val = lo + idx[j]
                s1 += val
                s2 += val * val
            if d >= 2:
                key = (s1, s2)
            elif d == 1:
                key = (s1,)
            else:
                key = ()
            sub = tuple([lo + idx[j] for j in range(m)])
            group = buckets.get(key)
            if group is None:
                buckets[key] = [sub]
            else:
                group.append(sub)
            j = m - 1
            while j >= 0 and idx[j] == size - m + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for t in range(j + 1, m):
                idx[t] = idx[t - 1] + 1

        for group in buckets.values():
            count = len(group)
            if count < 2:
                continue
            flat = <long long *> malloc(count * m * sizeof(long long))
            if flat is NULL:
                raise MemoryError()
            for a in range(count):
                sub = group[a]
                for j in range(m):
                    flat[a * m + j] = sub[j]
            for a in range(count):
                for b in range(a + 1, count):
                    examined += 1
                    # Merge-scan for disjointness: both rows ascending.
                    disjoint = True
                    ai = 0
                    bi = 0
                    while ai < m and bi < m:
                        if flat[a * m + ai] == flat[b * m + bi]:
                            disjoint = False
                            break
                        if flat[a * m + ai] < flat[b * m + bi]:
                            ai += 1
                        else:
                            bi += 1
                    if not disjoint:
                        continue
                    equal = True
                    for s in range(3, d + 1):
                        sa = 0
                        sb = 0
                        for j in range(m):
                            sa += _int_pow(flat[a * m + j], s)
                            sb += _int_pow(flat[b * m + j], s)
                        if sa != sb:
                            equal = False
                            break
                    if equal:
                        pairs.append((group[a], group[b]))
            free(flat)
            flat = NULL
        return pairs, examined
    finally:
        free(idx)
        if flat is not NULL:
            free(flat)
