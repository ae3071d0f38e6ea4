"""Ternary sign sequences: construction, storage, streaming, supports.

The sequences live over {-1, 0, +1} and are built recursively from
``<+1, -1>`` by two alternating clauses: when the first and last elements
have opposite signs the sequence is extended by its own mirror image;
when they agree, the last element is replaced by a centered zero followed
by the negated mirror of the remainder.  Every function here works either
on a fully materialized sequence (dense, 2 bits per element) or on a
virtual one addressed purely by its index.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass, field

from . import _backend
from .errors import MalformedSequenceError, MaterializationCapError

#: Default ceiling on materialized length, in elements.
DEFAULT_CAP = 1 << 27

#: Elements per streamed chunk; a multiple of 4 so chunks stay byte-aligned
#: in the packed form.
CHUNK_SIZE = 1 << 16

_CODE_ZERO = _backend.pure.CODE_ZERO
_CODE_PLUS = _backend.pure.CODE_PLUS
_CODE_MINUS = _backend.pure.CODE_MINUS

_CODE_FOR_CHAR = {"0": _CODE_ZERO, "+": _CODE_PLUS, "-": _CODE_MINUS}
_CODE_TO_TEXT = bytes.maketrans(bytes(range(3)), b"0+-")


class Sign(enum.IntEnum):
    """A single sequence element."""

    MINUS = -1
    ZERO = 0
    PLUS = 1

    def __str__(self) -> str:  # "+1" / "-1" / "0"
        return "0" if self.value == 0 else f"{self.value:+d}"


_SIGN_FOR_CODE = (Sign.ZERO, Sign.PLUS, Sign.MINUS)


@dataclass(frozen=True)
class PSeq:
    """A materialized sequence: its 1-based index and packed elements."""

    index: int
    length: int
    packed: bytes = field(repr=False)

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"sequence index must be >= 1, got {self.index}")
        if self.length != length_of(self.index):
            raise ValueError(
                f"length {self.length} inconsistent with index {self.index}"
            )
        if len(self.packed) != (self.length + 3) // 4:
            raise ValueError("packed payload does not match length")

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> Sign:
        if not -self.length <= i < self.length:
            raise IndexError(f"position {i} out of range for length {self.length}")
        if i < 0:
            i += self.length
        code = self.packed[i >> 2] >> (2 * (i & 3)) & 3
        return _SIGN_FOR_CODE[code]

    def __iter__(self) -> Iterator[Sign]:
        for _, chunk in _iter_code_chunks(self):
            for code in chunk:
                yield _SIGN_FOR_CODE[code]

    def __str__(self) -> str:
        return encode_text(self)


@dataclass(frozen=True)
class SupportSets:
    """Positive element positions carrying -1 (x_set) and +1 (y_set).

    Position 0 is excluded by definition; since element 0 is always +1,
    x_set outnumbers y_set by exactly one.
    """

    x_set: frozenset[int]
    y_set: frozenset[int]


def length_of(n: int) -> int:
    """Element count of sequence n, without materializing it."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    length = 2
    for idx in range(1, n):
        length = 2 * length if idx % 2 else 2 * length - 1
    return length


def generate(n: int, *, cap: int | None = DEFAULT_CAP) -> PSeq:
    """Materialize sequence n.

    Refuses (with MaterializationCapError) when the sequence is longer
    than `cap` elements; virtual access via element_at or the streaming
    helpers has no such limit.
    """
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    length = length_of(n)
    if cap is not None and length > cap:
        raise MaterializationCapError(n, length, cap)
    codes = _backend.materialize_codes(n)
    return PSeq(index=n, length=length, packed=_backend.pack_codes(codes))


def next_pseq(seq: PSeq) -> PSeq:
    """Apply the unique applicable construction clause to seq.

    The clause is chosen by comparing the end elements, then checked
    against the index parity; a mismatch means the input is corrupted,
    not that the other clause should be tried.
    """
    first, last = seq[0], seq[-1]
    if first != Sign.PLUS or last == Sign.ZERO:
        raise MalformedSequenceError(
            f"sequence {seq.index} has invalid end elements {first}, {last}"
        )
    mirror = last == Sign.MINUS
    if mirror != bool(seq.index % 2):
        raise MalformedSequenceError(
            f"end elements of sequence {seq.index} select the wrong clause "
            f"for its index parity"
        )
    codes = _backend.unpack_codes(seq.packed, seq.length)
    grown = _backend.grow_codes(codes, mirror)
    return PSeq(
        index=seq.index + 1, length=len(grown), packed=_backend.pack_codes(grown)
    )


def element_at(n: int, i: int) -> Sign:
    """Element i of sequence n in O(n) time and memory, no materialization."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    if not 0 <= i < length_of(n):
        raise IndexError(f"position {i} out of range for sequence {n}")
    return _SIGN_FOR_CODE[_backend.code_at(n, i)]


def _iter_code_chunks(
    source: PSeq | int, chunk_size: int = CHUNK_SIZE
) -> Iterator[tuple[int, bytes]]:
    """Yield (base position, raw codes) over a sequence, in order.

    Accepts a materialized PSeq (chunks are unpacked slices) or a bare
    index (chunks are extracted virtually, never holding the whole
    sequence). Results are identical either way.
    """
    if chunk_size % 4:
        raise ValueError("chunk_size must be a multiple of 4")
    if isinstance(source, PSeq):
        for start in range(0, source.length, chunk_size):
            stop = min(start + chunk_size, source.length)
            piece = source.packed[start >> 2 : (stop + 3) >> 2]
            yield start, _backend.unpack_codes(piece, stop - start)
        return
    length = length_of(source)
    for start in range(0, length, chunk_size):
        stop = min(start + chunk_size, length)
        yield start, _backend.extract_codes(source, start, stop)


def iter_signs(source: PSeq | int) -> Iterator[Sign]:
    """All elements of a sequence in order, materialized or virtual."""
    for _, chunk in _iter_code_chunks(source):
        for code in chunk:
            yield _SIGN_FOR_CODE[code]


def support_sets(seq: PSeq | int) -> SupportSets:
    """Sign supports of a sequence (positions >= 1 only)."""
    minus = []
    plus = []
    for base, chunk in _iter_code_chunks(seq):
        for offset, code in enumerate(chunk):
            if code == _CODE_MINUS:
                minus.append(base + offset)
            elif code == _CODE_PLUS:
                plus.append(base + offset)
    plus.remove(0)  # position 0 is always +1 and excluded by definition
    return SupportSets(x_set=frozenset(minus), y_set=frozenset(plus))


def encode_text(seq: PSeq) -> str:
    """Text form of a sequence: one character per element over {+, -, 0}."""
    codes = _backend.unpack_codes(seq.packed, seq.length)
    return codes.translate(_CODE_TO_TEXT).decode("ascii")


def decode_text(text: str, n: int, *, cap: int | None = DEFAULT_CAP) -> PSeq:
    """Parse a text-form sequence and check it is exactly sequence n.

    Any deviation — foreign characters, wrong length, or a well-formed
    ternary string that simply isn't sequence n — raises
    MalformedSequenceError.  Validation regenerates the sequence, so the
    materialization cap applies.
    """
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    foreign = set(text) - set("+-0")
    if foreign:
        raise MalformedSequenceError(
            f"invalid characters in sequence text: {sorted(foreign)!r}"
        )
    if len(text) != length_of(n):
        raise MalformedSequenceError(
            f"text has {len(text)} elements but sequence {n} "
            f"has {length_of(n)}"
        )
    expected = generate(n, cap=cap)
    codes = bytes(_CODE_FOR_CHAR[ch] for ch in text)
    if _backend.pack_codes(codes) != expected.packed:
        raise MalformedSequenceError(
            f"text does not match sequence {n}"
        )
    return expected


def to_json_dict(seq: PSeq) -> dict:
    """JSON document for a sequence: {"n", "elements", "length"}."""
    return {"n": seq.index, "elements": encode_text(seq), "length": seq.length}


def from_json_dict(doc: dict, *, cap: int | None = DEFAULT_CAP) -> PSeq:
    """Parse and validate a sequence JSON document."""
    if not isinstance(doc, dict):
        raise MalformedSequenceError("sequence document must be an object")
    for key in ("n", "elements", "length"):
        if key not in doc:
            raise MalformedSequenceError(f"sequence document missing {key!r}")
    n, elements, length = doc["n"], doc["elements"], doc["length"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedSequenceError("sequence index must be an integer")
    if not isinstance(elements, str):
        raise MalformedSequenceError("elements must be a string")
    seq = decode_text(elements, n, cap=cap)
    if length != seq.length:
        raise MalformedSequenceError(
            f"declared length {length} does not match element count"
        )
    return seq
