"""Exact weighted power sums and the attached shift polynomials.

The t-th moment of a sequence is the integer sum of a_i * i**t over all
element positions, with 0**0 = 1.  The shift polynomial for exponent s is
the sum of a_i * (i + x)**s; its coefficient on x**j is C(s, j) times the
(s - j)-th moment, which is how everything here is computed.  All
arithmetic is exact: Python integers and fractions throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import pseq
from .pseq import PSeq

_CODE_PLUS = pseq._CODE_PLUS
_CODE_MINUS = pseq._CODE_MINUS


@dataclass(frozen=True)
class MomentVector:
    """Moments 0..T of one sequence, as exact integers."""

    seq_index: int
    values: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.seq_index, "moments": [str(v) for v in self.values]}

    @classmethod
    def from_json_dict(cls, doc: dict) -> MomentVector:
        return cls(
            seq_index=int(doc["n"]),
            values=tuple(int(v) for v in doc["moments"]),
        )


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial c_0 + c_1*x + ... + c_s*x**s.

    Records the sequence index and shift exponent it was derived from;
    trailing zero coefficients are kept so the list always has s + 1
    entries.
    """

    seq_index: int
    shift_exponent: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int | None:
        """Index of the last nonzero coefficient; None when identically zero."""
        for j in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[j]:
                return j
        return None

    def to_json_dict(self) -> dict:
        return {
            "n": self.seq_index,
            "s": self.shift_exponent,
            "coefficients": [str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> IntPolynomial:
        return cls(
            seq_index=int(doc["n"]),
            shift_exponent=int(doc["s"]),
            coefficients=tuple(int(c) for c in doc["coefficients"]),
        )


def moment(source: PSeq | int, t: int) -> int:
    """Exact t-th moment by direct summation.

    Accepts a materialized sequence or a bare index; the virtual path
    streams fixed-size chunks and never holds the whole sequence.
    """
    if t < 0:
        raise ValueError(f"moment exponent must be >= 0, got {t}")
    total = 0
    for base, chunk in pseq._iter_code_chunks(source):
        for offset, code in enumerate(chunk):
            if code == _CODE_PLUS:
                total += (base + offset) ** t
            elif code == _CODE_MINUS:
                total -= (base + offset) ** t
    return total


def moments_fast(n: int, t_max: int) -> MomentVector:
    """Moments 0..t_max of sequence n without materializing it.

    Walks the construction index by index, updating the whole moment
    vector through each clause with a binomial transform: appending the
    mirror of a length-(k+1) prefix adds, for each t, the sum over j of
    C(t, j) * (2k+1)**(t-j) * (-1)**j * M_j; the center-zero clause
    subtracts the analogous sum with base 2k.  Time is O(n * t_max**2)
    big-integer operations.
    """
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    if t_max < 0:
        raise ValueError(f"moment exponent must be >= 0, got {t_max}")
    # Sequence 1 is <+1, -1>: M_0 = 0, M_t = -1 for t >= 1.
    values = [0] + [-1] * t_max
    length = 2
    for idx in range(1, n):
        k = length - 1
        if idx % 2:
            base, sign, length = 2 * k + 1, 1, 2 * length
        else:
            base, sign, length = 2 * k, -1, 2 * length - 1
        powers = [1]
        for _ in range(t_max):
            powers.append(powers[-1] * base)
        new_values = []
        for t in range(t_max + 1):
            acc = 0
            for j in range(t + 1):
                term = comb(t, j) * powers[t - j] * values[j]
                acc += -term if j % 2 else term
            new_values.append(values[t] + sign * acc)
        values = new_values
    return MomentVector(seq_index=n, values=tuple(values))


def f_poly_coeffs(n: int, s: int) -> IntPolynomial:
    """Coefficients of the shift polynomial of sequence n at exponent s.

    The degree comes out as s - n when s >= n and the polynomial is
    identically zero when s < n; both follow from the moments, nothing is
    assumed.
    """
    if s < 0:
        raise ValueError(f"shift exponent must be >= 0, got {s}")
    mv = moments_fast(n, s)
    coeffs = tuple(comb(s, j) * mv.values[s - j] for j in range(s + 1))
    return IntPolynomial(seq_index=n, shift_exponent=s, coefficients=coeffs)


def f_eval(n: int, s: int, x: Fraction | int) -> Fraction:
    """Exact value of the shift polynomial at a rational point."""
    point = Fraction(x)
    poly = f_poly_coeffs(n, s)
    acc = Fraction(0)
    for c in reversed(poly.coefficients):
        acc = acc * point + c
    return acc


def f_degree(n: int, s: int) -> int | None:
    """Degree of the shift polynomial; None when it is identically zero."""
    return f_poly_coeffs(n, s).degree
