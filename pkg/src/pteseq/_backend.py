"""Kernel backend selection and dispatch.

Two interchangeable kernel implementations exist: the compiled extension
`_kernels` (fast, 64-bit domain) and the pure-Python `_kernels_py` (any
size).  The active backend is chosen once at import time:

* ``PTESEQ_KERNELS=auto`` (default) — compiled if built, else pure;
* ``PTESEQ_KERNELS=c``    — compiled, error if missing;
* ``PTESEQ_KERNELS=py``   — pure, even when the extension is available.

Compiled kernels raise OverflowError when an argument or intermediate
value leaves the 64-bit domain; the dispatch helpers below retry such
calls on the pure backend, so callers never see the boundary.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

pure: ModuleType = _kernels_py
compiled: ModuleType | None
try:
    from . import _kernels as compiled  # type: ignore[no-redef]
except ImportError:
    compiled = None

_choice = os.environ.get("PTESEQ_KERNELS", "auto").strip().lower()
if _choice not in ("auto", "c", "py"):
    raise ImportError(
        f"PTESEQ_KERNELS must be one of auto/c/py, got {_choice!r}"
    )
if _choice == "c" and compiled is None:
    raise ImportError(
        "PTESEQ_KERNELS=c requested but the compiled kernels are not built"
    )

active: ModuleType = compiled if _choice != "py" and compiled else pure


def backend_name() -> str:
    """Name of the active backend: 'c' (compiled) or 'py' (pure)."""
    return "py" if active is pure else "c"


def _call(name: str, *args):
    func = getattr(active, name)
    if active is pure:
        return func(*args)
    try:
        return func(*args)
    except OverflowError:
        return getattr(pure, name)(*args)


def sequence_lengths(n: int) -> list[int]:
    return _call("sequence_lengths", n)


def grow_codes(codes: bytes, mirror: bool) -> bytes:
    return _call("grow_codes", codes, mirror)


def materialize_codes(n: int) -> bytes:
    return _call("materialize_codes", n)


def pack_codes(codes: bytes) -> bytes:
    return _call("pack_codes", codes)


def unpack_codes(packed: bytes, count: int) -> bytes:
    return _call("unpack_codes", packed, count)


def code_at(n: int, i: int) -> int:
    return _call("code_at", n, i)


def extract_codes(n: int, start: int, stop: int) -> bytes:
    return _call("extract_codes", n, start, stop)


def search_pairs(lo: int, hi: int, m: int, d: int):
    """Dispatch the subset search, guarding the compiled 64-bit domain.

    Power sums inside the kernel reach m * max(|lo|, |hi|)^max(d, 2); the
    compiled path is only taken when that bound fits comfortably in 64
    bits.
    """
    if active is not pure:
        base = max(abs(lo), abs(hi), 1)
        if m * base ** max(d, 2) < 2**62:
            return active.search_pairs(lo, hi, m, d)
    return pure.search_pairs(lo, hi, m, d)
