"""Trace kernel selection.

Two interchangeable implementations of the mu-weighted trace live here:
a compiled Cython kernel (int64 coefficients, overflow-guarded) and a
pure-Python kernel (exact big integers). The compiled one is preferred
when its extension module imported successfully; setting the environment
variable CRYPTOCOMB_PURE_KERNEL forces the pure kernel, which is also the
automatic fallback if the compiled kernel reports coefficient overflow.
"""
from __future__ import annotations

import os
from typing import Callable, Sequence

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built; pure kernel carries the load
    _fast = None

_FORCE_PURE = bool(os.environ.get("CRYPTOCOMB_PURE_KERNEL"))


def backend_name() -> str:
    return "pure" if (_FORCE_PURE or _fast is None) else "compiled"


def trace_part_q(
    n: int,
    letters: Sequence[tuple[int, int]],
    cancel: Callable[[], bool] | None = None,
) -> dict[int, int]:
    """Weighted trace of the braid representation, as q-exponent -> coeff."""
    letters = list(letters)
    if _fast is not None and not _FORCE_PURE:
        try:
            return _fast.trace_part_q(n, letters, cancel)
        except OverflowError:
            pass  # coefficients outgrew int64; redo exactly
    return _pure.trace_part_q(n, letters, cancel)
