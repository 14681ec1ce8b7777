"""Pure-Python weighted-trace kernel.

Computes tr(Phi(beta) . mu^(tensor n)) where Phi sends sigma_i to
I (x) R (x) I acting on strands (i, i+1) and mu = diag(1, t), working in
q = t^(1/2). Basis states are n-bit integers; bit n-i of the state is
strand i, most significant bit first, matching the usual tensor ordering.

The product over letters is applied column by column: column s of the
matrix product is the word applied right-to-left to the basis ket e_s,
and only the diagonal entry survives into the trace, weighted by
t^(popcount(s)) from mu. Coefficients are Python ints, so this kernel is
exact at any size and serves as the overflow fallback for the compiled
kernel.
"""
from __future__ import annotations

from typing import Callable, Sequence

from ..errors import Cancelled

# R column action in the (a, b) bit pair of strands (i, i+1), kets in q:
#   R|00> = |00>                R^-1|00> = |00>
#   R|01> = -q|10>              R^-1|01> = (1 - q^-2)|01> - q^-1|10>
#   R|10> = -q|01>+(1-q^2)|10>  R^-1|10> = -q^-1|01>
#   R|11> = |11>                R^-1|11> = |11>


def _accumulate(dst: dict[int, int], src: dict[int, int], shift: int, scale: int) -> None:
    for e, c in src.items():
        k = e + shift
        v = dst.get(k, 0) + scale * c
        if v:
            dst[k] = v
        else:
            del dst[k]


def trace_part_q(
    n: int,
    letters: Sequence[tuple[int, int]],
    cancel: Callable[[], bool] | None = None,
) -> dict[int, int]:
    """Map of q-exponent to coefficient for the mu-weighted trace.

    letters: (generator index, sign) pairs in word order. cancel, if
    given, is polled between letter applications; a truthy return raises
    Cancelled.
    """
    letters = list(letters)
    for i, sign in letters:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator {i} out of range for {n} strands")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
    total: dict[int, int] = {}
    for s0 in range(1 << n):
        vec: dict[int, dict[int, int]] = {s0: {0: 1}}
        for i, sign in reversed(letters):
            if cancel is not None and cancel():
                raise Cancelled("trace computation cancelled")
            vec = _apply_letter(vec, n, i, sign)
        amp = vec.get(s0)
        if amp:
            _accumulate(total, amp, 2 * (s0.bit_count()), 1)
    return total


def _apply_letter(
    vec: dict[int, dict[int, int]], n: int, i: int, sign: int
) -> dict[int, dict[int, int]]:
    hi = 1 << (n - i)
    lo = 1 << (n - i - 1)
    both = hi | lo
    out: dict[int, dict[int, int]] = {}

    def slot(s: int) -> dict[int, int]:
        p = out.get(s)
        if p is None:
            p = {}
            out[s] = p
        return p

    for s, poly in vec.items():
        a = bool(s & hi)
        b = bool(s & lo)
        if a == b:
            _accumulate(slot(s), poly, 0, 1)
        elif sign > 0:
            if not a:  # |01>: contributes -q to the |10> slot
                _accumulate(slot(s ^ both), poly, 1, -1)
            else:  # |10>: -q|01> + (1 - q^2)|10>
                _accumulate(slot(s ^ both), poly, 1, -1)
                dst = slot(s)
                _accumulate(dst, poly, 0, 1)
                _accumulate(dst, poly, 2, -1)
        else:
            if not a:  # |01>: (1 - q^-2)|01> - q^-1|10>
                dst = slot(s)
                _accumulate(dst, poly, 0, 1)
                _accumulate(dst, poly, -2, -1)
                _accumulate(slot(s ^ both), poly, -1, -1)
            else:  # |10>: -q^-1|01>
                _accumulate(slot(s ^ both), poly, -1, -1)
    return {s: p for s, p in out.items() if p}
