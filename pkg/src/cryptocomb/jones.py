"""Jones polynomial of a braid closure via the R-matrix trace formula.

For a braid beta on n strands with exponent sum e, the polynomial is

    V(t) = t^((e - n + 1)/2) * tr(Phi(beta) . mu^(x n)) / (1 + t)

where Phi(sigma_i) = I (x) R (x) I acts on the (i, i+1) tensor slots,
mu = diag(1, t), and all arithmetic happens exactly in q = t^(1/2). For
a knot the division by 1 + t is always exact and V is a Laurent
polynomial in t itself; the closure being a knot is checked up front.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import _kernel
from .braids import BraidWord, closure_components, exponent_sum
from .errors import HalfIntegerExponents, NotAKnot, TooManyStrands
from .laurent import ONE_PLUS_T, LaurentPoly

DEFAULT_STRAND_CAP = 10

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()
_Q = LaurentPoly({1: 1})


class PolyMatrix:
    """Dense matrix over Z[q, q^-1]; small, for reference computations.

    The trace kernel never materializes these products; this class exists
    so the representation itself (R, its inverse, tensor placement) is a
    first-class object that tests can probe directly.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        width = len(self.rows[0]) if self.rows else 0
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(
                [
                    sum((a * b for a, b in zip(row, col) if a and b), _ZERO)
                    for col in cols
                ]
            )
        return PolyMatrix(out)

    def tensor(self, other: PolyMatrix) -> PolyMatrix:
        n1, m1 = self.shape
        n2, m2 = other.shape
        out = [[_ZERO] * (m1 * m2) for _ in range(n1 * n2)]
        for i in range(n1):
            for j in range(m1):
                a = self.rows[i][j]
                if not a:
                    continue
                for k in range(n2):
                    for l in range(m2):
                        b = other.rows[k][l]
                        if b:
                            out[i * n2 + k][j * m2 + l] = a * b
        return PolyMatrix(out)

    def trace(self) -> LaurentPoly:
        n, m = self.shape
        if n != m:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(n)), _ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PolyMatrix({len(self.rows)}x{self.shape[1]})"


def r_matrix() -> PolyMatrix:
    """The 4x4 crossing matrix on basis |00>, |01>, |10>, |11>."""
    one, q = _ONE, _Q
    z = _ZERO
    return PolyMatrix(
        [
            [one, z, z, z],
            [z, z, -q, z],
            [z, -q, _ONE - q * q, z],
            [z, z, z, one],
        ]
    )


def r_inverse() -> PolyMatrix:
    one = _ONE
    z = _ZERO
    qinv = LaurentPoly({-1: 1})
    return PolyMatrix(
        [
            [one, z, z, z],
            [z, one - LaurentPoly({-2: 1}), -qinv, z],
            [z, -qinv, z, z],
            [z, z, z, one],
        ]
    )


def mu_tensor(n: int) -> PolyMatrix:
    """Diagonal weight matrix mu^(x n); entry s is t^popcount(s)."""
    dim = 1 << n
    return PolyMatrix(
        [
            [
                LaurentPoly({2 * s.bit_count(): 1}) if s == j else _ZERO
                for j in range(dim)
            ]
            for s in range(dim)
        ]
    )


def rep_letter(n: int, index: int, sign: int) -> PolyMatrix:
    if not 1 <= index <= n - 1:
        raise ValueError(f"generator {index} out of range for {n} strands")
    core = r_matrix() if sign > 0 else r_inverse()
    left = PolyMatrix.identity(1 << (index - 1))
    right = PolyMatrix.identity(1 << (n - index - 1))
    return left.tensor(core).tensor(right)


def rep_apply(b: BraidWord, strand_cap: int = DEFAULT_STRAND_CAP) -> PolyMatrix:
    """Product of letter matrices in word order; 2^n x 2^n, exact.

    Exponential in strand count; guarded by strand_cap like the trace.
    """
    if b.strands > strand_cap:
        raise TooManyStrands(f"{b.strands} strands exceeds cap {strand_cap}")
    out = PolyMatrix.identity(1 << b.strands)
    for index, sign in b.letters():
        out = out @ rep_letter(b.strands, index, sign)
    return out


@dataclass(frozen=True)
class JonesResult:
    polynomial: LaurentPoly
    trace_part: LaurentPoly
    exponent_sum: int
    strands_used: int


def trace_part(
    b: BraidWord, cancel: Callable[[], bool] | None = None
) -> LaurentPoly:
    """tr(Phi(beta) . mu^(x n)) via the kernel, without materializing Phi."""
    return LaurentPoly(_kernel.trace_part_q(b.strands, list(b.letters()), cancel))


def jones_polynomial(
    b: BraidWord,
    strand_cap: int = DEFAULT_STRAND_CAP,
    cancel: Callable[[], bool] | None = None,
) -> JonesResult:
    """Jones polynomial of the closure of b, which must be a knot.

    cancel, if given, is polled between letter applications inside the
    trace; a truthy return aborts with Cancelled.
    """
    if b.strands > strand_cap:
        raise TooManyStrands(
            f"{b.strands} strands exceeds cap {strand_cap}; "
            "raise strand_cap explicitly if the cost is acceptable"
        )
    comps = closure_components(b)
    if comps != 1:
        raise NotAKnot(f"closure has {comps} components")
    eps = exponent_sum(b)
    tp = trace_part(b, cancel)
    shifted = tp.shift(eps - b.strands + 1)  # t^((eps - n + 1)/2) = q^(eps - n + 1)
    poly = shifted.exact_div(ONE_PLUS_T)
    return JonesResult(
        polynomial=poly, trace_part=tp, exponent_sum=eps, strands_used=b.strands
    )


def derive_key(polynomial: LaurentPoly, power: int = 3) -> int:
    """Integer key: sum of coeff * (t-exponent)^power over all terms."""
    odd = [e for e, _ in polynomial.terms() if e % 2]
    if odd:
        raise HalfIntegerExponents(f"half-integer t-exponents present: q^{odd}")
    return sum(c * (e // 2) ** power for e, c in polynomial.terms())


def kernel_backend() -> str:
    """Name of the active trace kernel: 'compiled' or 'pure'."""
    return _kernel.backend_name()
