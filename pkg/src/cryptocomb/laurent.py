"""Exact Laurent polynomial arithmetic in q = t^(1/2).

All knot-polynomial work in this package happens in the ring Z[q, q^-1]
with t = q^2, so half-integer powers of t are ordinary integer powers of
q and no floating point ever appears. Exponents are stored as integers
(q-exponents); a q-exponent 2k corresponds to t^k.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import NotDivisible


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Internally a map from q-exponent to nonzero coefficient. Instances
    support +, -, *, ** and ==, and hash by their term multiset.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be int")
            if coeff:
                acc[exp] = acc.get(exp, 0) + coeff
                if not acc[exp]:
                    del acc[exp]
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # construction helpers

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def q_monomial(cls, coeff: int, q_exp: int) -> LaurentPoly:
        return cls({q_exp: coeff})

    @classmethod
    def from_t_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from a map of integer t-exponents (t = q^2)."""
        return cls({2 * e: c for e, c in terms.items()})

    # inspection

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Sorted (q_exponent, coefficient) pairs."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, q_exp: int) -> int:
        return self._terms.get(q_exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ring operations

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LaurentPoly(acc)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly()
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = acc.get(e, 0) + c1 * c2
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        return LaurentPoly(acc)

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, k: int) -> LaurentPoly:
        return LaurentPoly({e: k * c for e, c in self._terms.items()})

    def shift(self, dq: int) -> LaurentPoly:
        """Multiply by q^dq."""
        return LaurentPoly({e + dq: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute q -> q^-1, i.e. t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division in Z[q, q^-1]; raises NotDivisible on remainder.

        Classic descending long division after factoring out the lowest
        powers of q. Division fails either on a nonzero remainder or on a
        leading coefficient that does not divide over the integers.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        # normalize both to ordinary polynomials in q
        off = self.min_exp() - divisor.min_exp()
        rem = dict(self.shift(-self.min_exp())._terms)
        div = divisor.shift(-divisor.min_exp())._terms
        dlead = max(div)
        dlc = div[dlead]
        quot: dict[int, int] = {}
        while rem:
            lead = max(rem)
            if lead < dlead:
                raise NotDivisible(f"remainder of degree {lead} left by division")
            c, r = divmod(rem[lead], dlc)
            if r:
                raise NotDivisible("leading coefficient does not divide")
            qe = lead - dlead
            quot[qe] = c
            for e, dc in div.items():
                v = rem.get(e + qe, 0) - c * dc
                if v:
                    rem[e + qe] = v
                else:
                    rem.pop(e + qe, None)
        return LaurentPoly(quot).shift(off)

    # serialization: sorted [q_exponent, coefficient-as-decimal-string] pairs

    def to_json_obj(self) -> list[list]:
        return [[e, str(c)] for e, c in self.terms()]

    @classmethod
    def from_json_obj(cls, obj) -> LaurentPoly:
        if not isinstance(obj, list):
            raise ValueError("polynomial JSON must be a list of pairs")
        acc = {}
        for pair in obj:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError("polynomial JSON entries must be [exp, coeff] pairs")
            e, c = pair
            acc[int(e)] = int(c)
        return cls(acc)

    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if e % 2 == 0:
                    power = "t" if e == 2 else f"t^{e // 2}"
                else:
                    power = f"t^({e}/2)"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.terms())!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))


ONE_PLUS_T = LaurentPoly({0: 1, 2: 1})
