"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral


class LaurentPoly:
    """Finitely supported map exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for exp, coef in dict(terms or {}).items():
            if not isinstance(exp, Integral) or not isinstance(coef, Integral):
                raise TypeError("Laurent polynomial exponents and coefficients must be integers")
            if coef:
                clean[int(exp)] = clean.get(int(exp), 0) + int(coef)
        self._terms = tuple(sorted((e, c) for e, c in clean.items() if c))

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def t(cls, power: int = 1) -> LaurentPoly:
        return cls({power: 1})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Integral):
            return cls({0: int(x)})
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def is_monomial_unit(self) -> bool:
        return len(self._terms) == 1 and self._terms[0][1] in (1, -1)

    def inverse(self) -> LaurentPoly:
        if not self.is_monomial_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[t, t^-1]")
        e, c = self._terms[0]
        return LaurentPoly({-e: c})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate at ``t = value`` (exact; negative powers go through Fraction)."""
        total = 0
        for e, c in self._terms:
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def __eq__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms, reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out
