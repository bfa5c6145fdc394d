"""Dual integers: the ring Z[s]/(s^2)."""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral


@dataclass(frozen=True)
class DualInt:
    """An element ``real + eps*s`` with ``s*s == 0``.

    Plain Python ints are accepted wherever a DualInt is expected and
    are read as ``int + 0*s``.
    """

    real: int = 0
    eps: int = 0

    def __post_init__(self):
        if type(self.real) is int and type(self.eps) is int:
            return
        if not isinstance(self.real, Integral) or not isinstance(self.eps, Integral):
            raise TypeError("DualInt coefficients must be integers")
        object.__setattr__(self, "real", int(self.real))
        object.__setattr__(self, "eps", int(self.eps))

    @classmethod
    def zero(cls) -> DualInt:
        return cls(0, 0)

    @classmethod
    def one(cls) -> DualInt:
        return cls(1, 0)

    @classmethod
    def coerce(cls, x) -> DualInt:
        if type(x) is DualInt or isinstance(x, DualInt):
            return x
        if isinstance(x, Integral):
            return cls(int(x), 0)
        raise TypeError(f"cannot interpret {x!r} as a dual integer")

    def __add__(self, other):
        try:
            other = DualInt.coerce(other)
        except TypeError:
            return NotImplemented
        return DualInt(self.real + other.real, self.eps + other.eps)

    __radd__ = __add__

    def __neg__(self):
        return DualInt(-self.real, -self.eps)

    def __sub__(self, other):
        try:
            other = DualInt.coerce(other)
        except TypeError:
            return NotImplemented
        return DualInt(self.real - other.real, self.eps - other.eps)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = DualInt.coerce(other)
        except TypeError:
            return NotImplemented
        return DualInt(self.real * other.real,
                       self.real * other.eps + self.eps * other.real)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = DualInt.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = DualInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.real == other.real and self.eps == other.eps

    def __hash__(self):
        return hash((self.real, self.eps))

    def __bool__(self):
        return bool(self.real or self.eps)

    def is_unit(self) -> bool:
        return self.real in (1, -1)

    def inverse(self) -> DualInt:
        # (a + bs)^-1 = a - b s when a = +-1, since a*a = 1
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not invertible in Z[s]/(s^2)")
        a = self.real
        return DualInt(a, -a * self.eps * a)

    def __str__(self):
        return format_dual(self)

    def __repr__(self):
        return f"DualInt({self.real}, {self.eps})"


S = DualInt(0, 1)


def format_dual(x: DualInt) -> str:
    """Render like ``1-2s``, ``s``, ``-s``, ``0``."""
    b, a = x.real, x.eps
    if a == 0:
        return str(b)
    if abs(a) == 1:
        eps_part = "s"
    else:
        eps_part = f"{abs(a)}s"
    if b == 0:
        return ("-" if a < 0 else "") + eps_part
    return f"{b}{'-' if a < 0 else '+'}{eps_part}"


def parse_dual(text: str) -> DualInt:
    """Inverse of :func:`format_dual` (also accepts ``a*s`` spellings)."""
    t = text.replace(" ", "").replace("*", "")
    if not t:
        raise ValueError("empty dual number")
    real = eps = 0
    terms = []
    start = 0
    for k in range(1, len(t)):
        if t[k] in "+-":
            terms.append(t[start:k])
            start = k
    terms.append(t[start:])
    for term in terms:
        if term.endswith("s"):
            coef = term[:-1]
            if coef in ("", "+"):
                eps += 1
            elif coef == "-":
                eps -= 1
            else:
                eps += int(coef)
        else:
            real += int(term)
    return DualInt(real, eps)
