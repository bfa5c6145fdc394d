"""Finitely generated abelian groups and their integral group rings."""

from __future__ import annotations

import re
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Mapping


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^rank + Z/d_1 + ... + Z/d_k``; elements are reduced int tuples.

    Torsion moduli are kept exactly as given; no invariant-factor
    normalisation is attempted.
    """

    rank: int = 1
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion moduli must be >= 2")

    @classmethod
    def integers(cls) -> FgAbelianGroup:
        return cls(1, ())

    @classmethod
    def cyclic(cls, m: int) -> FgAbelianGroup:
        return cls(0, (m,))

    @classmethod
    def parse(cls, text: str) -> FgAbelianGroup:
        """Parse descriptors like ``Z``, ``Z3``, ``Z_5``, ``Z^2+Z4``."""
        rank, torsion = 0, []
        for part in text.replace(" ", "").split("+"):
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                rank += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z_?(\d+)", part)
            if m:
                torsion.append(int(m.group(1)))
                continue
            raise ValueError(f"bad abelian group descriptor {text!r}")
        return cls(rank, tuple(torsion))

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Per-coordinate modulus, 0 meaning a free coordinate."""
        return (0,) * self.rank + self.torsion

    def has_two_torsion(self) -> bool:
        return any(d % 2 == 0 for d in self.torsion)

    def is_cyclic(self) -> bool:
        return self.ngens == 1

    def element(self, value) -> tuple[int, ...]:
        if isinstance(value, Integral):
            if self.ngens != 1:
                raise ValueError(f"an integer names an element only of a cyclic group, not {self}")
            value = (int(value),)
        vec = tuple(int(x) for x in value)
        if len(vec) != self.ngens:
            raise ValueError(f"element {value!r} has wrong length for {self}")
        return tuple(x % d if d else x for x, d in zip(vec, self.moduli))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def add(self, x, y) -> tuple[int, ...]:
        return self.element(tuple(a + b for a, b in zip(self.element(x), self.element(y))))

    def neg(self, x) -> tuple[int, ...]:
        return self.element(tuple(-a for a in self.element(x)))

    def scale(self, k: int, x) -> tuple[int, ...]:
        return self.element(tuple(k * a for a in self.element(x)))

    def sum(self, items: Iterable) -> tuple[int, ...]:
        total = self.zero()
        for x in items:
            total = self.add(total, x)
        return total

    def format_element(self, x) -> str:
        x = self.element(x)
        return ",".join(str(a) for a in x)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z{d}" for d in self.torsion]
        return "+".join(parts) or "0"


class GroupRingElement:
    """A finite formal sum ``sum n_g [g]`` in Z[A] with nonzero multiplicities."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: FgAbelianGroup, terms: Mapping | Iterable = ()):
        self.group = group
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((g, 1) for g in terms)
        for g, mult in items:
            key = group.element(g)
            acc[key] = acc.get(key, 0) + int(mult)
        self._terms = tuple(sorted((g, n) for g, n in acc.items() if n))

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def multiplicity(self, g) -> int:
        return self.terms.get(self.group.element(g), 0)

    def total_multiplicity(self) -> int:
        return sum(n for _, n in self._terms)

    def _check(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        if other.group != self.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for g, n in other._terms:
            merged[g] = merged.get(g, 0) + n
        return GroupRingElement(self.group, merged)

    def __neg__(self):
        return GroupRingElement(self.group, {g: -n for g, n in self._terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for g, n in self._terms:
            for h, k in other._terms:
                gh = self.group.add(g, h)
                out[gh] = out.get(gh, 0) + n * k
        return GroupRingElement(self.group, out)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        return hash((self.group, self._terms))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"GroupRingElement({self.group}, {dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{n}*[{self.group.format_element(g)}]" for g, n in self._terms)


def group_ring_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x + y
