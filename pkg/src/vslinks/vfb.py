"""Finite virtual flat biquandles and coloring counts of flat diagrams.

Elements are ``0..order-1``.  ``star[b][a]`` is ``b * a = S_a(b)`` and
``circ[b][a]`` is ``b o a = T_a(b)``: the row is the left operand.

At a virtual crossing with Left-approach incoming color ``a`` and
Right-approach incoming color ``b`` the outgoing colors are ``a * b``
(left strand) and ``b o a`` (right strand).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .diagram import CrossingKind, FlatLinkDiagram, StringLinkDiagram, validate


@dataclass(frozen=True)
class FiniteVFB:
    order: int
    star: tuple[tuple[int, ...], ...]
    circ: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "star", tuple(tuple(int(x) for x in r) for r in self.star))
        object.__setattr__(self, "circ", tuple(tuple(int(x) for x in r) for r in self.circ))
        m = self.order
        for name, table in (("star", self.star), ("circ", self.circ)):
            if len(table) != m or any(len(r) != m for r in table):
                raise ValueError(f"{name} table must be {m}x{m}")
            if any(not 0 <= x < m for r in table for x in r):
                raise ValueError(f"{name} table has entries outside 0..{m - 1}")

    @property
    def elements(self) -> range:
        return range(self.order)

    def S(self, a: int, b: int) -> int:
        """S_a(b) = b * a."""
        return self.star[b][a]

    def T(self, a: int, b: int) -> int:
        """T_a(b) = b o a."""
        return self.circ[b][a]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def to_json(self) -> dict:
        out = {"order": self.order, "star": [list(r) for r in self.star],
               "circ": [list(r) for r in self.circ]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FiniteVFB:
        labels = data.get("labels")
        return cls(int(data["order"]), data["star"], data["circ"], tuple(labels) if labels else None)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class VfbError(ValueError):
    pass


def vfb_violations(S: FiniteVFB) -> list[str]:
    """First violating tuple of each axiom (empty list: S is a VFB)."""
    E = S.elements
    out = []

    def first(name, cond, arity):
        for args in itertools.product(E, repeat=arity):
            if not cond(*args):
                out.append(f"{name} fails at {args}")
                return

    # axiom 1: translations commute
    first("axiom 1: S_a S_b = S_b S_a", lambda a, b, x: S.S(a, S.S(b, x)) == S.S(b, S.S(a, x)), 3)
    first("axiom 1: T_a T_b = T_b T_a", lambda a, b, x: S.T(a, S.T(b, x)) == S.T(b, S.T(a, x)), 3)
    first("axiom 1: S_a T_b = T_b S_a", lambda a, b, x: S.S(a, S.T(b, x)) == S.T(b, S.S(a, x)), 3)
    # axiom 2: translations ignore moving their index
    first("axiom 2: S_a = S_{T_b(a)}", lambda a, b, x: S.S(a, x) == S.S(S.T(b, a), x), 3)
    first("axiom 2: S_a = S_{S_b(a)}", lambda a, b, x: S.S(a, x) == S.S(S.S(b, a), x), 3)
    first("axiom 2: T_a = T_{S_b(a)}", lambda a, b, x: S.T(a, x) == S.T(S.S(b, a), x), 3)
    first("axiom 2: T_a = T_{T_b(a)}", lambda a, b, x: S.T(a, x) == S.T(S.T(b, a), x), 3)
    # axiom 3: mutually inverse
    first("axiom 3: T_a S_a = id", lambda a, x: S.T(a, S.S(a, x)) == x, 2)
    first("axiom 3: S_a T_a = id", lambda a, x: S.S(a, S.T(a, x)) == x, 2)
    return out


def validate_vfb(S: FiniteVFB) -> None:
    problems = vfb_violations(S)
    if problems:
        raise VfbError("; ".join(problems))


def is_vfb(S: FiniteVFB) -> bool:
    return not vfb_violations(S)


def flat_biquandle_violations(S: FiniteVFB) -> list[str]:
    """Check the flat biquandle axioms (existence/uniqueness by exhaustive search)."""
    E = list(S.elements)
    star = lambda x, y: S.star[x][y]  # noqa: E731
    circ = lambda x, y: S.circ[x][y]  # noqa: E731
    out = []
    for a in E:
        xs = [x for x in E if circ(a, x) == x and star(x, a) == a]
        ys = [y for y in E if circ(y, a) == a and star(a, y) == y]
        if len(xs) != 1 or len(ys) != 1:
            out.append(f"flat axiom 1 fails at a={a}: x in {xs}, y in {ys}")
            break
    for a, b in itertools.product(E, repeat=2):
        sols = [(x, y) for x, y in itertools.product(E, repeat=2)
                if x == circ(b, y) and y == circ(a, x) and b == star(x, a) and a == star(y, b)]
        if len(sols) != 1:
            out.append(f"flat axiom 2 (unique x, y) fails at {(a, b)}: {sols}")
            break
        if star(circ(a, b), star(b, a)) != a or circ(star(b, a), circ(a, b)) != b:
            out.append(f"flat axiom 2 (identities) fails at {(a, b)}")
            break
    for a, b, c in itertools.product(E, repeat=3):
        if circ(circ(a, b), c) != circ(circ(a, star(c, b)), circ(b, c)):
            out.append(f"flat axiom 3 (first) fails at {(a, b, c)}")
            break
        if star(star(c, b), a) != star(star(c, circ(a, b)), star(b, a)):
            out.append(f"flat axiom 3 (second) fails at {(a, b, c)}")
            break
        if star(circ(b, c), circ(a, star(c, b))) != circ(star(b, a), star(c, circ(a, b))):
            out.append(f"flat axiom 3 (third) fails at {(a, b, c)}")
            break
    return out


def check_flat_biquandle_axioms(S: FiniteVFB) -> bool:
    return not flat_biquandle_violations(S)


# ---------------------------------------------------------------------------
# constructions


def trivial_vfb(m: int) -> FiniteVFB:
    table = tuple(tuple(b for _ in range(m)) for b in range(m))
    return FiniteVFB(m, table, table)


def constant_action_vfb(psi: Sequence[int]) -> FiniteVFB:
    """x * y = psi(x), x o y = psi^-1(x); psi given as 0-based one-line notation."""
    m = len(psi)
    if sorted(psi) != list(range(m)):
        raise ValueError(f"{list(psi)} is not a permutation of 0..{m - 1}")
    inv = [0] * m
    for x, y in enumerate(psi):
        inv[y] = x
    star = tuple(tuple(psi[b] for _ in range(m)) for b in range(m))
    circ = tuple(tuple(inv[b] for _ in range(m)) for b in range(m))
    return FiniteVFB(m, star, circ)


def linear_vfb(m: int) -> FiniteVFB:
    """Z_m[s]/(s^2) with S_a(b) = -s a + (1-s) b, T_a(b) = s a + (1+s) b.

    Element ``x + y s`` has index ``x*m + y``.
    """
    if m < 1:
        raise ValueError("modulus must be positive")

    def mul(p, q):
        return (p[0] * q[0] % m, (p[0] * q[1] + p[1] * q[0]) % m)

    def add(p, q):
        return ((p[0] + q[0]) % m, (p[1] + q[1]) % m)

    elems = [(x, y) for x in range(m) for y in range(m)]
    index = {e: k for k, e in enumerate(elems)}
    neg_s, one_minus_s = (0, -1 % m), (1 % m, -1 % m)
    s, one_plus_s = (0, 1 % m), (1 % m, 1 % m)
    star = [[0] * len(elems) for _ in elems]
    circ = [[0] * len(elems) for _ in elems]
    for b in elems:
        for a in elems:
            star[index[b]][index[a]] = index[add(mul(neg_s, a), mul(one_minus_s, b))]
            circ[index[b]][index[a]] = index[add(mul(s, a), mul(one_plus_s, b))]
    labels = tuple(f"{x}+{y}s" for x, y in elems)
    return FiniteVFB(len(elems), star, circ, labels)


def make_vfb(text: str) -> FiniteVFB:
    """``trivial:M``, ``constant:P0,P1,...`` (0-based psi) or ``linear:M``."""
    kind, _, arg = text.partition(":")
    if kind == "trivial":
        return trivial_vfb(int(arg))
    if kind == "constant":
        return constant_action_vfb([int(x) for x in arg.split(",")])
    if kind == "linear":
        return linear_vfb(int(arg))
    raise ValueError(f"unknown VFB construction {text!r}")


def shipped_vfbs(max_order: int = 3) -> list[tuple[str, FiniteVFB]]:
    """Every trivial and constant-action VFB up to ``max_order`` plus linear ones that fit."""
    out = []
    for m in range(1, max_order + 1):
        out.append((f"trivial:{m}", trivial_vfb(m)))
        for psi in itertools.permutations(range(m)):
            out.append((f"constant:{','.join(map(str, psi))}", constant_action_vfb(psi)))
    m = 1
    while m * m <= max_order:
        out.append((f"linear:{m}", linear_vfb(m)))
        m += 1
    return out


def singly_generated_orbit(S: FiniteVFB, a: int, check: bool = True) -> frozenset[int]:
    """{a, S_a^n(a), T_a^n(a)}: the orbit of a under its own translations."""
    orbit = {a}
    for f in (lambda x: S.S(a, x), lambda x: S.T(a, x)):
        x = f(a)
        while x not in orbit:
            orbit.add(x)
            x = f(x)
    if check:
        full = subalgebra_closure(S, [a])
        if full != orbit:
            raise VfbError(f"orbit {sorted(orbit)} differs from generated subalgebra {sorted(full)}")
    return frozenset(orbit)


def subalgebra_closure(S: FiniteVFB, gens) -> frozenset[int]:
    out = set(gens)
    frontier = True
    while frontier:
        new = {op[x][y] for op in (S.star, S.circ) for x in out for y in out} - out
        frontier = bool(new)
        out |= new
    return frozenset(out)


# ---------------------------------------------------------------------------
# fundamental VFB presentations and colorings


class CrossingRelation(NamedTuple):
    crossing: int
    left_in: int
    right_in: int
    left_out: int
    right_out: int


@dataclass(frozen=True)
class VfbPresentation:
    """Generators are v-arcs ``0..ngens-1``; one relation pair per virtual crossing.

    For each relation: ``left_out = left_in * right_in`` and
    ``right_out = right_in o left_in``.
    """

    ngens: int
    relations: tuple[CrossingRelation, ...]
    names: tuple[str, ...]

    def relation_strings(self) -> list[str]:
        n = self.names
        out = []
        for r in self.relations:
            out.append(f"{n[r.left_in]}*{n[r.right_in]} = {n[r.left_out]}")
            out.append(f"{n[r.right_in]}o{n[r.left_in]} = {n[r.right_out]}")
        return out

    def __str__(self):
        return f"<{', '.join(self.names)} | {', '.join(self.relation_strings())}>"


def _arc_names(k: int) -> tuple[str, ...]:
    base = "xyzuvw"
    if k <= len(base):
        return tuple(base[:k])
    return tuple(f"x{i}" for i in range(k))


def present_fundamental_vfb(d: FlatLinkDiagram | StringLinkDiagram) -> VfbPresentation:
    """v-arcs of a flat diagram and the crossing relations between them.

    Flat crossings do not cut arcs.  For a string-link diagram the strand
    ends are left free (an extension: open arcs carry no relations).
    """
    validate(d)
    closed = isinstance(d, FlatLinkDiagram)
    virtual = {c.id for c in d.virtual_crossings()}
    arc_in: dict[tuple[int, int], int] = {}  # (path, pos) -> incoming arc
    arc_out: dict[tuple[int, int], int] = {}
    count = 0
    for i, path in enumerate(d.paths):
        cuts = [pos for pos, p in enumerate(path) if p.crossing in virtual]
        if not cuts:
            count += 1
            continue
        if closed:
            k = len(cuts)
            first = count
            for j in range(k):
                arc = first + j  # runs from after cuts[j] to cuts[j+1]
                arc_out[(i, cuts[j])] = arc
                arc_in[(i, cuts[(j + 1) % k])] = arc
            count += k
        else:
            arc_in[(i, cuts[0])] = count
            for j, pos in enumerate(cuts):
                arc_out[(i, pos)] = count + j + 1
                if j + 1 < len(cuts):
                    arc_in[(i, cuts[j + 1])] = count + j + 1
            count += len(cuts) + 1
    relations = []
    for c in d.virtual_crossings():
        left = d.locations[(c.id, c.left_slot)]
        right = d.locations[(c.id, 1 - c.left_slot)]
        relations.append(CrossingRelation(c.id, arc_in[left], arc_in[right], arc_out[left], arc_out[right]))
    return VfbPresentation(count, tuple(relations), _arc_names(count))


def iter_colorings(pres: VfbPresentation, S: FiniteVFB) -> Iterator[tuple[int, ...]]:
    """All arc colorings satisfying every relation, in lexicographic order.

    Each crossing allows the 4-tuples (a, b, a*b, b o a) on its
    (left in, right in, left out, right out) arcs.  Known arcs filter the
    tuples; a value shared by every surviving tuple is forced.  Branching
    picks the open arc with the fewest candidate values.
    """
    n = pres.ngens
    rels = [(r.left_in, r.right_in, r.left_out, r.right_out) for r in pres.relations]
    by_arc: list[list[int]] = [[] for _ in range(n)]
    for k, arcs in enumerate(rels):
        for arc in set(arcs):
            by_arc[arc].append(k)
    allowed = [(a, b, S.star[a][b], S.circ[b][a]) for a in S.elements for b in S.elements]
    cache: dict = {}

    def candidates(arcs, colors):
        known = tuple(colors[x] for x in arcs)
        shape = tuple(arcs.index(x) for x in arcs)  # self-crossings repeat an arc
        key = (shape, known)
        if key not in cache:
            cache[key] = [t for t in allowed
                          if all(k is None or k == v for k, v in zip(known, t))
                          and all(t[i] == t[shape[i]] for i in range(4))]
        return cache[key]

    def propagate(colors, changed):
        queue = list(changed)
        while queue:
            arc = queue.pop()
            for k in by_arc[arc]:
                arcs = rels[k]
                cands = candidates(arcs, colors)
                if not cands:
                    return False
                for pos, x in enumerate(arcs):
                    if colors[x] is None and all(t[pos] == cands[0][pos] for t in cands):
                        colors[x] = cands[0][pos]
                        queue.append(x)
        return True

    def domain(colors, arc):
        values = set(S.elements)
        for k in by_arc[arc]:
            arcs = rels[k]
            cands = candidates(arcs, colors)
            values &= {t[pos] for t in cands for pos, x in enumerate(arcs) if x == arc}
        return values

    def search(colors):
        open_arcs = [x for x in range(n) if colors[x] is None]
        if not open_arcs:
            yield tuple(colors)
            return
        arc, values = min(((x, domain(colors, x)) for x in open_arcs), key=lambda p: (len(p[1]), p[0]))
        for v in sorted(values):
            trial = list(colors)
            trial[arc] = v
            if propagate(trial, [arc]):
                yield from search(trial)

    yield from sorted(search([None] * n))


def count_colorings(d, S: FiniteVFB, with_list: bool = False):
    """vc(L, S); with ``with_list`` also returns the colorings."""
    validate_vfb(S)
    pres = d if isinstance(d, VfbPresentation) else present_fundamental_vfb(d)
    colorings = list(iter_colorings(pres, S))
    if with_list:
        return len(colorings), colorings
    return len(colorings)
