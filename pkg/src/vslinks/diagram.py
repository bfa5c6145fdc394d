"""Combinatorial virtual string link and flat virtual link diagrams.

A diagram is a Gauss-code style encoding: every strand (or closed
component) is a sequence of passages, a passage being ``(crossing id,
slot)``.  Each crossing has exactly two slots, and each slot is visited
exactly once.  Real crossings record which slot is the over-strand,
virtual crossings which slot approaches from the left.

Braid words are read as products: in ``w1 w2 ... wk`` the letter ``wk``
sits at the top of the strip and ``w1`` at the bottom, so a ball bowled
from the top meets the letters right to left.  With this reading
``M(w)^T`` equals the braid representation of ``w`` as a left-to-right
matrix product.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, replace
from functools import cached_property
from typing import NamedTuple, Sequence


class CrossingKind(enum.Enum):
    POSITIVE = "RealPositive"
    NEGATIVE = "RealNegative"
    VIRTUAL = "Virtual"
    FLAT = "Flat"

    @property
    def is_real(self) -> bool:
        return self in (CrossingKind.POSITIVE, CrossingKind.NEGATIVE)

    @property
    def writhe(self) -> int:
        return {CrossingKind.POSITIVE: 1, CrossingKind.NEGATIVE: -1}.get(self, 0)


class Passage(NamedTuple):
    crossing: int
    slot: int


@dataclass(frozen=True)
class Crossing:
    id: int
    kind: CrossingKind
    over_slot: int | None = None
    left_slot: int | None = None


class DiagramError(ValueError):
    pass


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


# ---------------------------------------------------------------------------
# braid words


class Letter(NamedTuple):
    kind: str  # "s" real, "t" virtual, "f" flat
    index: int  # 1-based: crossing between lanes index and index + 1
    inverse: bool = False

    def __str__(self):
        return ("S" if self.inverse else self.kind) + str(self.index)

    def inverted(self) -> Letter:
        if self.kind == "s":
            return self._replace(inverse=not self.inverse)
        return self


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_i^{+-1} (``s``/``S``), tau_i (``t``) and flat f_i (``f``)."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(*x) for x in self.letters))
        if self.n < 1:
            raise ValueError("a braid word needs at least one strand")
        for x in self.letters:
            if x.kind not in "stf" or len(x.kind) != 1:
                raise ValueError(f"unknown letter kind {x.kind!r}")
            if not 1 <= x.index <= self.n - 1:
                raise ValueError(f"letter {x} out of range for n={self.n}")
            if x.inverse and x.kind != "s":
                raise ValueError(f"only real letters have inverses, got {x}")

    @property
    def is_flat(self) -> bool:
        return all(x.kind != "s" for x in self.letters)

    @property
    def is_virtual(self) -> bool:
        return all(x.kind != "f" for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValueError("strand-count mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def __mul__(self, k: int) -> BraidWord:
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(x.inverted() for x in reversed(self.letters)))

    def rotate(self, k: int) -> BraidWord:
        """Cyclic rotation (a conjugate, so the closure is unchanged)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.n, self.letters[k:] + self.letters[:k])

    def permutation(self) -> tuple[int, ...]:
        """0-based endpoint permutation: strand i ends at lane ``perm[i]``."""
        lanes = list(range(self.n))  # lanes[j] = strand currently at lane j
        for x in reversed(self.letters):
            i = x.index - 1
            lanes[i], lanes[i + 1] = lanes[i + 1], lanes[i]
        perm = [0] * self.n
        for lane, strand in enumerate(lanes):
            perm[strand] = lane
        return tuple(perm)

    def __str__(self):
        return " ".join([f"n={self.n}"] + [str(x) for x in self.letters])


_TOKEN = re.compile(r"\S+")


def parse_word(text: str, n: int | None = None) -> BraidWord:
    """Parse ``"n=3 s1 S2 t1 f2"``.  Without a header, n defaults to max index + 1."""
    header = None
    letters = []
    positions = []
    for m in _TOKEN.finditer(text):
        tok, pos = m.group(), m.start()
        hm = re.fullmatch(r"n=(\d+)", tok)
        if hm:
            if header is not None or letters:
                raise WordSyntaxError("strand-count header must come first", pos)
            header = int(hm.group(1))
            if header < 1:
                raise WordSyntaxError("strand count must be positive", pos)
            continue
        lm = re.fullmatch(r"([sStf])(\d+)", tok)
        if not lm:
            raise WordSyntaxError(f"bad token {tok!r}", pos)
        k = int(lm.group(2))
        if k < 1:
            raise WordSyntaxError(f"generator index must be >= 1 in {tok!r}", pos)
        c = lm.group(1)
        letters.append(Letter("s" if c == "S" else c, k, c == "S"))
        positions.append(pos)
    count = header if header is not None else n
    if count is None:
        count = max((x.index for x in letters), default=0) + 1
    for x, pos in zip(letters, positions):
        if x.index > count - 1:
            raise WordSyntaxError(f"generator {x} needs more than n={count} strands", pos)
    return BraidWord(count, tuple(letters))


# ---------------------------------------------------------------------------
# diagrams


class _Diagram:
    """Shared machinery for diagrams made of passage sequences."""

    crossings: tuple[Crossing, ...]

    @property
    def paths(self) -> tuple[tuple[Passage, ...], ...]:
        raise NotImplementedError

    @cached_property
    def crossing_table(self) -> dict[int, Crossing]:
        return {c.id: c for c in self.crossings}

    def crossing(self, cid: int) -> Crossing:
        return self.crossing_table[cid]

    @cached_property
    def locations(self) -> dict[tuple[int, int], tuple[int, int]]:
        """(crossing id, slot) -> (path index, position)."""
        out = {}
        for i, path in enumerate(self.paths):
            for pos, p in enumerate(path):
                out.setdefault((p.crossing, p.slot), (i, pos))
        return out

    def other_location(self, p: Passage) -> tuple[int, int]:
        return self.locations[(p.crossing, 1 - p.slot)]

    def is_left(self, p: Passage) -> bool:
        return self.crossing(p.crossing).left_slot == p.slot

    def is_over(self, p: Passage) -> bool:
        return self.crossing(p.crossing).over_slot == p.slot

    def virtual_crossings(self) -> list[Crossing]:
        return [c for c in self.crossings if c.kind is CrossingKind.VIRTUAL]

    def _next_id(self) -> int:
        return max((c.id for c in self.crossings), default=-1) + 1

    def _relabeled(self, mapping: dict[int, int]):
        paths = tuple(tuple(Passage(mapping[p.crossing], p.slot) for p in path) for path in self.paths)
        crossings = tuple(sorted((replace(c, id=mapping[c.id]) for c in self.crossings), key=lambda c: c.id))
        return paths, crossings

    def _canonical_mapping(self) -> dict[int, int]:
        mapping: dict[int, int] = {}
        for path in self.paths:
            for p in path:
                mapping.setdefault(p.crossing, len(mapping))
        for c in self.crossings:  # unused crossings (invalid diagrams) still get ids
            mapping.setdefault(c.id, len(mapping))
        return mapping


@dataclass(frozen=True)
class StringLinkDiagram(_Diagram):
    """n oriented strands; strand i runs from top lane i to bottom lane ``perm[i]``.

    All indices are 0-based here; lanes are printed 1-based.
    """

    n: int
    strands: tuple[tuple[Passage, ...], ...]
    crossings: tuple[Crossing, ...] = ()
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "strands", tuple(tuple(Passage(*p) for p in s) for s in self.strands))
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id)))
        perm = tuple(range(self.n)) if self.perm is None else tuple(self.perm)
        object.__setattr__(self, "perm", perm)

    @property
    def paths(self):
        return self.strands

    @classmethod
    def trivial(cls, n: int) -> StringLinkDiagram:
        return cls(n, ((),) * n)

    def canonical(self) -> StringLinkDiagram:
        strands, crossings = self._relabeled(self._canonical_mapping())
        return StringLinkDiagram(self.n, strands, crossings, self.perm)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "strands": [[list(p) for p in s] for s in self.strands],
            "crossings": [_crossing_json(c) for c in self.crossings],
            "perm": [x + 1 for x in self.perm],
        }

    @classmethod
    def from_json(cls, data: dict) -> StringLinkDiagram:
        perm = data.get("perm")
        d = cls(int(data["n"]), tuple(tuple(Passage(*p) for p in s) for s in data["strands"]),
                tuple(_crossing_from_json(c) for c in data.get("crossings", [])),
                None if perm is None else tuple(int(x) - 1 for x in perm))
        return d


@dataclass(frozen=True)
class FlatLinkDiagram(_Diagram):
    """Closed components given as cyclic passage sequences (Flat/Virtual crossings)."""

    components: tuple[tuple[Passage, ...], ...]
    crossings: tuple[Crossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(Passage(*p) for p in s) for s in self.components))
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings, key=lambda c: c.id)))

    @property
    def paths(self):
        return self.components

    @classmethod
    def trivial(cls, k: int) -> FlatLinkDiagram:
        return cls(((),) * k)

    def canonical(self) -> FlatLinkDiagram:
        comps, crossings = self._relabeled(self._canonical_mapping())
        return FlatLinkDiagram(comps, crossings)

    def to_json(self) -> dict:
        return {
            "components": [[list(p) for p in s] for s in self.components],
            "crossings": [_crossing_json(c) for c in self.crossings],
        }

    @classmethod
    def from_json(cls, data: dict) -> FlatLinkDiagram:
        return cls(tuple(tuple(Passage(*p) for p in s) for s in data["components"]),
                   tuple(_crossing_from_json(c) for c in data.get("crossings", [])))


def _crossing_json(c: Crossing) -> dict:
    out = {"id": c.id, "kind": c.kind.value}
    if c.over_slot is not None:
        out["over_slot"] = c.over_slot
    if c.left_slot is not None:
        out["left_slot"] = c.left_slot
    return out


def _crossing_from_json(data: dict) -> Crossing:
    return Crossing(int(data["id"]), CrossingKind(data["kind"]),
                    data.get("over_slot"), data.get("left_slot"))


def load_diagram(text: str) -> StringLinkDiagram | FlatLinkDiagram:
    data = json.loads(text)
    if "components" in data:
        return FlatLinkDiagram.from_json(data)
    return StringLinkDiagram.from_json(data)


def dump_diagram(d) -> str:
    return json.dumps(d.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# validation


def diagram_errors(d: StringLinkDiagram | FlatLinkDiagram) -> list[str]:
    """All invariant violations found in ``d`` (empty when the diagram is valid)."""
    errors = []
    flat = isinstance(d, FlatLinkDiagram)
    if not flat:
        if d.n < 1:
            errors.append("strand count must be positive")
        if len(d.strands) != d.n:
            errors.append(f"expected {d.n} strands, found {len(d.strands)}")
        if sorted(d.perm) != list(range(d.n)):
            errors.append(f"bad permutation {list(d.perm)}")
    ids = [c.id for c in d.crossings]
    if len(set(ids)) != len(ids):
        errors.append("duplicate crossing id")
    table = {c.id: c for c in d.crossings}
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for i, path in enumerate(d.paths):
        for pos, p in enumerate(path):
            if p.crossing not in table:
                errors.append(f"dangling reference: path {i} position {pos} names unknown crossing {p.crossing}")
                continue
            if p.slot not in (0, 1):
                errors.append(f"bad slot {p.slot} at path {i} position {pos}")
                continue
            key = (p.crossing, p.slot)
            if key in seen:
                errors.append(f"slot used twice: crossing {p.crossing} slot {p.slot}")
            seen[key] = (i, pos)
    for c in d.crossings:
        for slot in (0, 1):
            if (c.id, slot) not in seen:
                errors.append(f"dangling reference: crossing {c.id} slot {slot} has no strand position")
        if flat and c.kind.is_real:
            errors.append(f"crossing {c.id}: real crossing in a flat diagram")
        if not flat and c.kind is CrossingKind.FLAT:
            errors.append(f"crossing {c.id}: flat crossing in a string link diagram")
        if c.kind.is_real and c.over_slot not in (0, 1):
            errors.append(f"crossing {c.id}: real crossing needs over_slot 0 or 1")
        if c.kind is CrossingKind.VIRTUAL and c.left_slot not in (0, 1):
            errors.append(f"crossing {c.id}: virtual crossing needs left_slot 0 or 1")
    return errors


def validate(d) -> None:
    """Raise :class:`DiagramError` listing every problem with ``d``."""
    errors = diagram_errors(d)
    if errors:
        raise DiagramError("; ".join(errors))


# ---------------------------------------------------------------------------
# constructions


def _braid_layout(word: BraidWord):
    strands: list[list[Passage]] = [[] for _ in range(word.n)]
    lanes = list(range(word.n))
    crossings = []
    # crossing id = position of the letter in the word; the last letter is on top
    for cid in range(len(word.letters) - 1, -1, -1):
        x = word.letters[cid]
        i = x.index - 1
        left, right = lanes[i], lanes[i + 1]
        strands[left].append(Passage(cid, 0))
        strands[right].append(Passage(cid, 1))
        if x.kind == "t":
            crossings.append(Crossing(cid, CrossingKind.VIRTUAL, left_slot=0))
        elif x.kind == "f":
            crossings.append(Crossing(cid, CrossingKind.FLAT))
        elif x.inverse:
            crossings.append(Crossing(cid, CrossingKind.NEGATIVE, over_slot=1))
        else:
            crossings.append(Crossing(cid, CrossingKind.POSITIVE, over_slot=0))
        lanes[i], lanes[i + 1] = right, left
    return strands, crossings, word.permutation()


def from_braid_word(word: BraidWord | str) -> StringLinkDiagram:
    """String link diagram of a virtual braid word.

    At ``t_i`` the strand entering on lane i gets the Left-approach slot;
    at ``s_i`` it is the over-strand, at ``S_i`` the under-strand.
    """
    if isinstance(word, str):
        word = parse_word(word)
    if not word.is_virtual:
        raise ValueError("flat letters belong in flat diagrams; use closure()")
    strands, crossings, perm = _braid_layout(word)
    return StringLinkDiagram(word.n, tuple(map(tuple, strands)), tuple(crossings), perm)


def compose(d1: StringLinkDiagram, d2: StringLinkDiagram) -> StringLinkDiagram:
    """Stack ``d1`` on top of ``d2``.

    Strand i of the result is strand i of d1 followed by strand
    ``perm1[i]`` of d2, so the endpoint permutation is ``perm2 . perm1``.
    For braid words, ``from_braid_word(w1 + w2)`` equals
    ``compose(from_braid_word(w2), from_braid_word(w1))`` up to relabeling.
    """
    if d1.n != d2.n:
        raise ValueError(f"strand-count mismatch: {d1.n} vs {d2.n}")
    offset = d1._next_id() - min((c.id for c in d2.crossings), default=0)
    shift = {c.id: c.id + offset for c in d2.crossings}
    s2, c2 = d2._relabeled(shift)
    strands = tuple(d1.strands[i] + s2[d1.perm[i]] for i in range(d1.n))
    perm = tuple(d2.perm[d1.perm[i]] for i in range(d1.n))
    return StringLinkDiagram(d1.n, strands, d1.crossings + c2, perm)


def closure(word: BraidWord | str) -> FlatLinkDiagram:
    """Braid closure of a flat virtual braid word.

    Bottom endpoint j is joined to top endpoint j, so the components
    follow the cycles of the word's permutation; each component starts
    at its smallest strand.
    """
    if isinstance(word, str):
        word = parse_word(word)
    if not word.is_flat:
        raise ValueError("closure() takes flat words (letters f and t)")
    strands, crossings, perm = _braid_layout(word)
    components = []
    seen = set()
    for start in range(word.n):
        if start in seen:
            continue
        comp: list[Passage] = []
        k = start
        while k not in seen:
            seen.add(k)
            comp.extend(strands[k])
            k = perm[k]
        components.append(tuple(comp))
    return FlatLinkDiagram(tuple(components), tuple(crossings))


def structurally_equal(d1, d2) -> bool:
    return type(d1) is type(d2) and d1.canonical() == d2.canonical()


# ---------------------------------------------------------------------------
# kinks (Omega_1 and Omega_1')


def _with_paths(d, paths, crossings):
    if isinstance(d, FlatLinkDiagram):
        return FlatLinkDiagram(paths, crossings)
    return StringLinkDiagram(d.n, paths, crossings, d.perm)


def insert_kink(d, path: int, position: int, kind: CrossingKind = CrossingKind.VIRTUAL,
                chirality: int = 1):
    """Insert a self-crossing as two consecutive passages before ``position``.

    For a virtual kink, ``chirality=+1`` makes the first passage the
    Left-approach one; for a real kink it makes the first passage the
    over-strand.
    """
    if chirality not in (1, -1):
        raise ValueError("chirality must be +1 or -1")
    seq = d.paths[path]
    if not 0 <= position <= len(seq):
        raise IndexError(f"position {position} outside path {path}")
    cid = d._next_id()
    first = 0 if chirality == 1 else 1
    if kind is CrossingKind.VIRTUAL:
        c = Crossing(cid, kind, left_slot=first)
    elif kind.is_real:
        c = Crossing(cid, kind, over_slot=first)
    else:
        c = Crossing(cid, kind)
    new = seq[:position] + (Passage(cid, 0), Passage(cid, 1)) + seq[position:]
    paths = d.paths[:path] + (new,) + d.paths[path + 1:]
    return _with_paths(d, paths, d.crossings + (c,))


def remove_kink(d, path: int, position: int):
    """Remove the kink whose two passages sit at ``position``, ``position + 1``."""
    seq = d.paths[path]
    if position + 1 >= len(seq) or seq[position].crossing != seq[position + 1].crossing:
        raise DiagramError(f"no kink at path {path} position {position}")
    cid = seq[position].crossing
    new = seq[:position] + seq[position + 2:]
    paths = d.paths[:path] + (new,) + d.paths[path + 1:]
    return _with_paths(d, paths, tuple(c for c in d.crossings if c.id != cid))


def find_kinks(d) -> list[tuple[int, int]]:
    """``(path, position)`` of every removable kink."""
    out = []
    for i, seq in enumerate(d.paths):
        for pos in range(len(seq) - 1):
            if seq[pos].crossing == seq[pos + 1].crossing:
                out.append((i, pos))
    return out
