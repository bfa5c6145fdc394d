"""Relation rewriting on virtual and flat braid words.

Relation names (``f`` letters play the role of sigma in flat words):

    sigma_far     s_i s_j = s_j s_i, |i-j| > 1
    sigma_braid   s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}
    tau_square    t_i t_i = 1
    tau_far       t_i t_j = t_j t_i, |i-j| > 1
    tau_braid     t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}
    mixed_far     s_i t_j = t_j s_i, |i-j| > 1
    mixed         s_i t_{i+1} t_i = t_{i+1} t_i s_{i+1}
    inverse_pair  s_i S_i = S_i s_i = 1  (f_i f_i = 1 for flat words)

Every relation is applied in whichever direction matches.  The sigma
relations also accept all-inverse letters (the inverse of a relation is
again a relation).  Cancelling relations (``tau_square``,
``inverse_pair``) delete when ``index`` is None and insert otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import BraidWord, Letter

RELATIONS = (
    "sigma_far",
    "sigma_braid",
    "tau_square",
    "tau_far",
    "tau_braid",
    "mixed_far",
    "mixed",
    "inverse_pair",
)

_CANCELLING = ("tau_square", "inverse_pair")


class RelationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RewriteStep:
    relation: str
    position: int
    index: int | None = None
    inverse: bool = False
    kind: str = "s"

    def __str__(self):
        if self.index is None:
            return f"{self.relation}@{self.position}"
        letter = Letter(self.kind if self.relation == "inverse_pair" else "t", self.index, self.inverse)
        return f"{self.relation}@{self.position}+{letter}"


def _sigma_like(x: Letter) -> bool:
    return x.kind in "sf"


def _rewrite(letters: tuple[Letter, ...], relation: str, pos: int):
    """Replacement for the matched window, or None."""
    w = letters[pos:]
    if relation in ("sigma_far", "tau_far", "mixed_far"):
        if len(w) < 2:
            return None
        a, b = w[0], w[1]
        if abs(a.index - b.index) <= 1:
            return None
        kinds = {_sigma_like(a), _sigma_like(b)}
        ok = {"sigma_far": kinds == {True}, "tau_far": kinds == {False},
              "mixed_far": kinds == {True, False}}[relation]
        return (2, (b, a)) if ok else None
    if relation in ("sigma_braid", "tau_braid"):
        if len(w) < 3:
            return None
        a, b, c = w[0], w[1], w[2]
        want_sigma = relation == "sigma_braid"
        if not all(_sigma_like(x) == want_sigma for x in (a, b, c)):
            return None
        if len({x.kind for x in (a, b, c)}) != 1 or len({x.inverse for x in (a, b, c)}) != 1:
            return None
        if a.index != c.index or abs(a.index - b.index) != 1:
            return None
        return 3, (b, a, b)
    if relation == "mixed":
        if len(w) < 3:
            return None
        a, b, c = w[0], w[1], w[2]
        # s_i t_{i+1} t_i  ->  t_{i+1} t_i s_{i+1}
        if _sigma_like(a) and b.kind == "t" and c.kind == "t":
            i = a.index
            if b.index == i + 1 and c.index == i:
                return 3, (b, c, a._replace(index=i + 1))
        # t_{j} t_{j-1} s_j  ->  s_{j-1} t_j t_{j-1}
        if a.kind == "t" and b.kind == "t" and _sigma_like(c):
            j = c.index
            if a.index == j and b.index == j - 1 and j >= 2:
                return 3, (c._replace(index=j - 1), a, b)
        return None
    if relation == "tau_square":
        if len(w) >= 2 and w[0].kind == "t" and w[0] == w[1]:
            return 2, ()
        return None
    if relation == "inverse_pair":
        if len(w) >= 2 and _sigma_like(w[0]) and w[1] == w[0].inverted():
            return 2, ()
        return None
    raise ValueError(f"unknown relation {relation!r}")


def apply_relation(word: BraidWord, relation: str, position: int, index: int | None = None,
                   inverse: bool = False, kind: str | None = None) -> BraidWord:
    """Rewrite ``word`` by ``relation`` at letter ``position``.

    For the cancelling relations, giving ``index`` inserts the pair
    ``t_index t_index`` or ``s_index S_index`` (``S s`` when ``inverse``;
    ``f f`` when ``kind='f'``) before ``position``.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    letters = word.letters
    if index is not None:
        if relation not in _CANCELLING:
            raise ValueError(f"{relation} has no insertion form")
        if not 0 <= position <= len(letters):
            raise RelationMismatch(f"insertion position {position} out of range")
        if relation == "tau_square":
            pair = (Letter("t", index), Letter("t", index))
        else:
            kind = kind or ("s" if word.is_virtual else "f")
            x = Letter(kind, index, inverse and kind == "s")
            pair = (x, x.inverted())
        return BraidWord(word.n, letters[:position] + pair + letters[position:])
    if not 0 <= position < len(letters):
        raise RelationMismatch(f"position {position} out of range")
    hit = _rewrite(letters, relation, position)
    if hit is None:
        raise RelationMismatch(f"{relation} does not match {word} at {position}")
    width, replacement = hit
    return BraidWord(word.n, letters[:position] + tuple(replacement) + letters[position + width:])


def apply_step(word: BraidWord, step: RewriteStep) -> BraidWord:
    return apply_relation(word, step.relation, step.position, step.index, step.inverse, step.kind)


def matches(word: BraidWord) -> list[RewriteStep]:
    """Every non-inserting rewrite applicable to ``word``."""
    out = []
    for pos in range(len(word.letters)):
        for rel in RELATIONS:
            if _rewrite(word.letters, rel, pos) is not None:
                out.append(RewriteStep(rel, pos))
    return out


def random_step(word: BraidWord, rng: random.Random, insert_rate: float = 0.3,
                max_length: int = 40, flat: bool | None = None) -> RewriteStep | None:
    """One random rewrite; ``flat`` (default: word has f letters) picks f over s insertions."""
    if flat is None:
        flat = not word.is_virtual
    candidates = matches(word)
    can_insert = word.n >= 2 and len(word.letters) + 2 <= max_length
    if can_insert and (not candidates or rng.random() < insert_rate):
        relation = rng.choice(_CANCELLING)
        kind = "f" if flat else "s"
        return RewriteStep(relation, rng.randint(0, len(word.letters)), rng.randint(1, word.n - 1),
                           rng.random() < 0.5 and kind == "s", kind)
    if not candidates:
        return None
    return rng.choice(candidates)


def random_rewrite(word: BraidWord, steps: int, seed: int, **kw) -> tuple[BraidWord, list[RewriteStep]]:
    """``steps`` random relation rewrites; returns the word and the replayable trace."""
    rng = random.Random(seed)
    trace = []
    for _ in range(steps):
        step = random_step(word, rng, **kw)
        if step is None:
            break
        word = apply_step(word, step)
        trace.append(step)
    return word, trace


def random_equivalent(word: BraidWord, steps: int, seed: int) -> BraidWord:
    return random_rewrite(word, steps, seed)[0]


def replay(word: BraidWord, trace) -> BraidWord:
    for step in trace:
        word = apply_step(word, step)
    return word


def random_word(rng: random.Random, n: int, length: int, kinds: str = "sSt") -> BraidWord:
    """Uniform random word; ``kinds`` picks from ``s`` ``S`` ``t`` ``f``."""
    if n < 2:
        return BraidWord(n)
    letters = []
    for _ in range(length):
        c = rng.choice(kinds)
        letters.append(Letter("s" if c == "S" else c, rng.randint(1, n - 1), c == "S"))
    return BraidWord(n, tuple(letters))
