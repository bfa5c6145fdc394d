"""Bowling-ball matrices of virtual string links and braid representations.

``matrix_invariant`` is the dual-number invariant: real crossings are
transparent, a Left-approach virtual passage multiplies the walking
ball by ``1-s`` and sends ``s`` across, a Right-approach one multiplies
by ``1+s`` and sends ``-s`` across.  Balls carrying ``+-s`` can never
split again (``s^2 = 0``), so each only lands on the endpoint of the
strand it was sent to.

``matrix_invariant_oracle`` enumerates every walk of the general
six-rule model instead, and is kept independent of the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import S, DualInt, LaurentPoly, Matrix
from .diagram import BraidWord, CrossingKind, StringLinkDiagram, parse_word, validate


def matrix_invariant(d: StringLinkDiagram) -> Matrix:
    """M(L) over Z[s]/(s^2); row i is the fate of a ball bowled on strand i."""
    validate(d)
    zero = DualInt.zero()
    rows = []
    for i, strand in enumerate(d.strands):
        row = [zero] * d.n
        ball = DualInt.one()
        for p in strand:
            if d.crossing(p.crossing).kind is not CrossingKind.VIRTUAL:
                continue
            target = d.perm[d.other_location(p)[0]]
            if d.is_left(p):
                row[target] += ball * S
                ball = ball * (1 - S)
            else:
                row[target] += ball * -S
                ball = ball * (1 + S)
        row[d.perm[i]] += ball
        rows.append(row)
    return Matrix(rows)


@dataclass(frozen=True)
class BallModel:
    """Keep-walking weights of the six crossing rules.

    ``t``/``v``: over-strand at a negative/positive crossing;
    ``u``/``w``: under-strand at a negative/positive crossing;
    ``s``/``r``: jump weights at a virtual crossing approached from the
    left/right.  Jumping at a real crossing has weight ``1 - keep``.
    """

    ring: Any
    t: Any
    u: Any
    v: Any
    w: Any
    s: Any
    r: Any


DUAL_MODEL = BallModel(DualInt, t=1, u=1, v=1, w=1, s=S, r=-S)
BURAU_MODEL = BallModel(LaurentPoly, t=LaurentPoly.t(), u=1, v=LaurentPoly.t(-1), w=1, s=0, r=0)


def matrix_invariant_oracle(d: StringLinkDiagram, model: BallModel = DUAL_MODEL,
                            max_steps: int = 100_000) -> Matrix:
    """Sum the weights of all ball paths, pruning paths of weight zero.

    A jump leaves through the other slot of the crossing and carries on
    along that strand.  Terminates for the dual model on any diagram and
    for the Burau model on braid diagrams (no loops).
    """
    validate(d)
    ring = model.ring
    one = ring.one()
    t, u, v, w = (ring.coerce(x) for x in (model.t, model.u, model.v, model.w))
    s, r = ring.coerce(model.s), ring.coerce(model.r)
    rows = []
    steps = 0
    for i in range(d.n):
        row = [ring.zero()] * d.n
        stack = [(i, 0, one)]
        while stack:
            strand, pos, weight = stack.pop()
            steps += 1
            if steps > max_steps:
                raise RuntimeError("path enumeration did not terminate; diagram has weighted loops")
            path = d.strands[strand]
            if pos == len(path):
                row[d.perm[strand]] = row[d.perm[strand]] + weight
                continue
            p = path[pos]
            c = d.crossing(p.crossing)
            if c.kind is CrossingKind.VIRTUAL:
                jump = s if d.is_left(p) else r
                keep = one - jump
            else:
                over = d.is_over(p)
                if c.kind is CrossingKind.NEGATIVE:
                    keep = t if over else u
                else:
                    keep = v if over else w
                jump = one - keep
            kept = weight * keep
            if kept:
                stack.append((strand, pos + 1, kept))
            jumped = weight * jump
            if jumped:
                other_strand, other_pos = d.other_location(p)
                stack.append((other_strand, other_pos + 1, jumped))
        rows.append(row)
    return Matrix(rows, ring)


def _word(w) -> BraidWord:
    return parse_word(w) if isinstance(w, str) else w


RHO_SIGMA = ((0, 1), (1, 0))
RHO_TAU = ((S, 1 + S), (1 - S, -S))


def rho_generator(n: int, letter) -> Matrix:
    i = letter.index - 1
    block = RHO_TAU if letter.kind == "t" else RHO_SIGMA
    return Matrix.block(n, i, block)


def rho(word: BraidWord | str) -> Matrix:
    """The representation VB_n -> GL_n(Z[s]/(s^2)) (flat letters map like sigma)."""
    word = _word(word)
    out = Matrix.identity(word.n)
    for x in word.letters:
        out = out @ rho_generator(word.n, x)
    return out


def burau_generator(n: int, letter) -> Matrix:
    t = LaurentPoly.t()
    ti = LaurentPoly.t(-1)
    if letter.kind == "t":
        block = ((0, 1), (1, 0))
    elif letter.kind == "f":
        raise ValueError("the Burau case has no flat crossings")
    elif letter.inverse:
        # ball matrix [[0, 1], [t, 1-t]], transposed
        block = ((0, t), (1, 1 - t))
    else:
        # over ball: keep t^-1 to lane i+1, jump 1-t^-1 to lane i; under ball keeps to lane i
        block = ((1 - ti, 1), (ti, 0))
    return Matrix.block(n, letter.index - 1, block, LaurentPoly)


def burau(word: BraidWord | str) -> Matrix:
    """Case u=w=1, s=r=0, v=1/t on braid words, in the same transposed layout as rho.

    The ball-walk matrix is ``burau(w).T``, so here the columns sum to 1.
    """
    word = _word(word)
    out = Matrix.identity(word.n, LaurentPoly)
    for x in word.letters:
        out = out @ burau_generator(word.n, x)
    return out


_R_TAU = {1: (2, 1, 3), 2: (1, 3, 2)}


def permutation_rep_fvb3(word: BraidWord | str) -> tuple[int, ...]:
    """r: FVB_3 -> S_3 with r(f_i) = id; result in 1-based one-line notation.

    Letters multiply left to right as functions, ``r(xy) = r(x) . r(y)``.
    """
    word = _word(word)
    if word.n != 3:
        raise ValueError(f"r is defined on FVB_3, got n={word.n}")
    perm = (1, 2, 3)
    for x in word.letters:
        if x.kind == "t":
            g = _R_TAU[x.index]
            perm = tuple(perm[g[k] - 1] for k in range(3))
    return perm
