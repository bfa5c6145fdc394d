"""Linking numbers and the virtual-crossing lower bound a_i(L)."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Matrix
from .bowling import matrix_invariant
from .diagram import StringLinkDiagram


def _strands_of(d: StringLinkDiagram, cid: int) -> tuple[int, int]:
    return d.locations[(cid, 0)][0], d.locations[(cid, 1)][0]


def _require_two(d: StringLinkDiagram):
    if d.n != 2:
        raise ValueError(f"linking numbers are defined for 2-string links, got n={d.n}")


def lk(d: StringLinkDiagram) -> int:
    """Sum of writhes of real crossings between the two strands."""
    _require_two(d)
    total = 0
    for c in d.crossings:
        a, b = _strands_of(d, c.id)
        if c.kind.is_real and a != b:
            total += c.kind.writhe
    return total


def lk_v(d: StringLinkDiagram) -> int:
    """Parity of the virtual crossings between the two strands."""
    _require_two(d)
    count = 0
    for c in d.virtual_crossings():
        a, b = _strands_of(d, c.id)
        count += a != b
    return count % 2


def a_i(m: Matrix, i: int) -> int:
    """max_j |a_ij| where m_ij = a_ij s + b_ij (0-based row)."""
    row = m.rows[i]
    for x in row:
        if x.real not in (0, 1):
            raise ValueError(f"entry {x} of row {i} is not of the form a*s + b with b in {{0, 1}}")
    if sum(x.real for x in row) != 1:
        raise ValueError(f"row {i} does not have exactly one unit entry")
    return max(abs(x.eps) for x in row)


def virtual_between_count(d: StringLinkDiagram, i: int) -> int:
    """Virtual crossings with exactly one slot on strand i."""
    count = 0
    for c in d.virtual_crossings():
        a, b = _strands_of(d, c.id)
        count += (a == i) != (b == i)
    return count


@dataclass(frozen=True)
class LinkingReport:
    lk: int | None
    lk_v: int | None
    a: tuple[int, ...]
    virtual_between: tuple[int, ...]

    def lines(self) -> list[str]:
        out = []
        if self.lk is not None:
            out.append(f"lk = {self.lk}")
            out.append(f"lk_v = {self.lk_v} (mod 2)")
        for k, (ai, vb) in enumerate(zip(self.a, self.virtual_between), start=1):
            out.append(f"strand {k}: a = {ai}, virtual crossings with other strands = {vb}")
        return out


def linking_report(d: StringLinkDiagram) -> LinkingReport:
    m = matrix_invariant(d)
    two = d.n == 2
    return LinkingReport(
        lk(d) if two else None,
        lk_v(d) if two else None,
        tuple(a_i(m, i) for i in range(d.n)),
        tuple(virtual_between_count(d, i) for i in range(d.n)),
    )
