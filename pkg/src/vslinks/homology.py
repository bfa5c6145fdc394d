"""Chain complexes on a finite VFB, their (co)homology and 2-cocycles.

Chains are dicts ``{tuple: coefficient}`` with zero coefficients dropped.
The basis of C_n is every n-tuple over the carrier in lexicographic
order; C_0 = 0.

Homology with coefficients Z_m is computed as a quotient of lattices in
Z^N that all contain m Z^N, so one integer code path serves both Z and
Z_m.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, NamedTuple

from .algebra import FgAbelianGroup
from .algebra.snf import integer_kernel, kernel_mod, lattice_quotient
from .vfb import FiniteVFB, validate_vfb

Chain = dict

MAX_BASIS = 10_000


def _add(chain: Chain, key, coeff: int) -> None:
    value = chain.get(key, 0) + coeff
    if value:
        chain[key] = value
    else:
        chain.pop(key, None)


def _check(S: FiniteVFB, n: int, tup) -> tuple[int, ...]:
    tup = tuple(tup)
    if len(tup) != n:
        raise ValueError(f"expected a {n}-tuple, got {tup}")
    if any(not 0 <= a < S.order for a in tup):
        raise ValueError(f"{tup} has entries outside the carrier")
    return tup


def boundary_vf(S: FiniteVFB, n: int, tup) -> Chain:
    """The boundary of the VF complex on a basis tuple."""
    a = _check(S, n, tup)
    out: Chain = {}
    if n <= 1:
        return out
    star, circ = S.star, S.circ
    for i in range(n):
        sign = -1 if i % 2 == 0 else 1  # (-1)^(i+1) for 0-based i
        ai = a[i]
        left = tuple(star[x][ai] for x in a[:i]) + a[i + 1:]
        right = a[:i] + tuple(circ[x][ai] for x in a[i + 1:])
        _add(out, left, sign)
        _add(out, right, -sign)
    return out


def boundary_sf(S: FiniteVFB, n: int, tup) -> Chain:
    """The boundary of the SF complex on a basis tuple."""
    a = _check(S, n, tup)
    out: Chain = {}
    circ = S.circ
    for i in range(n - 1):
        sign = -1 if i % 2 == 0 else 1
        rest = a[:i] + a[i + 1:]
        _add(out, rest, sign)
        _add(out, rest[:-1] + (circ[a[-1]][a[i]],), -sign)
    return out


def apply_linear(boundary: Callable, S: FiniteVFB, n: int, chain: Chain) -> Chain:
    out: Chain = {}
    for tup, k in chain.items():
        for key, c in boundary(S, n, tup).items():
            _add(out, key, k * c)
    return out


def degenerate_generators(S: FiniteVFB, n: int) -> list[Chain]:
    """Generators t + (..., a_{i+1} o a_i, a_i * a_{i+1}, ...) of the degenerate subcomplex."""
    out = []
    if n < 2:
        return out
    for a in basis(S, n):
        for i in range(n - 1):
            x, y = a[i], a[i + 1]
            partner = a[:i] + (S.circ[y][x], S.star[x][y]) + a[i + 2:]
            chain: Chain = {}
            _add(chain, a, 1)
            _add(chain, partner, 1)
            out.append(chain)
    return out


def basis(S: FiniteVFB, n: int) -> list[tuple[int, ...]]:
    if n <= 0:
        return []
    return list(itertools.product(range(S.order), repeat=n))


# ---------------------------------------------------------------------------
# matrices


def _guard(S: FiniteVFB, n: int) -> None:
    if S.order ** n > MAX_BASIS:
        raise ValueError(f"degree {n} needs {S.order}^{n} basis tuples, more than {MAX_BASIS}")


def boundary_matrix(S: FiniteVFB, n: int, complex_: str) -> list[list[int]]:
    """Matrix of C_n -> C_{n-1}, rows indexed by (n-1)-tuples."""
    boundary = _boundary(complex_)
    rows_index = {t: k for k, t in enumerate(basis(S, n - 1))}
    cols = basis(S, n)
    mat = [[0] * len(cols) for _ in rows_index]
    if not rows_index:
        return mat
    for j, t in enumerate(cols):
        for key, c in boundary(S, n, t).items():
            mat[rows_index[key]][j] += c
    return mat


def _vectors(S: FiniteVFB, n: int, chains: list[Chain]) -> list[list[int]]:
    index = {t: k for k, t in enumerate(basis(S, n))}
    out, seen = [], set()
    for ch in chains:
        v = [0] * len(index)
        for t, c in ch.items():
            v[index[t]] = c
        key = tuple(v)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def _boundary(complex_: str):
    if complex_ == "vf":
        return boundary_vf
    if complex_ == "sf":
        return boundary_sf
    raise ValueError(f"unknown complex {complex_!r} (expected 'vf' or 'sf')")


def _relations(S: FiniteVFB, n: int, complex_: str, modulus: int) -> list[list[int]]:
    """Generators of the lattice we quotient C_n by (degenerate part plus m Z^N)."""
    size = S.order ** n if n > 0 else 0
    rels = _vectors(S, n, degenerate_generators(S, n)) if complex_ == "vf" else []
    if modulus:
        rels += [[modulus if i == j else 0 for j in range(size)] for i in range(size)]
    return rels


def _preimage(mat: list[list[int]], ncols: int, targets: list[list[int]]) -> list[list[int]]:
    """Generators of {x in Z^ncols : mat x in span(targets)}."""
    nrows = len(mat)
    if nrows == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    wide = [list(mat[r]) + [-t[r] for t in targets] for r in range(nrows)]
    kernel = integer_kernel(wide, ncols + len(targets))
    gens = [v[:ncols] for v in kernel]
    return [g for g in gens if any(g)]


def _solutions(conditions: list[list[int]], size: int, m: int) -> list[list[int]]:
    """Generators of {x in Z^size : every condition row . x = 0 (mod m; m=0 means over Z)}."""
    if not conditions:
        return [[int(i == j) for j in range(size)] for i in range(size)]
    gens = kernel_mod(conditions, size, m) if m else integer_kernel(conditions, size)
    return [g for g in gens if any(g)]


def _image(mat: list[list[int]], ncols: int) -> list[list[int]]:
    return [[mat[r][j] for r in range(len(mat))] for j in range(ncols)]


class Group(NamedTuple):
    rank: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def _modulus(coeff) -> int:
    group = FgAbelianGroup.parse(coeff) if isinstance(coeff, str) else coeff
    if group == FgAbelianGroup.integers():
        return 0
    if group.rank == 0 and len(group.torsion) == 1:
        return group.torsion[0]
    raise ValueError(f"coefficients must be Z or Z_m, got {group}")


def homology(S: FiniteVFB, n_max: int, complex_: str = "vf", coeff="Z") -> list[Group]:
    """H_0 .. H_{n_max} of the VF quotient complex or the SF complex."""
    validate_vfb(S)
    _boundary(complex_)
    m = _modulus(coeff)
    _guard(S, n_max + 1)
    out = [Group(0, ())]
    for n in range(1, n_max + 1):
        size = S.order ** n
        here = _relations(S, n, complex_, m)
        below = _relations(S, n - 1, complex_, m) if n > 1 else []
        down = boundary_matrix(S, n, complex_) if n > 1 else []
        cycles = _preimage(down, size, below)
        up = boundary_matrix(S, n + 1, complex_)
        bounds = _image(up, S.order ** (n + 1)) + here
        bounds = [b for b in bounds if any(b)]
        rank, torsion = lattice_quotient(bounds, cycles, size)
        out.append(Group(rank, tuple(torsion)))
    return out


def homology_vf(S: FiniteVFB, n_max: int, coeff="Z") -> list[Group]:
    return homology(S, n_max, "vf", coeff)


def homology_sf(S: FiniteVFB, n_max: int, coeff="Z") -> list[Group]:
    return homology(S, n_max, "sf", coeff)


def cohomology(S: FiniteVFB, n_max: int, complex_: str = "vf", coeff="Z") -> list[Group]:
    """H^0 .. H^{n_max} of Hom(complex, A) for A = Z or Z_m.

    A cochain is a vector f in Z^N (values mod m for Z_m) vanishing on the
    degenerate part.  Cocycles satisfy f o boundary = 0.
    """
    validate_vfb(S)
    _boundary(complex_)
    m = _modulus(coeff)
    _guard(S, n_max + 1)

    def cochains(n):
        # f with <f, g> = 0 (mod m) for every degenerate generator g
        degen = _vectors(S, n, degenerate_generators(S, n)) if complex_ == "vf" else []
        return _solutions(degen, S.order ** n, m)

    out = [Group(0, ())]
    for n in range(1, n_max + 1):
        size = S.order ** n
        degen = _vectors(S, n, degenerate_generators(S, n)) if complex_ == "vf" else []
        up = boundary_matrix(S, n + 1, complex_)
        conditions = degen + [list(col) for col in zip(*up)] if up and up[0] else list(degen)
        cocycles = _solutions(conditions, size, m)
        bounds = []
        if n > 1:
            down = boundary_matrix(S, n, complex_)
            for h in cochains(n - 1):
                # (h o d)(t) = sum_r h_r d[r][t]
                bounds.append([sum(h[r] * down[r][t] for r in range(len(down)) if h[r]) for t in range(size)])
        if m:
            bounds += [[m if i == j else 0 for j in range(size)] for i in range(size)]
        bounds = [b for b in bounds if any(b)]
        rank, torsion = lattice_quotient(bounds, cocycles, size)
        out.append(Group(rank, tuple(torsion)))
    return out


# ---------------------------------------------------------------------------
# 2-cocycles of the state sum


class CocycleError(ValueError):
    pass


@dataclass(frozen=True)
class Cochain2:
    """phi: S x S -> A as a table ``table[a][b] = phi(a, b)`` of group elements."""

    group: FgAbelianGroup
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __init__(self, group: FgAbelianGroup | str, table):
        group = FgAbelianGroup.parse(group) if isinstance(group, str) else group
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "table", tuple(tuple(group.element(x) for x in row) for row in table))
        m = len(self.table)
        if any(len(row) != m for row in self.table):
            raise ValueError("cochain table must be square")

    @property
    def order(self) -> int:
        return len(self.table)

    def __call__(self, a: int, b: int) -> tuple[int, ...]:
        return self.table[a][b]

    @classmethod
    def zero(cls, group, m: int) -> Cochain2:
        group = FgAbelianGroup.parse(group) if isinstance(group, str) else group
        return cls(group, [[group.zero()] * m for _ in range(m)])

    def __add__(self, other: Cochain2) -> Cochain2:
        if other.group != self.group or other.order != self.order:
            raise ValueError("cochains live on different groups or carriers")
        g = self.group
        return Cochain2(g, [[g.add(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(self.table, other.table)])

    def _plain(self, x):
        return x[0] if len(x) == 1 else list(x)

    def to_json(self) -> dict:
        return {"coeff": str(self.group), "table": [[self._plain(x) for x in row] for row in self.table]}

    @classmethod
    def from_json(cls, data: dict) -> Cochain2:
        return cls(data["coeff"], data["table"])

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _require_no_two_torsion(group: FgAbelianGroup) -> None:
    if group.has_two_torsion():
        raise CocycleError(f"coefficient group {group} has 2-torsion")


def _conditions(S: FiniteVFB):
    """Each condition as a list of (sign, (a, b)) terms plus a label and witness."""
    star, circ = S.star, S.circ
    E = S.elements
    for a, b in itertools.product(E, repeat=2):
        yield "condition 1", (a, b), [(1, (a, b)), (1, (circ[b][a], star[a][b]))]
    for a, b, c in itertools.product(E, repeat=3):
        yield "condition 2", (a, b, c), [
            (-1, (b, c)), (1, (circ[b][a], circ[c][a])), (1, (star[a][b], c)),
            (-1, (a, circ[c][b])), (-1, (star[a][c], star[b][c])), (1, (a, b))]
    for a, b, c in itertools.product(E, repeat=3):
        yield "condition 3", (a, b, c), [
            (-1, (b, c)), (1, (b, circ[c][a])), (1, (a, c)), (-1, (a, circ[c][b]))]


def find_cocycle_violation(S: FiniteVFB, phi: Cochain2):
    """``None`` when phi passes, else ``(condition, witness, value)``."""
    _require_no_two_torsion(phi.group)
    if phi.order != S.order:
        raise ValueError(f"cochain is on {phi.order} elements, VFB has {S.order}")
    moduli = phi.group.moduli
    table = phi.table
    for label, witness, terms in _conditions(S):
        total = [0] * len(moduli)
        for sign, (a, b) in terms:
            for k, x in enumerate(table[a][b]):
                total[k] += sign * x
        if any(x % d if d else x for x, d in zip(total, moduli)):
            return label, witness, phi.group.element(total)
    return None


def is_state_sum_cocycle(S: FiniteVFB, phi: Cochain2) -> bool:
    return find_cocycle_violation(S, phi) is None


def coboundary(S: FiniteVFB, eta, group: FgAbelianGroup | str = "Z") -> Cochain2:
    """(d eta)(a, b) = -eta(b) + eta(b o a) + eta(a * b) - eta(a)."""
    group = FgAbelianGroup.parse(group) if isinstance(group, str) else group
    eta = [group.element(x) for x in eta]
    if len(eta) != S.order:
        raise ValueError("eta must assign a value to every element")
    table = []
    for a in S.elements:
        row = []
        for b in S.elements:
            terms = [group.neg(eta[b]), eta[S.circ[b][a]], eta[S.star[a][b]], group.neg(eta[a])]
            row.append(group.sum(terms))
        table.append(row)
    return Cochain2(group, table)


def cocycle_matrix(S: FiniteVFB) -> list[list[int]]:
    """Integer matrix of the three conditions in the unknowns phi(a, b), index a*m + b."""
    m = S.order
    rows, seen = [], set()
    for _, _, terms in _conditions(S):
        row = [0] * (m * m)
        for sign, (a, b) in terms:
            row[a * m + b] += sign
        key = tuple(row)
        if any(row) and key not in seen:
            seen.add(key)
            rows.append(row)
    return rows


def enumerate_cocycles(S: FiniteVFB, coeff="Z") -> list[Cochain2]:
    """A generating set of the cocycle module (over Z or Z_m)."""
    validate_vfb(S)
    group = FgAbelianGroup.parse(coeff) if isinstance(coeff, str) else coeff
    _require_no_two_torsion(group)
    m = _modulus(group)
    k = S.order
    if k ** 3 > MAX_BASIS:
        raise ValueError(f"carrier of order {k} is too large for cocycle enumeration")
    gens = _solutions(cocycle_matrix(S), k * k, m)
    out, seen = [], set()
    for v in gens:
        phi = Cochain2(group, [[v[a * k + b] for b in range(k)] for a in range(k)])
        if any(x != group.zero() for row in phi.table for x in row) and phi.table not in seen:
            seen.add(phi.table)
            out.append(phi)
    return out
