"""The cocycle state-sum invariant of flat virtual links."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GroupRingElement
from .homology import Cochain2, CocycleError, coboundary, find_cocycle_violation
from .vfb import FiniteVFB, iter_colorings, present_fundamental_vfb, validate_vfb


@dataclass(frozen=True)
class StateSumResult:
    value: GroupRingElement
    breakdown: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # (coloring, weight)

    def __str__(self):
        return str(self.value)


def _check_cocycle(S: FiniteVFB, phi: Cochain2) -> None:
    bad = find_cocycle_violation(S, phi)
    if bad is not None:
        label, witness, value = bad
        raise CocycleError(f"{label} fails at {witness}: sum is {phi.group.format_element(value)}")


def state_sum(d, S: FiniteVFB, phi: Cochain2, check: bool = True) -> StateSumResult:
    """Sum over colorings of [sum over virtual crossings of phi(left-in, right-in)].

    Flat crossings carry no weight.
    """
    validate_vfb(S)
    if check:
        _check_cocycle(S, phi)
    elif phi.group.has_two_torsion():
        raise CocycleError(f"coefficient group {phi.group} has 2-torsion")
    group = phi.group
    pres = present_fundamental_vfb(d)
    breakdown = []
    for colors in iter_colorings(pres, S):
        w = group.sum(phi(colors[r.left_in], colors[r.right_in]) for r in pres.relations)
        breakdown.append((colors, w))
    value = GroupRingElement(group, (w for _, w in breakdown))
    return StateSumResult(value, tuple(breakdown))


@dataclass(frozen=True)
class CoboundaryCheck:
    ok: bool
    before: GroupRingElement
    after: GroupRingElement
    problem: str = ""


def verify_coboundary_invariance(d, S: FiniteVFB, phi: Cochain2, eta) -> CoboundaryCheck:
    """Compare the state sums of phi and phi + d(eta)."""
    shifted = phi + coboundary(S, eta, phi.group)
    before = state_sum(d, S, phi).value
    bad = find_cocycle_violation(S, shifted)
    if bad is not None:
        label, witness, _ = bad
        after = state_sum(d, S, shifted, check=False).value
        return CoboundaryCheck(False, before, after, f"shifted cochain fails {label} at {witness}")
    after = state_sum(d, S, shifted, check=False).value
    if before != after:
        return CoboundaryCheck(False, before, after, f"state sums differ: {before} vs {after}")
    return CoboundaryCheck(True, before, after)
