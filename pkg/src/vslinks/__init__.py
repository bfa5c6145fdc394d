"""Invariants of virtual string links and flat virtual links."""

from .bowling import burau, matrix_invariant, matrix_invariant_oracle, permutation_rep_fvb3, rho
from .diagram import (
    BraidWord,
    CrossingKind,
    FlatLinkDiagram,
    StringLinkDiagram,
    closure,
    compose,
    from_braid_word,
    parse_word,
    validate,
)
from .homology import (
    Cochain2,
    coboundary,
    cohomology,
    enumerate_cocycles,
    homology_sf,
    homology_vf,
    is_state_sum_cocycle,
)
from .linking import a_i, linking_report, lk, lk_v, virtual_between_count
from .statesum import state_sum, verify_coboundary_invariance
from .vfb import (
    FiniteVFB,
    constant_action_vfb,
    count_colorings,
    linear_vfb,
    present_fundamental_vfb,
    trivial_vfb,
    validate_vfb,
)

__version__ = "0.1.0"
