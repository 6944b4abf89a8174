"""One-variable language equations X ⊕ L = R and L ⊕ X = R.

⊕ is site-directed insertion or its alphabetic variant, with regular
constants L and R.  Deleting the known operand from the complement of R
along the matching inverse trajectory set yields the complement of the
maximal candidate: a superset of every solution.  A solution exists
exactly when that candidate is itself a solution, which is verified
explicitly by substituting it back, so `solve` never reports a solvable
equation without a machine-checked witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import (
    DEFAULT_STATE_CAP,
    Dfa,
    InputError,
    Nfa,
    ResourceLimitError,
    complement,
    determinize,
    equivalent,
    trim,
)
from .constructions import asdi_nfa_direct, sdi_nfa_direct
from .oracle import SdiVariant
from .trajectories import deletion_nfa, named_trajectory, reversed_deletion


class UnknownSide(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class EquationSpec:
    side: UnknownSide
    variant: SdiVariant
    known: Nfa
    result: Nfa

    def __post_init__(self):
        if self.variant not in (SdiVariant.GENERAL, SdiVariant.ALPHABETIC):
            raise InputError("equations support the general and alphabetic variants only")
        if self.known.alphabet != self.result.alphabet:
            raise InputError("operand alphabets differ")


@dataclass(frozen=True)
class EquationSolution:
    solvable: bool
    candidate: Dfa
    verified: bool


class EquationResourceError(ResourceLimitError):
    """Resource cap hit mid-solve; carries the candidate when one exists."""

    def __init__(self, message: str, candidate: Dfa | None = None):
        super().__init__(message)
        self.candidate = candidate


_TRAJECTORY_FOR_CASE = {
    (UnknownSide.LEFT, SdiVariant.GENERAL): "T1",
    (UnknownSide.RIGHT, SdiVariant.GENERAL): "T2",
    (UnknownSide.LEFT, SdiVariant.ALPHABETIC): "T1a",
    (UnknownSide.RIGHT, SdiVariant.ALPHABETIC): "T2a",
}


def candidate(spec: EquationSpec, cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Maximal solution candidate: the complement of deleting the known
    operand from the complement of the result along the inverse
    trajectories for the unknown side."""
    traj = named_trajectory(_TRAJECTORY_FOR_CASE[(spec.side, spec.variant)]).language
    result_bar = complement(determinize(spec.result, cap))
    if spec.side is UnknownSide.LEFT:
        deleted = deletion_nfa(result_bar, spec.known, traj)
    else:
        # known (rev-delete) result_bar unfolds to deleting known from result_bar
        deleted = reversed_deletion(spec.known, result_bar, traj)
    return complement(determinize(trim(deleted), cap))


def _apply(solution: Nfa, spec: EquationSpec) -> Nfa:
    build = sdi_nfa_direct if spec.variant is SdiVariant.GENERAL else asdi_nfa_direct
    if spec.side is UnknownSide.LEFT:
        return build(solution, spec.known)
    return build(spec.known, solution)


def verify_solution(solution: Nfa, spec: EquationSpec, cap: int = DEFAULT_STATE_CAP) -> bool:
    """Does substituting `solution` for X satisfy the equation exactly?"""
    return equivalent(_apply(solution, spec), spec.result, cap)


def solve(spec: EquationSpec, cap: int = DEFAULT_STATE_CAP) -> EquationSolution:
    """Decide the equation and produce the maximal candidate.

    The candidate is a superset of all solutions; the equation is solvable
    iff the candidate verifies, so `solvable` always matches `verified`.
    """
    cand = candidate(spec, cap)
    try:
        ok = verify_solution(cand, spec, cap)
    except ResourceLimitError as exc:
        raise EquationResourceError(f"verification hit the state cap: {exc}", cand) from exc
    return EquationSolution(solvable=ok, candidate=cand, verified=ok)
