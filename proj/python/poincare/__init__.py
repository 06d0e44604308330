"""Unitary representations of the Poincare group: covering map, Wigner rotations, Mackey
induction on finite semidirect products, covariant fields and the spin-statistics check."""

from ._core import (
    DomainError,
    bracket_verdict,
    builtin_groups,
    covering_map,
    jordan_pauli_delta,
    mackey,
    mackey_custom,
    spin_rep,
    boost,
    verify,
    verify_invariants,
    wigner_rotation,
)

__all__ = [
    "DomainError",
    "boost",
    "bracket_verdict",
    "builtin_groups",
    "covering_map",
    "jordan_pauli_delta",
    "mackey",
    "mackey_custom",
    "spin_rep",
    "verify",
    "verify_invariants",
    "wigner_rotation",
]
