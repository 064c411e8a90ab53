"""Exact linear algebra over the integers and rationals, plus a circuit
calculus for linear relations.

Matrices are plain lists of lists of Python ints (arbitrary precision).
Circuits are DSL strings, e.g. ``"dup ; (amp(2) * amp(3))"``.
"""

__version__ = "0.1.0"

from ._core import (
    CircuitParseError,
    CircuitTypeError,
    DimensionMismatch,
    DomainError,
    check_axioms,
    circuit_of_matrix,
    classify,
    desugar,
    det,
    equal,
    fmt,
    frac_add,
    frac_mul,
    hnf,
    is_canonical_hnf,
    is_hnf,
    is_unimodular,
    kernel_basis,
    matrix_of_circuit,
    mirror_circuit,
    negative,
    normalize,
    pullback,
    pushout,
    sem,
    solve,
    validate,
)

__all__ = [
    "CircuitParseError",
    "CircuitTypeError",
    "DimensionMismatch",
    "DomainError",
    "check_axioms",
    "circuit_of_matrix",
    "classify",
    "desugar",
    "det",
    "equal",
    "fmt",
    "frac_add",
    "frac_mul",
    "hnf",
    "is_canonical_hnf",
    "is_hnf",
    "is_unimodular",
    "kernel_basis",
    "matrix_of_circuit",
    "mirror_circuit",
    "negative",
    "normalize",
    "pullback",
    "pushout",
    "sem",
    "solve",
    "validate",
]
