"""Rigid reflections and rigid roots of the rank-3 Coxeter groups W(m), and
the reduction of primitive lattice vectors to reduced roots of H(m)."""

from .coxeter import (
    CoxeterPresentation,
    GroupMatrix,
    coxeter_w,
    elements_equal,
    eval_word,
    is_reflection_word,
    reflection_root,
    reflection_root_symbolic,
    universal,
)
from .errors import InvariantViolation, UsageError
from .exact_algebra import AlgebraicElement, SymbolicPolynomial, field, minimal_polynomial, specialize
from .lattice_words import (
    SpiralForm,
    crossing_word,
    dyck_path,
    dyck_word,
    shift,
    sigma_conjugate_check,
    spiral_normalize,
)
from .rank2_roots import LatticeVector, RootClass, RootKind, classify, enumerate_reduced_positive, q_form
from .reduction import ReductionStep, ReductionTrace, locate_interval, reduce, reduce_step, shift_normalize

__all__ = [
    "AlgebraicElement",
    "CoxeterPresentation",
    "GroupMatrix",
    "InvariantViolation",
    "LatticeVector",
    "ReductionStep",
    "ReductionTrace",
    "RootClass",
    "RootKind",
    "SpiralForm",
    "SymbolicPolynomial",
    "UsageError",
    "classify",
    "coxeter_w",
    "crossing_word",
    "dyck_path",
    "dyck_word",
    "elements_equal",
    "enumerate_reduced_positive",
    "eval_word",
    "field",
    "is_reflection_word",
    "locate_interval",
    "minimal_polynomial",
    "q_form",
    "reduce",
    "reduce_step",
    "reflection_root",
    "reflection_root_symbolic",
    "shift",
    "shift_normalize",
    "sigma_conjugate_check",
    "specialize",
    "spiral_normalize",
    "universal",
]
