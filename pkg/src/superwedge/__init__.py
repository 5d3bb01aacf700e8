"""Exact combinatorics of quantum wedge modules, Verma classes and super duality for gl(m|n)."""

from .indexset import Pattern, Shape, enumerate_patterns, kappa, make_pattern
from .fock import FockVector, e_act, f_act, k_act
from .laurent import Laurent

__version__ = "0.1.0"

__all__ = [
    "FockVector", "Laurent", "Pattern", "Shape",
    "e_act", "enumerate_patterns", "f_act", "k_act", "kappa", "make_pattern",
]
