"""Exact commutative algebra for exact zero divisors, Koszul complexes and
quasi-Gorenstein maps over finite-dimensional and graded local rings."""

from .artin import FGModule, FiniteLocalAlgebra, algebra_from_text, from_presentation, trivial_extension
from .complexes import ChainComplex, KoszulComplex, cone, hom_complex, koszul, shift, tensor
from .criteria import (
    CheckReport,
    RingTower,
    gorenstein_ring_test,
    gp_dg_module_checks,
    is_exact_element,
    is_exact_sequence,
    koszul_augmentation_qg,
    quasi_gorenstein_direct,
    top_bottom_criterion,
    tower_quasi_gorenstein,
    trivial_ext_checks,
)
from .graded import GradedModule, GradedQuotientRing
from .linalg import GF101, QQ, PrimeField, Subspace
from .poly import Polynomial, PolynomialRing
from .resolutions import MinimalFreeResolution, ext, resolve_minimal, tor
from .ringfile import parse_ring_text, ring_from_text

__version__ = "0.1.0"
