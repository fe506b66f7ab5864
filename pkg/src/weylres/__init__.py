"""Exact computations with two-row Weyl and Schur modules over GF(p).

Quotient-module models of K_(a,b)V and L_(a,b)V, the raising-map complexes
K, L, M, N built from them, their homology, and the Weyl filtration
dimension of S(2, r).
"""

from .complexes import build_complex, homology_profile
from .modules import build_module, carter_payne_certificate, CPHypotheses
from .symfunc import schur_poly, verify_alternating_identity
from .wfd import upper_bound_simple, wfd_report, wfd_value

__version__ = "0.1.0"

__all__ = [
    "CPHypotheses", "build_complex", "build_module", "carter_payne_certificate", "homology_profile",
    "schur_poly", "upper_bound_simple", "verify_alternating_identity", "wfd_report", "wfd_value",
]
