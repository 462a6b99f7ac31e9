"""Twisted cohomology and twisted K-theory of odd sphere bundles, spherical T-duality,
and a formal engine for the twisted Chern character."""

__version__ = "0.1.0"

from .fgab import AbelianGroup, IntMatrix, cyclic, direct_sum, is_isomorphic, kernel_cokernel, smith_normal_form
from .graded import BaseManifold, GradedGroup, parity_parts, twisted_cohomology, validate_base
from .gysin import BundleWithFlux, admissible_euler, pushforward_flux, total_space_cohomology
from .ahss import BigradedPage, assemble_k, e2_page, run_to_infinity, twisted_k, untwisted_k
from .tduality import DualityReport, dualize, verify_cohomology_duality, verify_k_duality
from .catalog import CATALOG, get_base

__all__ = [
    "AbelianGroup", "IntMatrix", "cyclic", "direct_sum", "is_isomorphic", "kernel_cokernel",
    "smith_normal_form", "BaseManifold", "GradedGroup", "parity_parts", "twisted_cohomology",
    "validate_base", "BundleWithFlux", "admissible_euler", "pushforward_flux",
    "total_space_cohomology", "BigradedPage", "assemble_k", "e2_page", "run_to_infinity",
    "twisted_k", "untwisted_k", "DualityReport", "dualize", "verify_cohomology_duality",
    "verify_k_duality", "CATALOG", "get_base",
]
