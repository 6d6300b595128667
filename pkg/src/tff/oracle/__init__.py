"""Independent brute-force checks: Lie algebra cohomology and class counting."""

from .ce import GradedCohomologyReport, ce_cohomology, compare_with_kostant, run_ce_check
from .forms import count_elliptic_classes, count_matrix_classes, reduced_forms
from .gl2 import build_gl2_dataset, gl2_class_labels
from .lie import NilpotentLieModel, RepresentationModule, coefficient_module, nilpotent_model

__all__ = [
    "GradedCohomologyReport",
    "NilpotentLieModel",
    "RepresentationModule",
    "build_gl2_dataset",
    "ce_cohomology",
    "coefficient_module",
    "compare_with_kostant",
    "count_elliptic_classes",
    "count_matrix_classes",
    "gl2_class_labels",
    "nilpotent_model",
    "reduced_forms",
    "run_ce_check",
]
