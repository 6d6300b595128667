"""Exact evaluation of fixed-point contributions to Lefschetz numbers of Hecke correspondences.

Root data and Weyl groups, Kostant's theorem with weight truncation
quadrants, Levi characters at torus elements in a cyclotomic field, the
fixed-point dataset format and the assembled Lefschetz number.  The
``tff.oracle`` subpackage holds independent brute-force cross-checks.
"""
from __future__ import annotations

from .characters import (
    AlgebraicPhase,
    ToralElement,
    character_value,
    evaluate,
    exterior_trace,
    nilradical_det_factor,
    weight_multiplicities,
    weyl_dimension,
)
from .cyclotomic import CycValue, Magnitude
from .dataset import (
    Diagnostic,
    DoubleCosetEntry,
    EllipticClassEntry,
    FixedPointDataset,
    Stratum,
    dump_dataset,
    dumps_dataset,
    load_dataset,
    loads_dataset,
)
from .errors import DatasetError, NeedsExtension, ResourceError
from .lefschetz import (
    alternate_lefschetz,
    classify_roots,
    infinite_weight_value,
    lefschetz_number,
    local_contribution,
    maximal_neutral_parabolic,
    proxy_lefschetz,
    stratum_breakdown,
    stratum_contribution,
    validate_dataset,
)
from .nilcoh import MIDDLE_PROFILE, WeightProfile, i_nu, kostant_decomposition, stalk_with_supports
from .rootdata import RootDatum, Weight, build_root_datum, convert_basis, nilradical, weight_from_fundamental
from .weyl import WeylElement, dot_action, generate_weyl_group, kostant_representatives

__version__ = "0.1.0"

__all__ = [
    "AlgebraicPhase",
    "CycValue",
    "DatasetError",
    "Diagnostic",
    "DoubleCosetEntry",
    "EllipticClassEntry",
    "FixedPointDataset",
    "MIDDLE_PROFILE",
    "Magnitude",
    "NeedsExtension",
    "ResourceError",
    "RootDatum",
    "Stratum",
    "ToralElement",
    "Weight",
    "WeightProfile",
    "WeylElement",
    "alternate_lefschetz",
    "build_root_datum",
    "character_value",
    "classify_roots",
    "convert_basis",
    "dot_action",
    "dump_dataset",
    "dumps_dataset",
    "evaluate",
    "exterior_trace",
    "generate_weyl_group",
    "i_nu",
    "infinite_weight_value",
    "kostant_decomposition",
    "kostant_representatives",
    "lefschetz_number",
    "load_dataset",
    "loads_dataset",
    "local_contribution",
    "maximal_neutral_parabolic",
    "nilradical",
    "nilradical_det_factor",
    "proxy_lefschetz",
    "stalk_with_supports",
    "stratum_breakdown",
    "stratum_contribution",
    "validate_dataset",
    "weight_from_fundamental",
    "weight_multiplicities",
    "weyl_dimension",
]
