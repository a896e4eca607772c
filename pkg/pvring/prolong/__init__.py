"""Prolongation, closure, the ΣΔ-ideal chain and the constants search."""

from .chain import CERTIFIED, NOT_ATTEMPTED, REFUTED, ChainReport, LevelReport, build_chain, maximality_status
from .closure import is_sigma_delta_ideal, operator_images, sigma_delta_close, stability_witness
from .consistency import (
    ConsistencyCertificate,
    Witness,
    WitnessStep,
    certify_extension,
    check_closure,
    check_consistency,
    prolongation_ideal,
    unit_witness,
)
from .constants import ConstantsReport, find_constants
from .counterexample import (
    ClosureChecks,
    counterexample_closure_checks,
    counterexample_two_derivations,
    single_derivation_slice,
    slice_point,
)
from .evaluation import JetEvaluation, evaluation_kernel

__all__ = [
    "JetEvaluation",
    "evaluation_kernel",
    "ConsistencyCertificate",
    "Witness",
    "WitnessStep",
    "prolongation_ideal",
    "check_closure",
    "check_consistency",
    "certify_extension",
    "unit_witness",
    "operator_images",
    "stability_witness",
    "is_sigma_delta_ideal",
    "sigma_delta_close",
    "LevelReport",
    "ChainReport",
    "build_chain",
    "maximality_status",
    "CERTIFIED",
    "NOT_ATTEMPTED",
    "REFUTED",
    "ConstantsReport",
    "find_constants",
    "ClosureChecks",
    "counterexample_two_derivations",
    "single_derivation_slice",
    "slice_point",
    "counterexample_closure_checks",
]
