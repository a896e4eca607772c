"""
pvring - exact prolongation and consistency engine for parameterized
Picard-Vessiot rings of linear difference-differential systems.

Main package exports for easy access to the engine.
"""

__version__ = "0.1.0"

from .config import ComputationBudget, EngineConfig
from .exceptions import (
    BudgetExhaustedError,
    FieldDomainError,
    FieldPresentationError,
    LevelError,
    NotProperIdealError,
    PVError,
    StabilityError,
    UnsupportedQuotientError,
)

# Base field and operators
from .basefield import BaseField, DifferenceDifferentialField, OperatorKind, OperatorSpec, RationalFunction

# Polynomials and Groebner bases
from .polyring import RATIONALS, Poly, PolyRing, TermOrder
from .groebner import (
    GroebnerBasis,
    IdealPresentation,
    buchberger,
    eliminate,
    groebner,
    is_trivial,
    lift,
    member,
    radical_member,
    saturate,
)

# Linear systems and jet rings
from .linsys import LinearSystem, Matrix, verify_fundamental_matrix
from .jetring import FilteredElement, JetIdeal, JetRing, d_apply, delta_apply, jet_ring, sigma_apply

# Prolongation and the ideal chain
from .prolong import (
    ChainReport,
    ConsistencyCertificate,
    ConstantsReport,
    JetEvaluation,
    build_chain,
    certify_extension,
    check_closure,
    check_consistency,
    counterexample_two_derivations,
    evaluation_kernel,
    find_constants,
    prolongation_ideal,
    sigma_delta_close,
)

__all__ = [
    "__version__",
    # Configuration and errors
    "EngineConfig",
    "ComputationBudget",
    "PVError",
    "FieldDomainError",
    "FieldPresentationError",
    "BudgetExhaustedError",
    "LevelError",
    "NotProperIdealError",
    "StabilityError",
    "UnsupportedQuotientError",
    # Base field
    "BaseField",
    "RationalFunction",
    "OperatorKind",
    "OperatorSpec",
    "DifferenceDifferentialField",
    # Polynomials
    "RATIONALS",
    "TermOrder",
    "PolyRing",
    "Poly",
    "IdealPresentation",
    "GroebnerBasis",
    "buchberger",
    "groebner",
    "member",
    "is_trivial",
    "eliminate",
    "saturate",
    "radical_member",
    "lift",
    # Systems and jets
    "Matrix",
    "LinearSystem",
    "verify_fundamental_matrix",
    "JetRing",
    "jet_ring",
    "FilteredElement",
    "JetIdeal",
    "d_apply",
    "sigma_apply",
    "delta_apply",
    # Prolongation
    "JetEvaluation",
    "evaluation_kernel",
    "prolongation_ideal",
    "check_closure",
    "check_consistency",
    "certify_extension",
    "ConsistencyCertificate",
    "sigma_delta_close",
    "build_chain",
    "ChainReport",
    "find_constants",
    "ConstantsReport",
    "counterexample_two_derivations",
]
