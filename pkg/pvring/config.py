"""Configuration for the pvring engine."""

from dataclasses import dataclass


# Defaults (also printed by the command-line --help)
DEFAULT_MAX_REDUCTIONS = 100_000  # S-pair reductions per Groebner computation
DEFAULT_MAX_DEGREE = 40  # Total degree cap for new basis elements
DEFAULT_MAX_LEVEL = 6  # D_max, highest jet order a ring may carry
DEFAULT_DEGREE_BOUND = 3  # Constants search: degree of unknown coefficients
DEFAULT_CLOSURE_ROUNDS = 64  # Sigma/delta closure iterations before giving up
DEFAULT_SATURATION_POWER = 10  # Largest det power tried when lifting witnesses


@dataclass
class ComputationBudget:
    """Mutable counter shared by the Groebner calls of one computation."""

    max_reductions: int = DEFAULT_MAX_REDUCTIONS
    max_degree: int = DEFAULT_MAX_DEGREE
    reductions: int = 0  # S-pair reductions performed so far

    def charge(self) -> bool:
        """Count one S-pair reduction.

        Returns:
            False once the reduction budget is exceeded
        """
        self.reductions += 1
        return self.reductions <= self.max_reductions


@dataclass
class EngineConfig:
    """Configuration parameters for engine computations."""

    max_reductions: int = DEFAULT_MAX_REDUCTIONS
    max_degree: int = DEFAULT_MAX_DEGREE
    max_level: int = DEFAULT_MAX_LEVEL
    constants_degree_bound: int = DEFAULT_DEGREE_BOUND
    max_closure_rounds: int = DEFAULT_CLOSURE_ROUNDS
    saturation_power_bound: int = DEFAULT_SATURATION_POWER
    trace: bool = False  # Emit S-pair reduction steps

    def __post_init__(self):
        """Validate configuration parameters."""
        if self.max_reductions < 1:
            raise ValueError("max_reductions must be at least 1")

        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")

        if self.max_level < 0 or self.max_level > 12:
            raise ValueError("max_level must be between 0 and 12")

        if self.constants_degree_bound < 0:
            raise ValueError("constants_degree_bound must be non-negative")

        if self.max_closure_rounds < 1:
            raise ValueError("max_closure_rounds must be at least 1")

        if self.saturation_power_bound < 0:
            raise ValueError("saturation_power_bound must be non-negative")

    def budget(self) -> ComputationBudget:
        """Create a fresh budget counter for one computation.

        Returns:
            ComputationBudget with this configuration's caps
        """
        return ComputationBudget(
            max_reductions=self.max_reductions,
            max_degree=self.max_degree,
        )
