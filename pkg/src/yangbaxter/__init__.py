"""Finite set-theoretic solutions of the Yang-Baxter equation and their monoids."""

from .actions import (
    BijectivityReport,
    bijectivity_report,
    lambda_M,
    lambda_prime,
    pi,
    pi_inverse,
    pi_prime,
    r_M,
    rho_M,
    rho_prime,
)
from .atlas import (
    CampaignReport,
    SolutionClass,
    campaign_cocycle,
    campaign_free_abelian,
    campaign_main_irr,
    campaign_rump,
    canonical_label,
    enumerate_gamma_bijective,
    enumerate_nondegenerate,
)
from .cancellative import EtaWindow, QuotientMonoid, eta_window, r_bar, r_prime_bar
from .fixtures import builtin_examples, example, example_names
from .solution import (
    FiniteSolution,
    PropertyReport,
    SolutionError,
    check_braid_direct,
    from_map,
    is_solution,
    properties,
    validate,
)
from .transformation import Transformation
from .words import GradedQuotient, Kind, quotient, relations

__version__ = "0.1.0"

__all__ = [
    "BijectivityReport", "CampaignReport", "EtaWindow", "FiniteSolution", "GradedQuotient", "Kind",
    "PropertyReport", "QuotientMonoid", "SolutionClass", "SolutionError", "Transformation",
    "bijectivity_report", "builtin_examples", "campaign_cocycle", "campaign_free_abelian",
    "campaign_main_irr", "campaign_rump", "canonical_label", "check_braid_direct",
    "enumerate_gamma_bijective", "enumerate_nondegenerate", "eta_window", "example", "example_names",
    "from_map", "is_solution", "lambda_M", "lambda_prime", "pi", "pi_inverse", "pi_prime",
    "properties", "quotient", "r_M", "r_bar", "r_prime_bar", "relations", "rho_M", "rho_prime",
    "validate",
]
