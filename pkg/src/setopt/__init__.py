"""Exact solver for set optimization problems with polyhedral convex graph."""

from .core import (
    ScalarCertificate,
    SetOptReport,
    SolutionVerdict,
    Status,
    check_solution,
    is_minimizer,
    minimize_point,
    setopt_solve,
)
from .errors import (
    ContractError,
    EmptySetError,
    EmptyValueError,
    InputError,
    LPAnomalyError,
    SetOptError,
    ValidationError,
)
from .polyhedra import ConeSpec, HRep, VRep
from .relaxation import PreSolution, UpperImage, upper_image
from .setcalc import ProblemInstance, SetValue, infimum, preceq, strictly_less, value_of

__all__ = [
    "ConeSpec", "ContractError", "EmptySetError", "EmptyValueError", "HRep", "InputError",
    "LPAnomalyError", "PreSolution", "ProblemInstance", "ScalarCertificate", "SetOptError",
    "SetOptReport", "SetValue", "SolutionVerdict", "Status", "UpperImage", "VRep",
    "ValidationError", "check_solution", "infimum", "is_minimizer", "minimize_point",
    "preceq", "setopt_solve", "strictly_less", "upper_image", "value_of",
]
