"""pcv: exhaustive verification of prime-power congruences for central
binomial coefficient sums, with exact-rational and p-adic oracles."""

from .checks import list_checks, run_check, run_grid, sweep_reports
from .modring import Modulus, Residue, ValuedResidue, legendre

__version__ = "0.1.0"

__all__ = [
    "Modulus",
    "Residue",
    "ValuedResidue",
    "legendre",
    "list_checks",
    "run_check",
    "run_grid",
    "sweep_reports",
    "__version__",
]
