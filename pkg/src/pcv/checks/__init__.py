"""Congruence check registry and runners."""

from .context import PrimeContext
from .registry import (
    SMALL_P_CAP,
    CheckDef,
    CheckReport,
    CongruenceInstance,
    InapplicablePrime,
    UnknownCheck,
    applicable_primes,
    default_sweep_ids,
    get_check,
    list_checks,
    run_check,
    run_grid,
    sweep_reports,
    sweepable_ids,
)

__all__ = [
    "SMALL_P_CAP",
    "CheckDef",
    "CheckReport",
    "CongruenceInstance",
    "InapplicablePrime",
    "PrimeContext",
    "UnknownCheck",
    "applicable_primes",
    "default_sweep_ids",
    "get_check",
    "list_checks",
    "run_check",
    "run_grid",
    "sweep_reports",
    "sweepable_ids",
]
