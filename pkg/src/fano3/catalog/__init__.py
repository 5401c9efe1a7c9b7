"""Claim registry, Fano invariant tables and arithmetic ledgers."""

from .cases import CASES, DiscriminantModel, FanoCase, case, linear_system_dim, prym_ledger
from .claims import REGISTRY, get_claim
from .model import Claim, ClaimResult, LabeledTerm, LedgerEntry, UnknownClaimError, UnstableResult
from .runner import export_table, run_all, run_claim

__all__ = [
    "CASES", "Claim", "ClaimResult", "DiscriminantModel", "FanoCase", "LabeledTerm",
    "LedgerEntry", "REGISTRY", "UnknownClaimError", "UnstableResult", "case", "export_table",
    "get_claim", "linear_system_dim", "prym_ledger", "run_all", "run_claim",
]
