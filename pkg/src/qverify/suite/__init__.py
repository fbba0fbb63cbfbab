"""Registered statements and the machinery to verify them."""

from .blocks import build_rhs_common
from .registry import (Claim, Domain, Statement, StatementKind, get_statement,
                       list_statements)
from .runner import (DomainViolation, UnknownStatement, VerificationResult,
                     plan_tasks, verify_range, verify_statement)

__all__ = [
    "Claim", "Domain", "DomainViolation", "Statement", "StatementKind",
    "UnknownStatement", "VerificationResult", "build_rhs_common",
    "get_statement", "list_statements", "plan_tasks", "verify_range",
    "verify_statement",
]
