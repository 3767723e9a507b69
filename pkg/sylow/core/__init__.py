"""
Shared configuration and errors.

Modules:
- config: JobConfig, Budget and environment overrides
- errors: exception hierarchy and the `check` helper
"""

from sylow.core.config import DEFAULT_BUDGET, DEFAULT_CONFIG, Budget, JobConfig, parse_q
from sylow.core.errors import (
    BudgetExceeded,
    ConfigError,
    FieldError,
    GeometryError,
    MembershipError,
    PreconditionError,
    SylowError,
    VerificationError,
    check,
)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_CONFIG",
    "Budget",
    "BudgetExceeded",
    "ConfigError",
    "FieldError",
    "GeometryError",
    "JobConfig",
    "MembershipError",
    "PreconditionError",
    "SylowError",
    "VerificationError",
    "check",
    "parse_q",
]
