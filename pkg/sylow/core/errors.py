"""
Exception hierarchy shared by every module.

Each error type doubles as the matching builtin (ValueError, AssertionError)
so callers that only know the builtin still catch it.
"""


class SylowError(Exception):
    """Base class for all errors raised by the package."""


class ConfigError(SylowError, ValueError):
    """Invalid job configuration or command-line flags."""


class FieldError(SylowError, ValueError):
    """Unsupported field parameters or an undefined field operation."""


class GeometryError(SylowError, ValueError):
    """Out-of-range index, unknown region or a subset outside pUP."""


class MembershipError(SylowError, ValueError):
    """A matrix is not in the group an operation requires."""


class PreconditionError(SylowError, ValueError):
    """An operation was called outside its domain."""


class BudgetExceeded(SylowError):
    """A size guard tripped before an enumeration started."""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: size {requested} exceeds budget {limit}")


class VerificationError(SylowError, AssertionError):
    """An identity guaranteed by the theory failed to hold.

    `anchor` names the theorem the identity comes from; suites fill it in
    when the check itself does not.
    """

    def __init__(self, claim: str, detail: str = "", anchor: str = ""):
        self.claim = claim
        self.detail = detail
        self.anchor = anchor
        super().__init__(self._message())

    def _message(self) -> str:
        head = f"[{self.claim}]"
        if self.anchor:
            head += f" ({self.anchor})"
        return f"{head} {self.detail}" if self.detail else head

    def with_anchor(self, anchor: str) -> "VerificationError":
        """Set the anchor unless one is already present; returns self."""
        if not self.anchor:
            self.anchor = anchor
            self.args = (self._message(),)
        return self


def check(condition: bool, claim: str, detail: str = "", anchor: str = "") -> None:
    """Raise VerificationError citing `claim` unless `condition` holds."""
    if not condition:
        raise VerificationError(claim, detail, anchor)
