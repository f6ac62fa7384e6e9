"""Domain errors.

Every error raised for a mathematically invalid request derives from
:class:`DomainError`; the CLI turns those into exit code 1 with a JSON
error object. Anything else escaping the library is a bug.
"""

from __future__ import annotations


class DomainError(Exception):
    code = "domain-error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InvalidType(DomainError):
    code = "invalid-type"


class WeylGroupTooLarge(DomainError):
    code = "weyl-group-too-large"


class NotClosed(DomainError):
    code = "not-closed"


class NotDivisible(DomainError):
    code = "not-divisible"


class NotRational(DomainError):
    code = "not-rational"


class NotDominant(DomainError):
    code = "not-dominant"


class NotACharacter(DomainError):
    code = "not-a-character"


class NonIntegral(DomainError):
    code = "non-integral"


class NonIntegralQuotient(DomainError):
    code = "non-integral-quotient"


class InvalidOrder(DomainError):
    code = "invalid-order"


class NoStructuralValue(DomainError):
    """The two torsion points have equal centralizer dimension but are not
    W-conjugate, so the structural formula has nothing to say."""

    code = "no-structural-value"
