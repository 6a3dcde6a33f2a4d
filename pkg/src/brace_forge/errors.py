"""Exception hierarchy.

Every error that names a counterexample carries it in ``witness`` so the CLI
can print it without parsing the message.
"""

from __future__ import annotations


class BraceForgeError(Exception):
    witness: tuple = ()

    def __init__(self, message: str = "", witness: tuple = ()):
        super().__init__(message or self.__class__.__name__)
        self.witness = tuple(witness)


class ValidationError(BraceForgeError):
    """Input data does not describe the claimed structure."""


class FormatError(ValidationError):
    pass


class NotLatin(ValidationError):
    pass


class NoIdentityAtZero(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class NotASubgroup(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class NotAHom(ValidationError):
    pass


class NotAutomorphism(ValidationError):
    pass


class NotActionHom(ValidationError):
    pass


class BraceAxiomViolation(ValidationError):
    pass


class NotAnIdeal(ValidationError):
    pass


class NotBraceHom(ValidationError):
    pass


class NotAddHom(ValidationError):
    pass


class NotCircHom(ValidationError):
    pass


class RelationViolation(ValidationError):
    pass


class BadParameters(ValidationError):
    pass


class SizeBound(BraceForgeError):
    """A configured size cap would be exceeded."""


# alternative name for the same condition
SizeCap = SizeBound


class NoSuitablePrime(BraceForgeError):
    pass


class SolverError(BraceForgeError):
    """The degree solver produced output that fails its own invariants."""


class PropertyViolation(BraceForgeError):
    """A structural identity that must hold was found to fail."""

    def __init__(self, check: str, witness=None):
        super().__init__(f"{check} fails; witness={witness!r}")
        self.check = check
        self.witness_value = witness
