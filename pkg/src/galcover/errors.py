"""Exception hierarchy shared by all modules."""


class GalcoverError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(GalcoverError):
    """A caller-supplied parameter is out of range or malformed."""


class WrongFlavorError(InvalidParameterError):
    """An operation restricted to one group flavor got another."""


class NotASubgroupError(InvalidParameterError):
    """The given element set is not a subgroup of the expected parent."""


class NotNormalError(InvalidParameterError):
    """A quotient was requested by a subgroup that is not normal."""


class SizeCapError(InvalidParameterError):
    """A configured size cap (group order, branch count) was exceeded."""


class DatumError(GalcoverError):
    """A candidate monodromy datum violated one of its invariants."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class SchurIndexUnsupportedError(GalcoverError):
    """Rational-irreducible bookkeeping hit a group where a nontrivial
    Schur index over a CM field cannot be ruled out."""


class InternalInconsistencyError(GalcoverError):
    """A checked internal invariant failed.  Always a bug, never user error."""


class ConventionError(InternalInconsistencyError):
    """A holomorphic multiplicity came out non-integral, indicating a
    local-monodromy sign-convention bug."""
