"""Exception types raised by the algebra engine.

Every error carries a machine-readable ``code`` and a ``details`` mapping so
that the CLI can serialize failures as JSON.
"""


class AlgebraError(Exception):
    code = "AlgebraError"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {"error": self.code, "message": self.message, "details": self.details}


class ParseError(AlgebraError):
    code = "ParseError"


class DimensionMismatch(AlgebraError):
    code = "DimensionMismatch"


class IndexOutOfRange(AlgebraError):
    code = "IndexOutOfRange"


class NotIdentity(AlgebraError):
    code = "NotIdentity"


class NotAssociative(AlgebraError):
    code = "NotAssociative"


class NotPointed(AlgebraError):
    code = "NotPointed"


class NotAHomomorphism(AlgebraError):
    code = "NotAHomomorphism"


class DomainMismatch(AlgebraError):
    code = "DomainMismatch"


class CodomainMismatch(AlgebraError):
    code = "CodomainMismatch"


class CarrierMismatch(AlgebraError):
    code = "CarrierMismatch"


class MiddleMismatch(AlgebraError):
    code = "MiddleMismatch"


class SizeTooLarge(AlgebraError):
    code = "SizeTooLarge"


class NotAGroup(AlgebraError):
    code = "NotAGroup"


class SectionNotSplitting(AlgebraError):
    code = "SectionNotSplitting"


class KernelMismatch(AlgebraError):
    code = "KernelMismatch"


class PreimageNotFound(AlgebraError):
    code = "PreimageNotFound"


class InvalidSemibiproduct(AlgebraError):
    code = "InvalidSemibiproduct"


class InvalidActionSystem(AlgebraError):
    code = "InvalidActionSystem"


class UnknownName(AlgebraError):
    code = "UnknownName"
