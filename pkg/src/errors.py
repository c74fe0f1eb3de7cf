"""
Exception hierarchy for the workbench
Every error the library raises derives from WorkbenchError
"""

from typing import Optional


class WorkbenchError(Exception):
    pass


# ----- signatures -----
class SignatureError(WorkbenchError):
    pass


class EmptySignature(SignatureError):
    pass


class DuplicateSymbol(SignatureError):
    pass


class InvalidSymbol(SignatureError):
    pass


class NoConstantWarning(UserWarning):
    """Signature has no arity-0 symbol, so it has no ground terms"""


# ----- terms -----
class TermError(WorkbenchError):
    pass


class UnknownSymbol(TermError):
    pass


class ArityMismatch(TermError):
    pass


class WrongSignature(TermError):
    pass


class ParseError(WorkbenchError):
    """Syntax error in term, ordinal or edge-file text"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


# ----- ordinals and extensions -----
class NonCanonicalInput(WorkbenchError):
    pass


class LengthMismatch(WorkbenchError):
    pass


# ----- embedding -----
class EmbeddingError(WorkbenchError):
    pass


class NoArgOrder(EmbeddingError):
    pass


class VectorTooLong(EmbeddingError):
    pass


# ----- checkers / cli -----
class MissingArgOrder(WorkbenchError):
    pass


class ConfigError(WorkbenchError):
    pass


class InvalidPrecedence(ConfigError):
    pass
