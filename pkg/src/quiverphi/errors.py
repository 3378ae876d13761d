from __future__ import annotations
from typing import Iterable, Optional


class QuiverPhiError(Exception):
    """Base class for every error raised by quiverphi."""

    exit_code = 2


class DimensionMismatch(QuiverPhiError):
    pass


class QuiverError(QuiverPhiError):
    pass


class DanglingEndpoint(QuiverError):
    pass


class DuplicateLabel(QuiverError):
    pass


class InvalidPath(QuiverPhiError):
    pass


class UnknownVertex(QuiverPhiError):
    pass


class RelationError(QuiverPhiError):
    pass


class NotAdmissible(QuiverPhiError):
    def __init__(self, l_max: int):
        super().__init__(f"ideal does not contain J^L for any L <= {l_max}")
        self.l_max = l_max


class ShapeMismatch(QuiverPhiError):
    pass


class NotBound(QuiverPhiError):
    def __init__(self, relation: str):
        super().__init__(f"representation is not bound by relation {relation}")
        self.relation = relation


class AlgebraMismatch(QuiverPhiError):
    pass


class NoGluing(QuiverPhiError):
    pass


class CertificationFailed(QuiverPhiError):
    exit_code = 1


class NotIndecomposable(QuiverPhiError):
    pass


class RegistryError(QuiverPhiError):
    pass


class FingerprintMismatch(RegistryError):
    pass


class MalformedRegistry(RegistryError):
    pass


class UnknownClass(QuiverPhiError):
    pass


class HorizonExceeded(QuiverPhiError):
    exit_code = 3


class GlueError(QuiverPhiError):
    pass


class DegenerateParameters(QuiverPhiError):
    pass


class ConfigError(QuiverPhiError):
    pass


class DslError(QuiverPhiError):
    """A diagnostic from the .qa reader, always positioned."""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 expected: Optional[Iterable[str]] = None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = sorted(set(expected or ()))
        where = f"{line}:{column}: " if line else ""
        tail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{where}{message}{tail}")
