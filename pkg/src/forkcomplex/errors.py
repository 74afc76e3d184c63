"""Exception hierarchy.

Every domain rejection is a :class:`ForkError`.  The ``code`` class attribute
is the stable name used in diagnostics and JSON output; ``fork`` and ``node``
identify the offending objects when known, and ``position`` is filled in by the
parser so errors can be reported as ``line:col``.
"""

from __future__ import annotations


class ForkError(Exception):
    code = "ForkError"

    def __init__(self, message: str, *, fork: str | None = None,
                 node: str | None = None, witness=None):
        super().__init__(message)
        self.message = message
        self.fork = fork
        self.node = node
        self.witness = witness
        self.position: tuple[int, int] | None = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


# compression bodies and surfaces
class GenusOverflow(ForkError):
    code = "GenusOverflow"


class NoEssentialCurve(ForkError):
    code = "NoEssentialCurve"


class BadSplit(ForkError):
    code = "BadSplit"


class MissingComponent(ForkError):
    code = "MissingComponent"


# complexes
class Disconnected(ForkError):
    code = "Disconnected"


class DoubleGluing(ForkError):
    code = "DoubleGluing"


class KindMismatch(ForkError):
    code = "KindMismatch"


class DuplicateId(ForkError):
    code = "DuplicateId"


class BodyInvalid(ForkError):
    code = "BodyInvalid"


class UnknownNode(ForkError):
    code = "UnknownNode"


class NotExact(ForkError):
    code = "NotExact"


# moves
class GenusUnderflow(ForkError):
    code = "GenusUnderflow"


class CaseEquationViolated(ForkError):
    code = "CaseEquationViolated"


class NotInterior(ForkError):
    code = "NotInterior"


class TrivialBody(ForkError):
    code = "TrivialBody"


class ChiMismatch(ForkError):
    code = "ChiMismatch"


class NotAdjacent(ForkError):
    code = "NotAdjacent"


class PatternUnrecognized(ForkError):
    code = "PatternUnrecognized"


class NotASphere(ForkError):
    code = "NotASphere"


class NotABall(ForkError):
    code = "NotABall"


class Disconnects(ForkError):
    code = "Disconnects"


class NotTrivial(ForkError):
    code = "NotTrivial"


class WrongShape(ForkError):
    code = "WrongShape"


class AuditFailed(ForkError):
    code = "AuditFailed"


# catalog / search
class BadParameter(ForkError):
    code = "BadParameter"


class BudgetExceeded(ForkError):
    code = "BudgetExceeded"

    def __init__(self, message: str, *, best=None):
        super().__init__(message)
        self.best = best


# text formats
class DslSyntaxError(ForkError):
    """Malformed document or move spec; ``expected`` lists acceptable tokens."""

    code = "SyntaxError"

    def __init__(self, message: str, *, line: int = 0, col: int = 0,
                 expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.position = (line, col)
        self.expected = expected


class GenusConflict(ForkError):
    code = "GenusConflict"

    def __init__(self, node: str, first: int, second: int):
        super().__init__(f"node {node!r} annotated with genus {first} and {second}",
                         node=node)
        self.values = (first, second)
