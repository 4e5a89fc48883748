"""Exception hierarchy shared by every `cliquehole` module.

Every error carries an optional `diagnostics` dictionary; the runner dumps it as JSON when a
command ends in an internal-invariant or unresolved state.
"""

from __future__ import annotations

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"


class HoleError(Exception):
    """Root of all errors raised by the `cliquehole` package.

    Attributes:
        diagnostics (dict): arbitrary JSON-friendly key-value pairs describing the failure.

    """
    def __init__(self, message: str, diagnostics: dict | None = None) -> None:
        super().__init__(message)
        self.diagnostics: dict = dict(diagnostics) if diagnostics else {}


class InvalidInstance(HoleError, ValueError):
    """The input instance (hole, ring, profile, document) is not well-formed."""
    pass


class InvalidHole(InvalidInstance):
    """A clique hole failed structural validation; `report` lists every violation."""
    def __init__(self, report, diagnostics: dict | None = None) -> None:
        super().__init__("Invalid clique hole:\n" + str(report), diagnostics)
        self.report = report


class InvalidRing(InvalidInstance):
    pass


class InvalidMove(InvalidInstance):
    pass


class ParseError(InvalidInstance):
    """A document could not be parsed; `line` and `column` are 1-based when known."""
    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where, {"line": line, "column": column})
        self.line: int | None = line
        self.column: int | None = column


class DomainError(HoleError, ValueError):
    """An argument lies outside the domain an operation is defined on."""
    pass


class NotOdd(DomainError):
    pass


class NotEven(DomainError):
    pass


class NotExtreme(DomainError):
    pass


class InfeasibleSpec(DomainError):
    pass


class InfeasibleTarget(DomainError):
    pass


class ScriptedPickError(DomainError):
    pass


class CoverageMismatch(HoleError):
    pass


class NotColorable(HoleError):
    """The instance exceeds the colorability bound; `verdict` holds the exact numbers."""
    def __init__(self, verdict, diagnostics: dict | None = None) -> None:
        super().__init__("not colorable: {} > {}".format(verdict.intersection_sum, verdict.bound), diagnostics)
        self.verdict = verdict


class PaddingStuck(HoleError):
    """Greedy padding ran out of incrementable sectors; `partial` is the profile it reached."""
    def __init__(self, message: str, partial, diagnostics: dict | None = None) -> None:
        super().__init__(message, diagnostics)
        self.partial = partial


class TooLarge(HoleError):
    pass


class NotMaximumIndependent(HoleError, ValueError):
    pass


class InternalInvariant(HoleError):
    """An invariant the construction relies on did not hold; this is a reportable finding."""
    pass


class NegativeCounts(InternalInvariant):
    """Balancing drove a selection count below zero; `counts` holds the vector at that point."""
    def __init__(self, message: str, counts, diagnostics: dict | None = None) -> None:
        super().__init__(message, diagnostics)
        self.counts = counts


class ClassificationAmbiguous(InternalInvariant):
    pass


class Unresolved(HoleError):
    pass
