"""Exception types raised across the package.

Every error carries its class name as ``kind`` so the command line can report
the originating failure without string matching.
"""

from __future__ import annotations


class FourfoldError(Exception):
    """Base class for domain errors."""

    @property
    def kind(self) -> str:
        return type(self).__name__


# algebra
class NotSymmetric(FourfoldError):
    pass


# schubert
class BoxViolation(FourfoldError):
    pass


class GradeMismatch(FourfoldError):
    pass


# chow rings
class AmbientMismatch(FourfoldError):
    pass


class NotTopGrade(FourfoldError):
    pass


# bundles
class InvalidAtom(FourfoldError):
    pass


class NotCalabiYau(FourfoldError):
    pass


class RankMismatch(FourfoldError):
    pass


# pairs
class OracleIncomplete(FourfoldError):
    pass


class DimensionMismatch(FourfoldError):
    pass


class NotPositiveDefinite(FourfoldError):
    pass


class NotTwoVariables(FourfoldError):
    pass


# surfaces
class NoetherViolation(FourfoldError):
    pass


# lattice counting
class UnsupportedDimension(FourfoldError):
    pass


class Undecidable(FourfoldError):
    pass


class ShapeMismatch(FourfoldError):
    pass


# document parsing
class SchemaError(FourfoldError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
