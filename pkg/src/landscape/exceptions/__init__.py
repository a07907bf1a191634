"""Custom exceptions for the landscape package."""

from typing import Any, Optional


class LandscapeError(Exception):
    """Base exception for the landscape package."""

    def __init__(self, message: str, cause: Optional[Exception] = None):
        super().__init__(message)
        self.message = message
        self.cause = cause


class FormulaError(LandscapeError):
    """Raised when a literal or incompatibility does not fit the formula."""

    def __init__(self, message: str, locus: Optional[int] = None):
        super().__init__(message)
        self.locus = locus


class SameLocusError(FormulaError):
    """Raised for an incompatibility whose two alleles sit on one locus."""


class DimensionError(LandscapeError):
    """Raised when a genotype and a formula disagree on the number of loci."""

    def __init__(self, message: str, expected: Optional[int] = None, actual: Optional[int] = None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class InviableGenotypeError(LandscapeError):
    """Raised when an operation needs a viable genotype and gets an inviable one."""

    def __init__(self, message: str, genotype: Any = None, incompatibility: Any = None):
        super().__init__(message)
        self.genotype = genotype
        self.incompatibility = incompatibility


class UnsatisfiableFormulaError(LandscapeError):
    """Raised when an operation is undefined for formulas without viable genotypes."""


class OracleCapacityError(LandscapeError):
    """Raised when brute-force enumeration would exceed the configured cap."""

    def __init__(self, message: str, n: Optional[int] = None, cap: Optional[int] = None):
        super().__init__(message)
        self.n = n
        self.cap = cap


class ParseError(LandscapeError):
    """Raised when a formula file cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        super().__init__(message)
        self.line_number = line_number


class PathConstructionError(LandscapeError):
    """Raised when the mutational path construction cannot make progress."""


class ConfigurationError(LandscapeError):
    """Raised when there's a configuration error."""

    def __init__(self, message: str, config_key: Optional[str] = None):
        super().__init__(message)
        self.config_key = config_key


class ParameterError(LandscapeError):
    """Raised when numeric parameters fall outside their valid range."""

    def __init__(self, message: str, parameter: Optional[str] = None):
        super().__init__(message)
        self.parameter = parameter
