"""Freeness of rings of integers over associated orders in degree-p extensions."""

__version__ = "0.1.0"

from hgfree.errors import InternalInvariant, InvalidParameters
from hgfree.params import ExtensionParams, Regime, derive, validate
from hgfree.verdict import Clause, FreenessVerdict, analyze, decide, sweep

__all__ = [
    "Clause",
    "ExtensionParams",
    "FreenessVerdict",
    "InternalInvariant",
    "InvalidParameters",
    "Regime",
    "analyze",
    "decide",
    "derive",
    "sweep",
    "validate",
]
