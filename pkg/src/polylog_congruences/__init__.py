"""Finite polylogarithms, truncated p-adic arithmetic and congruence verification."""

from polylog_congruences.__version__ import __version__

__all__ = ["__version__"]
