"""Package metadata from pyproject.toml"""

from importlib.metadata import PackageNotFoundError, metadata

try:
    _metadata = metadata("polylog-congruences")
    __version__ = _metadata["Version"]
    __description__ = _metadata["Summary"]
except PackageNotFoundError:
    __version__ = "0.0.0+unknown"
    __description__ = "Finite polylogarithm congruence verifier"
