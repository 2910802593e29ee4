"""Right-angled polytopes, their coloured manifolds and kernel finiteness checks."""

from __future__ import annotations

__version__ = "0.1.0"
DATA_FORMAT_VERSION = 1

__all__ = ["DATA_FORMAT_VERSION", "__version__"]
