"""Cross-intersecting set family laboratory.

This package constructs the extremal ℓ-cross-intersecting pairs of set
families, computes the maximum product P_ℓ(n) exactly at small n, and
exposes the linear-algebra and Sperner-type counting machinery behind the
upper bound as checkable operations.

:var __version__: Current package version
:type __version__: str
"""

__version__ = "0.1.0"
