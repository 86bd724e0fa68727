"""Exact star operations on numerical semigroups and their semigroup rings."""
from __future__ import annotations

from .enumeration import enumerate_stars, star_count
from .errors import SgpError
from .ideal import FracIdeal, StdPoset, normalize, standard_poset
from .semigroup import NumericalSemigroup, make_semigroup
from .star import StarOp, apply, builtin_d, builtin_v, stable_closure, validate

__all__ = [
    "FracIdeal", "NumericalSemigroup", "SgpError", "StarOp", "StdPoset", "apply", "builtin_d",
    "builtin_v", "enumerate_stars", "make_semigroup", "normalize", "stable_closure",
    "standard_poset", "star_count", "validate",
]
__version__ = "0.1.0"
