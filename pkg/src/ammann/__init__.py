"""Exact Ammann chair substitution tilings, (n, a, b)-fractals and their
similarity dimensions."""

from .dimension import (
    DimensionPoly, DimensionResult, build_poly, fib, moran_dimension, similarity_dimension,
    solve_root,
)
from .errors import AmmannError, EmptyFractal, InvalidRange, TooManyTiles
from .geometry import Label, Similarity, elementary_children, verify_partition
from .golden import GoldenNumber, half_power_of_phi
from .spectrum import approx_dimension, lift, lift_drift_report, sweep
from .substitution import counts, expand, iterate, make_mask

__version__ = "0.1.0"
