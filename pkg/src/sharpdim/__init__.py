"""Dimension bookkeeping for framed instanton homology of knot surgeries."""

from sharpdim.dim_engine import (BundleClass, DimResult, FieldInvariants, FieldLabel, Shape,
                                 dim_sequence, dim_sharp, infer_invariants, lspace_slopes, mirror)
from sharpdim.slopes import INF, Slope, Triad, farey_split, farey_tree, is_triad, make_slope

__all__ = [
    "BundleClass", "DimResult", "FieldInvariants", "FieldLabel", "Shape", "dim_sequence",
    "dim_sharp", "infer_invariants", "lspace_slopes", "mirror",
    "INF", "Slope", "Triad", "farey_split", "farey_tree", "is_triad", "make_slope",
]
