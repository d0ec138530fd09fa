"""Symmetry toolkit for finite digraphs: homogeneity checks, reachability and catalogs."""

from .core import Digraph, PartitionedDigraph, VertexPartition
from .errors import DigraphError
from .symmetry import PartialMap, canonical_form, homogeneity_check, is_isomorphic

__all__ = [
    "Digraph",
    "DigraphError",
    "PartialMap",
    "PartitionedDigraph",
    "VertexPartition",
    "canonical_form",
    "homogeneity_check",
    "is_isomorphic",
]
__version__ = "0.1.0"
