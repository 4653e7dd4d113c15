"""Demazure crystals for symmetric Kac-Moody data, Young pyramids for affine sl2,
and quiver-variety checks on explicit framed representations."""

from .cartan import CartanMatrix, DynkinGraph, Weight, cartan_from_graph, pairing, simple_reflection
from .crystal import character, demazure_subset, export_graph, generate
from .quiver import DoubledQuiver, QuiverRep
from .sl2 import Pyramid, Wall, extremal_pyramid, ground_state

__all__ = [
    "CartanMatrix",
    "DoubledQuiver",
    "DynkinGraph",
    "Pyramid",
    "QuiverRep",
    "Wall",
    "Weight",
    "cartan_from_graph",
    "character",
    "demazure_subset",
    "export_graph",
    "extremal_pyramid",
    "generate",
    "ground_state",
    "pairing",
    "simple_reflection",
]
