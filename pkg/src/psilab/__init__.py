"""Local maximum stable sets of graphs and their place among greedoids."""

from psilab.graph import Graph, bits, mask_of, parse_graph6, to_graph6
from psilab.setsystem import SetSystem, classify
from psilab.stability import enumerate_psi, max_stable

__all__ = [
    "Graph",
    "SetSystem",
    "bits",
    "classify",
    "enumerate_psi",
    "mask_of",
    "max_stable",
    "parse_graph6",
    "to_graph6",
]
