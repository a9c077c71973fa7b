"""Exact domination numbers, contraction numbers and the gadget
constructions around the k-Edge-Contraction(gamma) problem."""

from .contraction import ContractionNumber, contraction_number, ct_bruteforce, decide_kec
from .domination import DominationCertificate, GammaResult, gamma, gamma_bounded
from .graph import Edge, Graph, contract_edge, parse_edge_list

__version__ = "0.1.0"

__all__ = [
    "ContractionNumber",
    "DominationCertificate",
    "Edge",
    "GammaResult",
    "Graph",
    "contract_edge",
    "contraction_number",
    "ct_bruteforce",
    "decide_kec",
    "gamma",
    "gamma_bounded",
    "parse_edge_list",
]
