"""Face numbers and top homology of flag and balanced simplicial complexes."""

from .canon import CanonRep, canonical_rep, shadow_down, shadow_up
from .colored import ColoredComplex, build_sigma, revlex_complex_fvec, revlex_complex_top
from .complex import Complex
from .graph import Graph, clique_complex, turan_complex, turan_graph
from .homology import betti, betti_vector
from .turan import turan_coeff

__version__ = "0.1.0"

__all__ = [
    "CanonRep", "ColoredComplex", "Complex", "Graph", "betti", "betti_vector", "build_sigma",
    "canonical_rep", "clique_complex", "revlex_complex_fvec", "revlex_complex_top",
    "shadow_down", "shadow_up", "turan_coeff", "turan_complex", "turan_graph",
]
