"""girthlab: finite-geometry graph constructions, exact walk and spectral
checks, and exhaustive small extremal-number searches for graphs without
short even cycles."""

__version__ = "0.1.0"

from .formats import graph6_decode, graph6_encode  # noqa: E402,F401
from .graph import BipartiteGraph, Graph  # noqa: E402,F401
from .search import FamilySpec, SearchResult  # noqa: E402,F401
