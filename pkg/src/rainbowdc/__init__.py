"""Rainbow disconnection colorings: exact rd(G), constructive bounds, and checked theorems."""

from .coloring import EdgeColoring, chromatic_index_exact, shannon_proper_coloring, vizing_proper_coloring
from .config import Budgets
from .connectivity import lambda_plus, local_edge_connectivity, min_edge_cut, shrinking_decomposition
from .families import generate
from .graph import Graph, GraphError
from .rainbow import (bound_report, exists_rainbow_cut, rd_exact, rd_upper_min_bound,
                      rd_upper_three_halves, rd_upper_vertex_removal, verify_rd_coloring)
from .rvd import rvd_exact

__all__ = [
    "Budgets", "EdgeColoring", "Graph", "GraphError", "bound_report", "chromatic_index_exact",
    "exists_rainbow_cut", "generate", "lambda_plus", "local_edge_connectivity", "min_edge_cut",
    "rd_exact", "rd_upper_min_bound", "rd_upper_three_halves", "rd_upper_vertex_removal",
    "rvd_exact", "shannon_proper_coloring", "shrinking_decomposition", "verify_rd_coloring",
    "vizing_proper_coloring",
]
