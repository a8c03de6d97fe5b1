"""Executable graph matroid families: independence oracles, structural
invariants, matroid unions, vertical connectivity and reconstruction checks."""

__version__ = "0.1.0"

from .errors import (FamilyAxiomError, GraphMatroidError, InvalidArgumentError,
                     PreconditionError, ResourceLimitError, SpecSyntaxError)
from .graph import Graph, complete_graph, enumerate_graphs, parse_edge_list, read_edge_list
from .matroid import Oracle, bridges, circuits, closure, complete_rank, is_circuit, is_rigid, rank
from .families import documented_profile, format_family, make_oracle, parse_family
from .union import union_independent, union_rank
from .structure import compute_profile
from .connectivity import vertical_connectivity
from .reconstruction import is_reconstructible

__all__ = [
    "__version__", "FamilyAxiomError", "GraphMatroidError", "InvalidArgumentError",
    "PreconditionError", "ResourceLimitError", "SpecSyntaxError", "Graph", "complete_graph",
    "enumerate_graphs", "parse_edge_list", "read_edge_list", "Oracle", "bridges", "circuits",
    "closure", "complete_rank", "is_circuit", "is_rigid", "rank", "documented_profile",
    "format_family", "make_oracle", "parse_family", "union_independent", "union_rank",
    "compute_profile", "vertical_connectivity", "is_reconstructible",
]
