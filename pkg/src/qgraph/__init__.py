"""Exact tools for quantum independence and chromatic gaps of orthogonality graphs."""
from ._backend import BACKEND
from .graphcore import CliquePartition, Graph, GraphError, VectorSet, orthogonality_graph, vector_set
from .qcert import Certificate, alpha_gap_witness, verify
from .solvers import BudgetExhausted, chromatic_number, max_independent_set

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExhausted",
    "Certificate",
    "CliquePartition",
    "Graph",
    "GraphError",
    "VectorSet",
    "alpha_gap_witness",
    "chromatic_number",
    "max_independent_set",
    "orthogonality_graph",
    "vector_set",
    "verify",
    "__version__",
]
