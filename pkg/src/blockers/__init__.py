"""Blocker problems: can at most k vertex deletions or edge contractions
lower the independence number, clique number or chromatic number of a
graph by at least d?

The package offers exact polynomial algorithms on several graph classes,
an exhaustive oracle for small graphs, the hardness reductions as
instance generators, and a command-line front end (``python -m blockers``).
"""

from __future__ import annotations

from .errors import (BlockerError, NotInClassError, PreconditionError, SizeGuardError,
                     WitnessError)
from .graph import (Contract, Delete, Graph, apply_witness, contract_edge, delete_vertex,
                    format_edge_list, format_witness, parse_edge_list, parse_witness)
from .oracle import BlockerInstance, OracleResult, oracle_decide, oracle_min_k, verify_witness
from .params import Parameter, alpha, chi, omega, parameter_value

__all__ = [
    "BlockerError", "NotInClassError", "PreconditionError", "SizeGuardError", "WitnessError",
    "Contract", "Delete", "Graph", "apply_witness", "contract_edge", "delete_vertex",
    "format_edge_list", "format_witness", "parse_edge_list", "parse_witness",
    "BlockerInstance", "OracleResult", "oracle_decide", "oracle_min_k", "verify_witness",
    "Parameter", "alpha", "chi", "omega", "parameter_value",
]
