"""QAOA on graph problems with penalty and profit QUBO formulations.

Kinds are the strings returned by ``kinds()``. Subsets are bitstrings with
vertex i at character i, or bitmask indices where bit i is vertex i.
Constrained kinds default to penalties (A, B) = (3, 2).
"""

from ._core import (
    Graph,
    GraphError,
    ResourceError,
    approximation_ratio,
    diagonal,
    exact,
    expectation,
    ising,
    kinds,
    objective,
    optimize,
    penalty_anomaly,
    postprocess,
    probabilities,
    qubo_cost,
    summed_probabilities,
)

__all__ = [
    "Graph",
    "GraphError",
    "ResourceError",
    "approximation_ratio",
    "diagonal",
    "exact",
    "expectation",
    "ising",
    "kinds",
    "objective",
    "optimize",
    "penalty_anomaly",
    "postprocess",
    "probabilities",
    "qubo_cost",
    "summed_probabilities",
]
