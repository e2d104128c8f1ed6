"""Recognition, colouring and polyhedral checks for fork-free t-perfect graphs."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    Graph,
    GraphError,
    PreconditionError,
    ScopeError,
    alpha_w,
    are_isomorphic,
    duplicate_vertex,
    enumerate_graphs,
    is_fork_free,
    named_graph,
    odd_holes,
    parse_graph,
    run_cli,
    t_perfect_oracle,
)

__all__ = [
    "Graph",
    "GraphError",
    "PreconditionError",
    "ScopeError",
    "alpha_w",
    "are_isomorphic",
    "duplicate_vertex",
    "enumerate_graphs",
    "is_fork_free",
    "min_w_cover",
    "named_graph",
    "odd_holes",
    "parse_graph",
    "polytope_vertices",
    "recognize",
    "run_cli",
    "strong_check",
    "t_perfect_oracle",
    "three_color",
    "tminor",
    "verify_verdict",
]


def recognize(graph, bounded=False):
    """Verdict as a dict: answer, branch, certificate, fallback steps, components."""
    return json.loads(_core.recognize_json(graph, bounded))


def verify_verdict(graph, verdict):
    return _core.verify_verdict_json(graph, json.dumps(verdict))


def three_color(graph):
    return json.loads(_core.three_color_json(graph))


def tminor(graph, budget=None):
    return json.loads(_core.tminor_json(graph, budget))


def polytope_vertices(graph):
    return [[Fraction(x) for x in row] for row in _core.polytope_vertices(graph)]


def min_w_cover(graph, weights):
    return json.loads(_core.min_w_cover_json(graph, list(weights)))


def strong_check(graph, w_max=1):
    return json.loads(_core.strong_check_json(graph, w_max))
