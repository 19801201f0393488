"""General-graph recurrence evaluators, cross-checkable against the oracle.

Vertex route:   D(G) = x*D(G/u) + D(G-u) + x*D(G-N[u]) - (1+x)*p_u(G)
Edge route:     D(G) = D(G-e) + x/(x-1) * [eight-term bracket]
Product route:  D(G) = product of D over connected components.

The x/(x-1) factor never leaves the integers: the bracket is divisible by
(x-1), which is asserted on every call.  These evaluators are exponential in
the worst case; their job is validation, not speed.
"""
from __future__ import annotations

from . import oracle
from .graph import Graph, connected_components
from .poly import DomPoly

DEFAULT_LEAF_THRESHOLD = 10

_X = DomPoly.x()
_ONE_PLUS_X = DomPoly((1, 1))


def max_degree_vertex(g: Graph) -> int:
    """Pivot policy: maximum degree, lowest label on ties."""
    return max(range(g.n), key=lambda v: (g.degree(v), -v))


def _pivot_edge(g: Graph) -> tuple[int, int]:
    u = max_degree_vertex(g)
    nbrs = g.neighbors(u)
    if not nbrs:
        raise ValueError("graph has no edges")
    v = max(nbrs, key=lambda w: (g.degree(w), -w))
    return u, v


def _eval(g: Graph, leaf: int, cap: int | None, memo: dict | None) -> DomPoly:
    if g.n <= leaf:
        return oracle.domination_polynomial(g, cap=cap)
    if memo is not None and g in memo:
        return memo[g]
    p = _apply_vertex(g, max_degree_vertex(g), leaf, cap, memo)
    if memo is not None:
        memo[g] = p
    return p


def _apply_vertex(g: Graph, u: int, leaf: int, cap: int | None, memo: dict | None) -> DomPoly:
    contracted = _eval(g.contract_vertex(u), leaf, cap, memo)
    deleted = _eval(g.delete_vertices([u]), leaf, cap, memo)
    closed_deleted = _eval(g.delete_closed_neighborhood(u), leaf, cap, memo)
    p_u = oracle.restricted_polynomial(g, u, cap=cap)
    return _X * contracted + deleted + _X * closed_deleted - _ONE_PLUS_X * p_u


def vertex_recurrence(
    g: Graph,
    u: int | None = None,
    *,
    leaf_threshold: int = DEFAULT_LEAF_THRESHOLD,
    cap: int | None = None,
    memo: dict | None = None,
) -> DomPoly:
    """D(G,x) via one application of the vertex identity at u (default: pivot policy)."""
    if g.n == 0:
        return DomPoly.one()
    if u is None:
        u = max_degree_vertex(g)
    else:
        g._check_vertex(u)
    return _apply_vertex(g, u, leaf_threshold, cap, memo)


def edge_recurrence_bracket(
    g: Graph,
    u: int,
    v: int,
    *,
    leaf_threshold: int = DEFAULT_LEAF_THRESHOLD,
    cap: int | None = None,
    memo: dict | None = None,
) -> tuple[DomPoly, DomPoly]:
    """(D(G-e), bracket sum S) for e={u,v}; S must vanish at x=1."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    ge = g.delete_edge(u, v)

    def ev(h: Graph) -> DomPoly:
        return _eval(h, leaf_threshold, cap, memo)

    s = (
        ev(ge.contract_vertex(u))
        + ev(ge.contract_vertex(v))
        - ev(g.contract_vertex(u))
        - ev(g.contract_vertex(v))
        - ev(g.delete_closed_neighborhood(u))
        - ev(g.delete_closed_neighborhood(v))
        + ev(ge.delete_closed_neighborhood(u))
        + ev(ge.delete_closed_neighborhood(v))
    )
    return ev(ge), s


def edge_recurrence(
    g: Graph,
    u: int | None = None,
    v: int | None = None,
    *,
    leaf_threshold: int = DEFAULT_LEAF_THRESHOLD,
    cap: int | None = None,
    memo: dict | None = None,
) -> DomPoly:
    """D(G,x) via the edge identity at e={u,v} (default: edge at the pivot vertex)."""
    if u is None or v is None:
        u, v = _pivot_edge(g)
    minus_e, bracket = edge_recurrence_bracket(
        g, u, v, leaf_threshold=leaf_threshold, cap=cap, memo=memo
    )
    # x/(x-1) * S == exact-div(x*S, x-1); divisibility is part of the contract
    quotient = (bracket * _X).divide_exact_by_x_minus_1()
    return minus_e + quotient


def components_product(
    g: Graph,
    *,
    leaf_threshold: int = DEFAULT_LEAF_THRESHOLD,
    cap: int | None = None,
    memo: dict | None = None,
) -> DomPoly:
    """D(G,x) as the product over connected components (empty product = 1)."""
    result = DomPoly.one()
    for comp in connected_components(g):
        result = result * _eval(g.induced(comp), leaf_threshold, cap, memo)
    return result
