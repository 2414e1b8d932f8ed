"""Maximal clique enumeration and the clique number c(G)."""

from __future__ import annotations

from .graph import Graph, members, popcount


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in smallest-last (degeneracy) order, ties broken by index."""
    remaining = g.vertex_mask
    degree = [popcount(a) for a in g.adj]
    order = []
    while remaining:
        v = min(members(remaining), key=lambda u: (degree[u], u))
        order.append(v)
        remaining &= ~(1 << v)
        for u in members(g.adj[v] & remaining):
            degree[u] -= 1
    return order


def _bron_kerbosch(adj: tuple[int, ...], r: int, p: int, x: int, out: list[int]) -> None:
    if not p and not x:
        out.append(r)
        return
    # pivot: vertex of P | X with the most neighbours in P
    pivot = max(members(p | x), key=lambda u: popcount(p & adj[u]))
    for v in members(p & ~adj[pivot]):
        bit = 1 << v
        _bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out)
        p &= ~bit
        x |= bit


def enumerate_maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques of ``g`` as bitmasks.

    Ordered lexicographically by their sorted vertex-index lists.  The graph
    on zero vertices has the single maximal clique ``0`` (the empty set).
    """
    if g.n == 0:
        return [0]
    found: list[int] = []
    p, x = g.vertex_mask, 0
    for v in degeneracy_order(g):
        bit = 1 << v
        _bron_kerbosch(g.adj, bit, p & g.adj[v], x & g.adj[v], found)
        p &= ~bit
        x |= bit
    return sorted(found, key=members)


def max_clique_size(g: Graph) -> int:
    """c(G): the largest clique cardinality, 0 for the empty graph."""
    return max(popcount(m) for m in enumerate_maximal_cliques(g))


def all_cliques(g: Graph) -> list[int]:
    """Every clique of ``g``, the empty one included, sorted by (size, members)."""
    out = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for c in frontier:
            top = c.bit_length()
            common = g.vertex_mask
            for v in members(c):
                common &= g.adj[v]
            for v in members(common >> top << top):
                nxt.append(c | 1 << v)
        out.extend(nxt)
        frontier = nxt
    return sorted(out, key=lambda m: (popcount(m), members(m)))
