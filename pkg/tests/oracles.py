"""Reference computations that share no code with the package under test."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx


def nx_graph(vertex_count, edges):
    g = nx.Graph()
    g.add_nodes_from(range(vertex_count))
    g.add_edges_from(edges)
    return g


def subset_mis(vertex_count, edges):
    """All maximal independent sets by filtering every subset. Keep n small."""
    adj = {v: set() for v in range(vertex_count)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for r in range(vertex_count + 1):
        for s in combinations(range(vertex_count), r):
            chosen = set(s)
            if any(adj[x] & chosen for x in chosen):
                continue
            if all(x in chosen or adj[x] & chosen for x in range(vertex_count)):
                out.append(sorted(s))
    return sorted(out)


def clique_mis(vertex_count, edges):
    """Maximal independent sets as maximal cliques of the complement graph."""
    comp = nx.complement(nx_graph(vertex_count, edges))
    return sorted(sorted(c) for c in nx.find_cliques(comp))


def corona_edges(n):
    """Edges of a path on 0..n-1 with a pendant leaf n+i on every vertex."""
    return [(i, i + 1) for i in range(n - 1)] + [(i, n + i) for i in range(n)]


def fib_list(lo, hi, a=0, b=1):
    """{m: G[m]} for lo <= m <= hi, built by plain forward/backward stepping."""
    vals = {0: Fraction(a), 1: Fraction(b)}
    for m in range(2, hi + 1):
        vals[m] = vals[m - 1] + vals[m - 2]
    for m in range(-1, lo - 1, -1):
        vals[m] = vals[m + 2] - vals[m + 1]
    return {m: v for m, v in vals.items() if lo <= m <= hi}


def poly_eval(coeffs, a, b):
    """Evaluate {(da, db): c} at (a, b)."""
    return sum(Fraction(c) * Fraction(a) ** da * Fraction(b) ** db for (da, db), c in coeffs.items())
