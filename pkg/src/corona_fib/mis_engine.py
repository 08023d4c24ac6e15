"""Maximal independent sets of trees: enumeration oracle, tree DP, side counts.

``enumerate_mis`` is deliberately naive and serves as the reference that
``count_mis`` and friends are tested against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from corona_fib.fib_core import fib, parse_rational
from corona_fib.graph_core import ExpandedTree, Tree, TreeStructureError, expand, path_tree
from corona_fib.report import IdentityReport

DEFAULT_ENUM_CAP = 24
HARD_ENUM_CAP = 30

CORE = "core"
LEAF = "leaf"


class CapacityError(ValueError):
    """Graph is too large for exhaustive enumeration."""


def _tree(g: Tree | ExpandedTree) -> Tree:
    if isinstance(g, ExpandedTree):
        return g.graph
    if not isinstance(g, Tree):
        raise TreeStructureError(f"expected a Tree, got {type(g).__name__}")
    return g


def _members(g: Tree, s: Iterable[int]) -> set[int]:
    members = set(s)
    for x in members:
        g._check_vertex(x)
    return members


def is_independent(g: Tree | ExpandedTree, s: Iterable[int]) -> bool:
    t = _tree(g)
    members = _members(t, s)
    return not any(u in members and v in members for u, v in t.edges)


def is_maximal_independent(g: Tree | ExpandedTree, s: Iterable[int]) -> bool:
    t = _tree(g)
    members = _members(t, s)
    if not is_independent(t, members):
        return False
    return all(x in members or any(w in members for w in t.adjacency[x]) for x in range(t.vertex_count))


def enumerate_mis(g: Tree | ExpandedTree, cap: int = DEFAULT_ENUM_CAP) -> list[list[int]]:
    """Every maximal independent set, as sorted lists in lexicographic order.

    Vertices are decided in id order. A branch is cut only when it already
    contains an edge, or when some excluded vertex has all neighbours decided
    and none of them chosen. Survivors are re-checked with
    :func:`is_maximal_independent`.
    """
    t = _tree(g)
    if cap > HARD_ENUM_CAP:
        raise CapacityError(f"enumeration cap {cap} exceeds hard limit {HARD_ENUM_CAP}")
    n = t.vertex_count
    if n > cap:
        raise CapacityError(f"{n} vertices exceeds the enumeration cap of {cap}")
    adj = t.adjacency
    # vertex x is fully decided once all of 0..last_nb[x] are decided
    last_nb = [max((x,) + adj[x]) for x in range(n)]
    watch: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        watch[last_nb[x]].append(x)

    chosen = [False] * n
    found: list[list[int]] = []

    def undominated(x: int) -> bool:
        return not chosen[x] and not any(chosen[w] for w in adj[x])

    def step(v: int) -> None:
        if v == n:
            s = [x for x in range(n) if chosen[x]]
            if is_maximal_independent(t, s):
                found.append(s)
            return
        for take in (True, False):
            if take and any(chosen[w] for w in adj[v] if w < v):
                continue
            chosen[v] = take
            if not any(undominated(x) for x in watch[v]):
                step(v + 1)
            chosen[v] = False

    step(0)
    found.sort()
    return found


def _rooted_order(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """BFS order from ``root`` and each vertex's parent (-1 for the root)."""
    parent = [-1] * t.vertex_count
    order = [root]
    seen = [False] * t.vertex_count
    seen[root] = True
    for u in order:
        for w in t.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    return order, parent


def _mis_dp(t: Tree, root: int = 0, forced_in: int | None = None) -> int:
    # Per vertex, counts over its subtree:
    #   inn  - vertex in the set
    #   dom  - vertex out, some child in the set
    #   free - vertex out, no child in the set (parent must take it)
    order, parent = _rooted_order(t, root)
    n = t.vertex_count
    inn = [1] * n
    out_any = [1] * n  # prod over children of (inn + dom)
    out_none = [1] * n  # prod over children of dom
    for v in reversed(order):
        dom_v = out_any[v] - out_none[v]
        free_v = out_none[v]
        if v == forced_in:
            dom_v = free_v = 0
        p = parent[v]
        if p < 0:
            return inn[v] + dom_v
        inn[p] *= dom_v + free_v
        out_any[p] *= inn[v] + dom_v
        out_none[p] *= dom_v
    raise AssertionError("root not reached")


def count_mis(g: Tree | ExpandedTree, root: int = 0) -> int:
    """Number of maximal independent sets, by a three-state rooted tree DP."""
    t = _tree(g)
    t._check_vertex(root)
    return _mis_dp(t, root)


def count_mis_containing(g: Tree | ExpandedTree, x: int, root: int = 0) -> int:
    """lambda(x): maximal independent sets that contain ``x``."""
    t = _tree(g)
    t._check_vertex(x)
    t._check_vertex(root)
    return _mis_dp(t, root, forced_in=x)


def induced_subtree(t: Tree, vertices: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """Induced subgraph on ``vertices`` relabelled densely, plus the old->new map.

    Raises TreeStructureError if the subgraph is disconnected.
    """
    keep = sorted(set(vertices))
    relabel = {v: j for j, v in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in t.edges if u in relabel and v in relabel]
    return Tree(len(keep), edges), relabel


def count_containing_in(t: Tree, vertices: Iterable[int], x: int) -> int:
    """Maximal independent sets of the induced subgraph on ``vertices`` that contain x."""
    sub, relabel = induced_subtree(t, vertices)
    return _mis_dp(sub, relabel[x], forced_in=relabel[x])


def _check_kind(kind: str) -> None:
    if kind not in (CORE, LEAF):
        raise ValueError(f"kind must be 'core' or 'leaf', got {kind!r}")


def _require_central(g: ExpandedTree, i: int) -> None:
    central = g.central_path
    if i not in central:
        raise IndexError(f"position {i} is not on the central path 1..{g.core_size - 2}")


def side_vertices(g: ExpandedTree, i: int, kind: str, side: str) -> list[int]:
    """Vertex set of the one-sided portion used for l(x) or r(x).

    The "left" portion of position i runs toward position n-1, the "right"
    portion toward 0; this orientation is the one for which
    l(v_i) = F[n-i] and r(v_i) = F[i+1]. A leaf's portion also contains its
    support vertex; a core vertex's portion excludes its own leaf.
    """
    _check_kind(kind)
    n = g.core_size
    if side == "left":
        positions = range(i + 1, n)
    elif side == "right":
        positions = range(0, i)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    verts = [i]
    for p in positions:
        verts += [p, n + p]
    if kind == LEAF:
        verts.append(n + i)
    return verts


def _side_count(g: ExpandedTree, i: int, kind: str, side: str) -> int:
    x = g.leaf_of(i) if kind == LEAF else g.core_vertex(i)
    return count_containing_in(g.graph, side_vertices(g, i, kind, side), x)


def left_count(g: ExpandedTree, i: int, kind: str) -> int:
    """l(x) for x = v_i (kind 'core') or z_i (kind 'leaf')."""
    _check_kind(kind)
    _require_central(g, i)
    return _side_count(g, i, kind, "left")


def right_count(g: ExpandedTree, i: int, kind: str) -> int:
    """r(x) for x = v_i or z_i."""
    _check_kind(kind)
    _require_central(g, i)
    return _side_count(g, i, kind, "right")


def weighted_left_count(g: ExpandedTree, i: int, kind: str, alpha, beta) -> Fraction:
    """beta * l(x_i) + alpha * l(x at position i of the core shortened by one).

    Gives beta F[n-i] + alpha F[n-i-1] = G[n-i] for cores and
    beta F[n-i+1] + alpha F[n-i] = G[n-i+1] for leaves. At i = n-2 the
    shortened core has i as its end position, which is still well defined.
    """
    _check_kind(kind)
    _require_central(g, i)
    alpha, beta = parse_rational(alpha), parse_rational(beta)
    shorter = expand(path_tree(g.core_size - 1))
    return beta * _side_count(g, i, kind, "left") + alpha * _side_count(shorter, i, kind, "left")


def side_counts(g: ExpandedTree, i: int, kind: str) -> dict[str, int]:
    x = g.leaf_of(i) if kind == LEAF else g.core_vertex(i)
    return {
        "l": left_count(g, i, kind),
        "r": right_count(g, i, kind),
        "lambda": count_mis_containing(g, x),
    }


def verify_sanders_results(n: int) -> IdentityReport:
    """Check the three results and M = 2F[n] + F[n-1] = F[n+2] on the path corona."""
    if n < 3:
        raise ValueError(f"central path is empty for n={n}; need n >= 3")
    g = expand(path_tree(n))
    total = count_mis(g)
    rep = IdentityReport("sanders", {"n": n}, value=total)

    def check(name: str, i: int | None, expected, actual) -> bool:
        rep.cases += 1
        if expected != actual:
            rep.counterexample = {"check": name, "n": n, "i": i, "expected": expected, "actual": actual}
            return False
        return True

    if not check("M = 2F[n] + F[n-1]", None, int(2 * fib(n) + fib(n - 1)), total):
        return rep
    if not check("M = F[n+2]", None, int(fib(n + 2)), total):
        return rep
    for i in g.central_path:
        v = side_counts(g, i, CORE)
        z = side_counts(g, i, LEAF)
        checks = [
            ("lambda(z)+lambda(v) = M", total, z["lambda"] + v["lambda"]),
            ("lambda(v) = l(v) r(v)", v["l"] * v["r"], v["lambda"]),
            ("lambda(z) = l(z) r(z)", z["l"] * z["r"], z["lambda"]),
            ("l(v) = F[n-i]", int(fib(n - i)), v["l"]),
            ("r(v) = F[i+1]", int(fib(i + 1)), v["r"]),
            ("l(z) = F[n-i+1]", int(fib(n - i + 1)), z["l"]),
            ("r(z) = F[i+2]", int(fib(i + 2)), z["r"]),
        ]
        for name, expected, actual in checks:
            if not check(name, i, expected, actual):
                return rep
    return rep


def verify_result1_general(core: Tree) -> IdentityReport:
    """M = lambda(z) + lambda(v) for every pendant leaf z of expand(core)."""
    g = expand(core)
    total = count_mis(g)
    rep = IdentityReport("result1-general", {"core_n": core.vertex_count, "core_edges": list(core.edges)}, value=total)
    for i in range(core.vertex_count):
        rep.cases += 1
        got = count_mis_containing(g, g.leaf_of(i)) + count_mis_containing(g, g.core_vertex(i))
        if got != total:
            rep.counterexample = {"position": i, "expected": total, "actual": got}
            break
    return rep
