"""Core trees, their expanded (corona) trees, and serialization.

Vertices are dense ints ``0..vertex_count-1``. In an expanded tree built from
an n-vertex core, core position ``i`` keeps id ``i`` and its pendant leaf gets
id ``n + i``.
"""

from __future__ import annotations

import heapq
import json
import random
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


class TreeStructureError(ValueError):
    """Edge data does not describe a tree."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    """An undirected simple graph that is connected and acyclic.

    Construction validates everything; a ``Tree`` that exists is a tree.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        if vertex_count < 1:
            raise ValueError(f"a tree needs at least one vertex, got {vertex_count}")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise TreeStructureError(f"edge {(u, v)} references a vertex outside 0..{vertex_count - 1}")
            if u == v:
                raise TreeStructureError(f"self-loop at {u}")
            key = _norm_edge(u, v)
            if key in norm:
                raise TreeStructureError(f"duplicate edge {key}")
            norm.add(key)
        if len(norm) != vertex_count - 1:
            raise TreeStructureError(f"{vertex_count} vertices need {vertex_count - 1} edges, got {len(norm)}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if len(_reachable(self.adjacency, 0)) != vertex_count:
            raise TreeStructureError("graph is not connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, x: int) -> tuple[int, ...]:
        self._check_vertex(x)
        return self.adjacency[x]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def _check_vertex(self, x: int) -> None:
        if not 0 <= x < self.vertex_count:
            raise IndexError(f"vertex {x} out of range 0..{self.vertex_count - 1}")

    def __len__(self) -> int:
        return self.vertex_count

    def to_dict(self) -> dict:
        return {"n": self.vertex_count, "edges": [list(e) for e in self.edges]}


def _reachable(adj: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def degree(g: Tree | ExpandedTree, x: int) -> int:
    return len(_as_tree(g).neighbors(x))


def is_leaf(g: Tree | ExpandedTree, x: int) -> bool:
    return degree(g, x) == 1


def _as_tree(g: Tree | ExpandedTree) -> Tree:
    return g.graph if isinstance(g, ExpandedTree) else g


def path_tree(n: int) -> Tree:
    """Path on n vertices, 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(leaves: int) -> Tree:
    """Center 0 joined to vertices 1..leaves."""
    if leaves < 0:
        raise ValueError(f"negative leaf count {leaves}")
    return Tree(leaves + 1, [(0, j) for j in range(1, leaves + 1)])


def random_tree(n: int, seed: int) -> Tree:
    """Uniform labeled tree on n vertices, decoded from a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError(f"tree needs n >= 1, got {n}")
    if n == 1:
        return Tree(1, [])
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def prufer_decode(code: Sequence[int], n: int) -> Tree:
    if len(code) != n - 2:
        raise ValueError(f"Pruefer code for {n} vertices has length {n - 2}, got {len(code)}")
    remaining = [1] * n
    for c in code:
        remaining[c] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, c))
        remaining[c] -= 1
        if remaining[c] == 1:
            heapq.heappush(leaves, c)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


@dataclass(frozen=True)
class ExpandedTree:
    """A core tree with one pendant leaf added to every vertex.

    For a path core the positions 1..n-2 form the central path; position i's
    core vertex is the paper-style v_i and ``leaf_of(i)`` is z_i.
    """

    graph: Tree
    core_size: int
    core: Tree = field(repr=False)

    def core_vertex(self, i: int) -> int:
        self._check_position(i)
        return i

    def leaf_of(self, i: int) -> int:
        self._check_position(i)
        return self.core_size + i

    @property
    def core_vertices(self) -> list[int]:
        return list(range(self.core_size))

    @property
    def leaves(self) -> list[int]:
        return list(range(self.core_size, 2 * self.core_size))

    @cached_property
    def core_is_path(self) -> bool:
        return self.core.edges == path_tree(self.core_size).edges

    @property
    def central_path(self) -> list[int]:
        """Positions 1..n-2. Empty for n <= 2; only defined for path cores."""
        if not self.core_is_path:
            raise TreeStructureError("central path is only defined for path cores")
        return list(range(1, self.core_size - 1))

    def _check_position(self, i: int) -> None:
        if not 0 <= i < self.core_size:
            raise IndexError(f"core position {i} out of range 0..{self.core_size - 1}")

    def to_dict(self) -> dict:
        return {
            "n": self.core_size,
            "edges": [list(e) for e in self.graph.edges],
            "core": self.core_vertices,
            "leaves": self.leaves,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def expand(core: Tree) -> ExpandedTree:
    """Attach a new leaf ``n + i`` to every core vertex ``i``."""
    n = core.vertex_count
    edges = list(core.edges) + [(i, n + i) for i in range(n)]
    return ExpandedTree(Tree(2 * n, edges), n, core)


def from_json(text: str) -> ExpandedTree:
    """Inverse of :meth:`ExpandedTree.to_json`; the leaf layout is checked."""
    data = json.loads(text)
    n = int(data["n"])
    if data["core"] != list(range(n)) or data["leaves"] != list(range(n, 2 * n)):
        raise TreeStructureError("core/leaves do not follow the 0..n-1 / n..2n-1 layout")
    graph = Tree(2 * n, data["edges"])
    core_edges = [e for e in graph.edges if e[1] < n]
    if set(graph.edges) - set(core_edges) != {(i, n + i) for i in range(n)}:
        raise TreeStructureError("leaf edges are not (i, n+i)")
    tree = expand(Tree(n, core_edges))
    return tree


def vertex_name(g: ExpandedTree, x: int) -> str:
    return f"v{x}" if x < g.core_size else f"z{x - g.core_size}"


def export_dot(g: ExpandedTree) -> str:
    """Graphviz text: core vertices v0.., leaves z0.., everything in id order."""
    lines = ["graph expanded_tree {"]
    for x in range(g.graph.vertex_count):
        shape = "circle" if x < g.core_size else "box"
        lines.append(f"  {vertex_name(g, x)} [shape={shape}];")
    for u, v in g.graph.edges:
        lines.append(f"  {vertex_name(g, u)} -- {vertex_name(g, v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*([vz]\d+)\s*\[")
_DOT_EDGE = re.compile(r"^\s*([vz]\d+)\s*--\s*([vz]\d+)\s*;")


def parse_dot_counts(text: str) -> tuple[int, int]:
    """(node count, edge count) of DOT text written by :func:`export_dot`."""
    nodes = sum(1 for line in text.splitlines() if _DOT_NODE.match(line))
    edges = sum(1 for line in text.splitlines() if _DOT_EDGE.match(line))
    return nodes, edges
