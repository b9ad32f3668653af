"""Immutable trees on integer vertices: structural queries, edge-list I/O,
and a canonical form for isomorphism testing.

Vertices are always 0..order-1.  The canonical form is the AHU encoding
rooted at the tree center; two trees get the same code exactly when they are
isomorphic, so the code doubles as a dedup key.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListParseError, TreeStructureError

# Isomorphism key: a balanced-parenthesis string under lexicographic order.
CanonicalCode = str


class Tree:
    """Undirected tree stored as a tuple of sorted neighbor tuples.

    Instances are value objects: equality and hashing follow the labeled
    adjacency, and nothing mutates after construction.  Use ``from_edges``
    for untrusted input; the other constructors build known-good trees and
    skip revalidation.
    """

    __slots__ = ("order", "adjacency", "degrees")

    def __init__(self, order: int, adjacency: tuple[tuple[int, ...], ...]):
        self.order = order
        self.adjacency = adjacency
        self.degrees = tuple(len(nbrs) for nbrs in adjacency)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        """Validating constructor: exactly order-1 distinct, loop-free edges
        forming a connected graph."""
        if order < 1:
            raise TreeStructureError(f"order must be positive, got {order}")
        adj: list[list[int]] = [[] for _ in range(order)]
        seen: set[tuple[int, int]] = set()
        count = 0
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise TreeStructureError(
                    f"edge ({u}, {v}) out of range for order {order}"
                )
            if u == v:
                raise TreeStructureError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise TreeStructureError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            count += 1
        if count != order - 1:
            raise TreeStructureError(
                f"a tree on {order} vertices needs {order - 1} edges, got {count}"
            )
        # connected + n-1 edges => acyclic
        reached = bytearray(order)
        reached[0] = 1
        queue = deque([0])
        hit = 1
        while queue:
            w = queue.popleft()
            for z in adj[w]:
                if not reached[z]:
                    reached[z] = 1
                    hit += 1
                    queue.append(z)
        if hit != order:
            raise TreeStructureError("edge list is disconnected")
        return cls(order, tuple(tuple(sorted(nbrs)) for nbrs in adj))

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "Tree":
        """Build from a parent array with parents[0] == -1 and parents[i] < i."""
        n = len(parents)
        if n < 1 or parents[0] != -1:
            raise ValueError("parents[0] must be -1")
        adj: list[list[int]] = [[] for _ in range(n)]
        for i in range(1, n):
            p = parents[i]
            if not 0 <= p < i:
                raise ValueError(f"parents[{i}]={p} must lie in [0, {i})")
            adj[p].append(i)
            adj[i].append(p)
        return cls(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))

    @classmethod
    def from_level_sequence(cls, levels: Sequence[int]) -> "Tree":
        """Build from a preorder depth sequence starting at level 0."""
        n = len(levels)
        if n < 1 or levels[0] != 0:
            raise ValueError("level sequence must start with 0")
        adj: list[list[int]] = [[] for _ in range(n)]
        last_at = [0] * (n + 1)
        for i in range(1, n):
            li = levels[i]
            if not 1 <= li <= levels[i - 1] + 1:
                raise ValueError(f"level jump at position {i}")
            p = last_at[li - 1]
            adj[p].append(i)
            adj[i].append(p)
            last_at[li] = i
        return cls(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))

    @classmethod
    def path(cls, order: int) -> "Tree":
        return cls.from_edges(order, ((i, i + 1) for i in range(order - 1)))

    @classmethod
    def star(cls, order: int) -> "Tree":
        return cls.from_edges(order, ((0, i) for i in range(1, order)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.order):
            for v in self.adjacency[u]:
                if v > u:
                    yield (u, v)

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.order)):
            raise ValueError("perm must be a permutation of 0..order-1")
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges():
            adj[perm[u]].append(perm[v])
            adj[perm[v]].append(perm[u])
        return Tree(self.order, tuple(tuple(sorted(nbrs)) for nbrs in adj))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise ValueError(f"vertex {v} out of range for order {self.order}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tree)
            and self.order == other.order
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.order, self.adjacency))

    def __repr__(self) -> str:
        return f"Tree(order={self.order}, edges={list(self.edges())})"


def pendant_vertices(t: Tree) -> set[int]:
    """All degree-1 vertices; empty for the order-1 tree."""
    return {v for v in range(t.order) if t.degrees[v] == 1}


def support_vertex(t: Tree, pendant: int) -> int:
    """The unique neighbor of a pendant vertex."""
    if t.degree(pendant) != 1:
        raise ValueError(f"vertex {pendant} has degree {t.degrees[pendant]}, not 1")
    return t.adjacency[pendant][0]


def tree_path(t: Tree, u: int, v: int) -> list[int]:
    """Vertex sequence of the unique u-v path (inclusive)."""
    t._check_vertex(u)
    t._check_vertex(v)
    if u == v:
        return [u]
    parent = [-2] * t.order
    parent[u] = -1
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for z in t.adjacency[w]:
            if parent[z] == -2:
                parent[z] = w
                if z == v:
                    queue.clear()
                    break
                queue.append(z)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def distance(t: Tree, u: int, v: int) -> int:
    """Edge count of the unique u-v path."""
    return len(tree_path(t, u, v)) - 1


def strip_pendants(t: Tree) -> tuple[Tree, tuple[int, ...]]:
    """Induced subtree on the non-pendant vertices, re-indexed.

    Returns (stripped, old_of) where old_of[new_id] is the original id.
    """
    if t.order < 3:
        raise ValueError("stripping a tree of order <= 2 leaves nothing")
    keep = [v for v in range(t.order) if t.degrees[v] >= 2]
    new_of = {old: new for new, old in enumerate(keep)}
    edges = [
        (new_of[u], new_of[v]) for u, v in t.edges() if u in new_of and v in new_of
    ]
    return Tree.from_edges(len(keep), edges), tuple(keep)


def tree_centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices, found by peeling leaf layers."""
    n = t.order
    if n <= 2:
        return list(range(n))
    deg = list(t.degrees)
    layer = [v for v in range(n) if deg[v] == 1]
    alive = n
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adjacency[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
            deg[v] = 0
        layer = nxt
    return sorted(layer)


def _rooted_code(adjacency: Sequence[Sequence[int]], root: int) -> str:
    """AHU encoding of the rooted tree: children codes sorted and bracketed."""
    n = len(adjacency)
    parent = [-1] * n
    visited = bytearray(n)
    visited[root] = 1
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if not visited[u]:
                visited[u] = 1
                parent[u] = v
                order.append(u)
                stack.append(u)
    child_codes: list[list[str]] = [[] for _ in range(n)]
    for v in reversed(order):
        code = "(" + "".join(sorted(child_codes[v])) + ")"
        if v == root:
            return code
        child_codes[parent[v]].append(code)
    raise AssertionError("unreachable")


def canonical_code(t: Tree) -> CanonicalCode:
    """Isomorphism-complete code: AHU at the center, minimum over a 2-center tie."""
    return min(_rooted_code(t.adjacency, c) for c in tree_centers(t))


def parse_edge_list(text: str) -> Tree:
    """Parse the plain edge-list format: first line n, then n-1 lines "u v".

    Diagnostics carry 1-based line numbers; structural problems (cycles,
    disconnection) surface as TreeStructureError from validation.
    """
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise EdgeListParseError("line 1: expected the vertex count", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise EdgeListParseError(
            f"line 1: vertex count must be an integer, got {lines[0]!r}", line=1
        ) from None
    if n < 1:
        raise EdgeListParseError(f"line 1: vertex count must be positive, got {n}", line=1)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for k in range(n - 1):
        lineno = k + 2
        if k + 1 >= len(lines):
            raise EdgeListParseError(
                f"line {lineno}: missing edge line ({n - 1} required)", line=lineno
            )
        parts = lines[k + 1].split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"line {lineno}: expected 'u v', got {lines[k + 1]!r}", line=lineno
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {lineno}: vertex ids must be integers, got {lines[k + 1]!r}",
                line=lineno,
            ) from None
        if u == v:
            raise EdgeListParseError(f"line {lineno}: self-loop {u} {v}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(
                f"line {lineno}: vertex out of range [0, {n}) in '{u} {v}'",
                line=lineno,
            )
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListParseError(
                f"line {lineno}: duplicate edge {u} {v}", line=lineno
            )
        seen.add(key)
        edges.append((u, v))
    for extra in range(n, len(lines)):
        if lines[extra].strip():
            raise EdgeListParseError(
                f"line {extra + 1}: unexpected content after {n - 1} edges",
                line=extra + 1,
            )
    return Tree.from_edges(n, edges)


def format_edge_list(t: Tree) -> str:
    """Render the edge-list format, edges sorted, LF-terminated."""
    out = [str(t.order)]
    out.extend(f"{u} {v}" for u, v in t.edges())
    return "\n".join(out) + "\n"
