"""Shared helpers: cached enumeration sweeps, the labeled-tree reference
oracle (Prüfer decoding + isomorphism-class interning), and tree automorphism
counts for the exact Cayley cross-check."""

import heapq
import itertools
import math
from functools import lru_cache

from sombor_trees.enumeration import enumerate_free_trees
from sombor_trees.tree import Tree


@lru_cache(maxsize=None)
def trees_of_order(n):
    """Materialized enumeration stream, cached across tests."""
    return tuple(enumerate_free_trees(n))


def decode_prufer_adjacency(seq, n):
    """Prüfer decode straight to an adjacency list (no validation overhead)."""
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    adj = [[] for _ in range(n)]
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    for s in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(s)
        adj[s].append(leaf)
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    adj[u].append(v)
    adj[v].append(u)
    return adj


def _centers_of_adjacency(adj):
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    alive = n
    while alive > 2:
        alive -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
            deg[v] = 0
        layer = nxt
    return layer


class IsoClassInterner:
    """Maps trees to small integers, equal exactly for isomorphic trees.

    Independent of the production canonical code: integer-interned AHU over
    raw adjacency lists, rooted at the 1- or 2-vertex center.
    """

    def __init__(self):
        self._codes = {}

    def _rooted(self, adj, root):
        n = len(adj)
        parent = [-1] * n
        seen = bytearray(n)
        seen[root] = 1
        order = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    parent[u] = v
                    order.append(u)
                    stack.append(u)
        kids = [[] for _ in range(n)]
        codes = self._codes
        for v in reversed(order):
            key = tuple(sorted(kids[v]))
            code = codes.setdefault(key, len(codes))
            if v == root:
                return code
            kids[parent[v]].append(code)
        raise AssertionError

    def class_id(self, adj):
        return min(self._rooted(adj, c) for c in _centers_of_adjacency(adj))

    def class_id_of_tree(self, t: Tree):
        return self.class_id([list(nbrs) for nbrs in t.adjacency])


def prufer_iso_classes(n, interner=None):
    """Set of interner class ids over all labeled trees, plus the interner."""
    if interner is None:
        interner = IsoClassInterner()
    ids = set()
    if n == 1:
        ids.add(interner.class_id([[]]))
    elif n == 2:
        ids.add(interner.class_id([[1], [0]]))
    else:
        for seq in itertools.product(range(n), repeat=n - 2):
            ids.add(interner.class_id(decode_prufer_adjacency(seq, n)))
    return ids, interner


def _rooted_code_and_aut(adj, root, skip=-1):
    """Interned-free rooted AHU code plus rooted automorphism count.

    skip removes one neighbor of root (used to split a bicentral tree at its
    central edge).
    """
    n = len(adj)
    parent = [-1] * n
    seen = bytearray(n)
    seen[root] = 1
    if skip >= 0:
        seen[skip] = 1
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                parent[u] = v
                order.append(u)
                stack.append(u)
    kids = [[] for _ in range(n)]
    auts = [1] * n
    for v in reversed(order):
        children = sorted(kids[v])
        aut = auts[v]
        run = 1
        for i in range(1, len(children)):
            if children[i] == children[i - 1]:
                run += 1
            else:
                aut *= math.factorial(run)
                run = 1
        if children:
            aut *= math.factorial(run)
        code = "(" + "".join(children) + ")"
        if v == root:
            return code, aut
        kids[parent[v]].append(code)
        auts[parent[v]] *= aut
    raise AssertionError


def tree_automorphism_count(t: Tree) -> int:
    """|Aut(T)| for a free tree: rooted count at the unique center, or the
    split-edge product (doubled when the halves match) for two centers."""
    adj = [list(nbrs) for nbrs in t.adjacency]
    centers = _centers_of_adjacency(adj)
    if len(centers) == 1:
        return _rooted_code_and_aut(adj, centers[0])[1]
    c1, c2 = centers
    code1, a1 = _rooted_code_and_aut(adj, c1, skip=c2)
    code2, a2 = _rooted_code_and_aut(adj, c2, skip=c1)
    return a1 * a2 * (2 if code1 == code2 else 1)


def labeled_tree_total(trees):
    """Sum of n!/|Aut(T)| over the given order-n trees (orbit sizes under
    relabeling); equals Cayley's n^(n-2) exactly when the collection holds
    one representative of every isomorphism class."""
    total = 0
    for t in trees:
        total += math.factorial(t.order) // tree_automorphism_count(t)
    return total


def grow_by_leaf(trees):
    """Every order n+1 tree arises from an order-n tree plus one leaf; dedupe
    by the production canonical code.  Structural-induction cross-check."""
    from sombor_trees.tree import canonical_code

    seen = {}
    for t in trees:
        n = t.order
        for v in range(n):
            edges = list(t.edges()) + [(v, n)]
            grown = Tree.from_edges(n + 1, edges)
            code = canonical_code(grown)
            if code not in seen:
                seen[code] = grown
    return seen
