"""Streaming enumeration of non-isomorphic trees, plus labeled-tree utilities.

The stream comes from the level-sequence kernels: exactly one representative
per isomorphism class, in a deterministic order (decreasing lexicographic on
the canonical level sequence).  The Prüfer helpers exist as the independent
reference route: decoding every sequence and deduplicating by canonical code
must reproduce the stream, and uniform random Prüfer sequences drive the
property tests.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _kernels
from .errors import SizeLimitError
from .invariants import independence_number
from .tree import Tree

DEFAULT_ORDER_CAP = 20


@dataclass(frozen=True)
class TreeFamilyQuery:
    """Order plus an optional independence-number filter."""

    order: int
    alpha_filter: int | None = None


def enumerate_free_trees(n: int, cap: int = DEFAULT_ORDER_CAP) -> Iterator[Tree]:
    """Yield one tree per isomorphism class of order n, deterministically."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > cap:
        raise SizeLimitError(f"order {n} exceeds the enumeration cap {cap}")
    for levels in _kernels.iter_level_sequences(n):
        yield Tree.from_level_sequence(levels)


def enumerate_family(
    query: TreeFamilyQuery, cap: int = DEFAULT_ORDER_CAP
) -> Iterator[Tree]:
    """The subset of the order-n stream with the requested independence number.

    Infeasible filters simply produce an empty stream.
    """
    for t in enumerate_free_trees(query.order, cap=cap):
        if query.alpha_filter is None or independence_number(t) == query.alpha_filter:
            yield t


def prufer_to_tree(seq: Sequence[int], order: int) -> Tree:
    """Decode a Prüfer sequence over 0..order-1 into the labeled tree."""
    if order < 2:
        raise ValueError("Prüfer decoding needs order >= 2")
    if len(seq) != order - 2:
        raise ValueError(f"sequence length must be {order - 2}, got {len(seq)}")
    deg = [1] * order
    for s in seq:
        if not 0 <= s < order:
            raise ValueError(f"label {s} out of range")
        deg[s] += 1
    leaves = [v for v in range(order) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(order, edges)


def random_tree(order: int, rng: random.Random) -> Tree:
    """Uniform over labeled trees (random Prüfer sequence)."""
    if order == 1:
        return Tree.from_edges(1, [])
    if order == 2:
        return Tree.from_edges(2, [(0, 1)])
    seq = [rng.randrange(order) for _ in range(order - 2)]
    return prufer_to_tree(seq, order)
