"""Pure-Python level-sequence kernels.

A tree is encoded by its preorder depth sequence ("level sequence") with the
root at level 0 and children laid out in non-increasing lexicographic order
of their subsequences.  Canonical rooted sequences are generated in strictly
decreasing lexicographic order by the classic chop-and-replicate successor;
free (unrooted) trees keep exactly one center-rooted representative per
isomorphism class, and invalid blocks are skipped by forcing the successor at
the end of the first root subtree.

The compiled backend mirrors this module function for function, including the
floating-point accumulation order, so both produce bit-identical results.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

BACKEND = "pure"


def iter_rooted_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical rooted trees on n vertices, decreasing lexicographic."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        yield (0,)
        return
    L = list(range(n))
    while True:
        yield tuple(L)
        p = n - 1
        while p > 0 and L[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        d = p - q
        for i in range(p, n):
            L[i] = L[i - d]


def _free_check(L: Sequence[int]) -> tuple[bool, int]:
    """Is this rooted sequence the canonical representative of its free tree?

    Returns (valid, m) where m is the index where the second root subtree
    starts (len(L) if the root has a single subtree).  Valid means the first
    subtree is no taller than the rest of the tree, with size-then-lex
    tie-breaks so exactly one rooting survives per isomorphism class.
    """
    n = len(L)
    m = n
    for i in range(2, n):
        if L[i] == 1:
            m = i
            break
    h_left = 0
    for i in range(1, m):
        v = L[i] - 1
        if v > h_left:
            h_left = v
    h_rest = 0
    for i in range(m, n):
        if L[i] > h_rest:
            h_rest = L[i]
    if h_rest > h_left:
        return True, m
    if h_rest < h_left:
        return False, m
    len_left = m - 1
    len_rest = n - m + 1
    if len_left > len_rest:
        return False, m
    if len_left < len_rest:
        return True, m
    for i in range(1, len_left):
        a = L[1 + i] - 1
        b = L[m + i - 1]
        if a != b:
            return a < b, m
    return True, m


def _successor(L: list[int], p: int | None) -> list[int] | None:
    """Next canonical rooted sequence, optionally forced to change at index p."""
    n = len(L)
    if p is None:
        p = n - 1
        while p > 0 and L[p] == 1:
            p -= 1
    if p <= 0:
        return None
    if L[p] < 2:  # forced position already at level 1: fall back to the natural chop
        return _successor(L, None)
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    d = p - q
    out = list(L)
    for i in range(p, n):
        out[i] = out[i - d]
    return out


def iter_level_sequences(n: int, use_jump: bool = True) -> Iterator[tuple[int, ...]]:
    """One canonical level sequence per free tree on n vertices.

    use_jump=False disables the block-skipping acceleration and filters the
    full rooted stream instead; both modes must yield identical sequences.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        yield (0,)
        return
    if n == 2:
        yield (0, 1)
        return
    L: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while L is not None:
        valid, m = _free_check(L)
        if valid:
            yield tuple(L)
            L = _successor(L, None)
        else:
            L = _successor(L, m - 1 if use_jump else None)


def tree_stats_from_levels(levels: Sequence[int]) -> tuple[float, int]:
    """(Sombor index, independence number) of the encoded tree."""
    n = len(levels)
    parent = [0] * n
    last_at = [0] * (n + 1)
    for i in range(1, n):
        li = levels[i]
        parent[i] = last_at[li - 1]
        last_at[li] = i
    deg = [0] * n
    for i in range(1, n):
        deg[i] += 1
        deg[parent[i]] += 1
    incl = [1] * n
    excl = [0] * n
    for i in range(n - 1, 0, -1):
        p = parent[i]
        ii = incl[i]
        ei = excl[i]
        excl[p] += ii if ii > ei else ei
        incl[p] += ei
    alpha = incl[0] if incl[0] > excl[0] else excl[0]
    so = 0.0
    for i in range(1, n):
        du = deg[i]
        dv = deg[parent[i]]
        so += math.sqrt(du * du + dv * dv)
    return so, alpha


def family_sweep(
    n: int, alpha: int, tol: float = 1e-9
) -> tuple[int, float, float, list[tuple[int, ...]]]:
    """Fold the whole order-n stream, keeping only trees with the given alpha.

    Returns (family_size, best_so, runner_up_so, maximizer_levels): the
    maximum Sombor value, every level sequence within tol of it, and the best
    value strictly below the leading band (-inf if none).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    count = 0
    best = float("-inf")
    runner = float("-inf")
    maximizers: list[tuple[int, ...]] = []
    for levels in iter_level_sequences(n):
        so, a = tree_stats_from_levels(levels)
        if a != alpha:
            continue
        count += 1
        if so > best + tol:
            if best > runner:
                runner = best
            best = so
            maximizers = [levels]
        elif so >= best - tol:
            maximizers.append(levels)
            if so > best:
                best = so
        elif so > runner:
            runner = so
    return count, best, runner, maximizers
