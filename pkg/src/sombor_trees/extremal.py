"""The extremal machinery: the maximizing tree, its closed-form value, the
structural family classifier, and the scalar inequalities behind the proofs.

Family vocabulary (fixed by the CLI output format):

* Star  - the star S_n, the whole family when alpha = n-1.
* T1    - a star core where every core vertex carries at least one pendant.
* T2    - a star core whose hub carries no pendant but every other core
          vertex does (only defined when alpha != n/2).
* TStar - the T1 member with exactly one pendant per non-hub core vertex;
          this is the unique Sombor maximizer.
* Other - everything else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import InfeasibleParamsError
from .tree import Tree, canonical_code, strip_pendants


class TreeClass(Enum):
    STAR = "Star"
    TSTAR = "TStar"
    T1 = "T1"
    T2 = "T2"
    OTHER = "Other"


def feasible_alpha_range(order: int) -> range:
    """ceil(n/2) .. n-1 inclusive; empty for order < 2."""
    return range((order + 1) // 2, order)


@dataclass(frozen=True)
class ExtremalParams:
    """A feasible (order, alpha) pair; construction validates the range."""

    order: int
    alpha: int

    def __post_init__(self):
        rng = feasible_alpha_range(self.order)
        if self.order < 2 or self.alpha not in rng:
            lo = (self.order + 1) // 2
            hi = self.order - 1
            raise InfeasibleParamsError(
                f"alpha must be in [{lo}, {hi}] for order {self.order}, "
                f"got alpha={self.alpha}"
            )


def construct_t_star(order: int, alpha: int) -> Tree:
    """Build the maximizer: a star on order-alpha vertices, one pendant hung
    on each non-hub vertex, and the remaining 2*alpha-(order-1) pendants on
    the hub.

    Vertex numbering is fixed: hub 0; core leaves 1..order-alpha-1; their
    pendants next, in the same order; hub pendants last.  At alpha = order-1
    the core degenerates to the hub alone and the result is the star.
    """
    p = ExtremalParams(order, alpha)
    n, a = p.order, p.alpha
    arms = n - a - 1  # non-hub core vertices, each carrying one pendant
    edges = []
    for i in range(1, arms + 1):
        edges.append((0, i))
        edges.append((i, arms + i))
    for j in range(2 * arms + 1, n):
        edges.append((0, j))
    return Tree.from_edges(n, edges)


def closed_form_max(order: int, alpha: int) -> float:
    """The maximum Sombor index over trees of this order and independence
    number: (2a-(n-1))sqrt(a^2+1) + (n-(a+1))(sqrt(a^2+4) + sqrt(5))."""
    p = ExtremalParams(order, alpha)
    n, a = p.order, p.alpha
    return (2 * a - (n - 1)) * math.sqrt(a * a + 1) + (n - (a + 1)) * (
        math.sqrt(a * a + 4) + math.sqrt(5)
    )


def _is_star(t: Tree) -> bool:
    return t.order <= 2 or max(t.degrees) == t.order - 1


def _star_center(t: Tree) -> int:
    """Unique max-degree vertex of a star of order >= 3."""
    return max(range(t.order), key=lambda v: t.degrees[v])


def classify(t: Tree) -> TreeClass:
    """Structural family test: strip pendants and inspect the core.

    A core that is a star with every vertex carrying a pendant is T1 (TStar
    when the non-hub pendant counts are all exactly one); a star core whose
    hub alone is bare is T2.  Anything with a non-star core is Other.
    """
    if t.order <= 2:
        return TreeClass.STAR
    core, old_of = strip_pendants(t)
    if core.order == 1:
        return TreeClass.STAR
    if not _is_star(core):
        return TreeClass.OTHER
    pend_count = [
        sum(1 for u in t.adjacency[old] if t.degrees[u] == 1) for old in old_of
    ]
    if core.order == 2:
        # two-vertex core: either end works as the hub
        if min(pend_count) == 0:
            return TreeClass.OTHER
        return TreeClass.TSTAR if min(pend_count) == 1 else TreeClass.T1
    hub = _star_center(core)
    others = [v for v in range(core.order) if v != hub]
    if any(pend_count[v] == 0 for v in others):
        return TreeClass.OTHER  # impossible for a core leaf; keeps the function total
    if pend_count[hub] >= 1:
        if all(pend_count[v] == 1 for v in others):
            return TreeClass.TSTAR
        return TreeClass.T1
    implied_alpha = t.order - core.order + 1
    if 2 * implied_alpha == t.order:
        return TreeClass.OTHER  # the bare-hub family is only defined away from alpha = n/2
    return TreeClass.T2


def lemma1_f(x: float, c: int, d: int) -> float:
    """sqrt((x+c)^2 + d^2) - sqrt(x^2 + d^2); strictly increasing in x >= 1."""
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive integers")
    return math.sqrt((x + c) ** 2 + d * d) - math.sqrt(x * x + d * d)


def lemma2_g(x: float, c: int, d: int) -> float:
    """sqrt(c^2 + x^2) - sqrt(d^2 + x^2) with c > d; strictly decreasing in x >= 1."""
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive integers")
    if c <= d:
        raise ValueError(f"requires c > d, got c={c}, d={d}")
    return math.sqrt(c * c + x * x) - math.sqrt(d * d + x * x)


def star_shift_inequality(n_minus_alpha: int, k: int) -> bool:
    """(s+k)^2 + 1 >= s^2 + (k+1)^2 for s = n-alpha >= 2, k >= 1 (exact)."""
    s = n_minus_alpha
    return (s + k) ** 2 + 1 >= s * s + (k + 1) ** 2


def theorem_shift_inequality(l: int, k: int) -> bool:
    """(l+k)^2 + 4 >= (l+1)^2 + (k+1)^2 for l, k >= 1 (exact)."""
    return (l + k) ** 2 + 4 >= (l + 1) ** 2 + (k + 1) ** 2


def _pendant_distributions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing compositions of total into exactly `parts` parts >= 1."""
    if parts == 0:
        if total == 0:
            yield ()
        return

    def rec(remaining: int, parts_left: int, cap: int):
        if parts_left == 1:
            if 1 <= remaining <= cap:
                yield (remaining,)
            return
        for first in range(min(cap, remaining - (parts_left - 1)), 0, -1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(total, parts, total)


def _star_with_pendants(core_size: int, hub_count: int, leaf_counts) -> Tree:
    """Star core with `hub_count` pendants on the hub and leaf_counts[i] on
    core leaf i+1.  Numbering mirrors construct_t_star: hub 0, core leaves,
    leaf pendants grouped per leaf, hub pendants last."""
    edges = []
    nxt = core_size
    for i in range(1, core_size):
        edges.append((0, i))
        for _ in range(leaf_counts[i - 1]):
            edges.append((i, nxt))
            nxt += 1
    for _ in range(hub_count):
        edges.append((0, nxt))
        nxt += 1
    return Tree.from_edges(nxt, edges)


def t1_members(order: int, alpha: int) -> Iterator[Tree]:
    """All trees built from the star on order-alpha vertices by hanging at
    least one pendant on every core vertex, alpha pendants in total.  One
    representative per isomorphism class."""
    ExtremalParams(order, alpha)
    s = order - alpha
    if s < 2:
        raise InfeasibleParamsError(
            f"the T1 family needs order - alpha >= 2, got {s}"
        )
    seen = set()
    for hub_count in range(1, alpha - (s - 1) + 1):
        for leaf_counts in _pendant_distributions(alpha - hub_count, s - 1):
            t = _star_with_pendants(s, hub_count, leaf_counts)
            code = canonical_code(t)
            if code not in seen:  # two-vertex cores collide across hub choices
                seen.add(code)
                yield t


def t2_members(order: int, alpha: int) -> Iterator[Tree]:
    """All trees built from the star on order-alpha+1 vertices by hanging
    pendants on every non-hub core vertex only, alpha-1 pendants in total.
    Empty when 2*alpha < order + 1; undefined at alpha = n/2."""
    ExtremalParams(order, alpha)
    if 2 * alpha == order:
        raise InfeasibleParamsError("the T2 family is not defined at alpha = n/2")
    s = order - alpha + 1
    for leaf_counts in _pendant_distributions(alpha - 1, s - 1):
        yield _star_with_pendants(s, 0, leaf_counts)
