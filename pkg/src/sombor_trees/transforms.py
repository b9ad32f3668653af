"""Checked edge rewirings that raise the Sombor index without changing the
independence number.

Each operation mirrors one of the local moves used to push an arbitrary tree
toward the extremal one: re-homing a batch of neighbors from a donor vertex
to a receiver, swapping the far endpoints of two edges, and the composite
case moves driven by a maximum-distance pair of support vertices in the
pendant-stripped core.  Preconditions are verified structurally; the
SO-increase and alpha-preservation claims are left to the property tests,
which sweep every applicable tree exhaustively at small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError, TreeStructureError
from .extremal import TreeClass, classify
from .tree import Tree, strip_pendants, tree_path

LEMMA1_CASE_TAGS = ("1.1", "1.2", "2", "3")


@dataclass(frozen=True)
class ShiftSpec:
    """Re-home `moved` (current neighbors of donor) onto receiver."""

    donor: int
    receiver: int
    moved: tuple[int, ...]


def shift_neighbors(t: Tree, spec: ShiftSpec) -> Tree:
    """Delete donor~w and add receiver~w for every w in spec.moved.

    Valid whenever the moved subtrees hang off the donor away from the
    receiver; the donor-side edge of the donor-receiver path must stay put.
    """
    donor, receiver = spec.donor, spec.receiver
    moved = tuple(spec.moved)
    t._check_vertex(donor)
    t._check_vertex(receiver)
    for w in moved:
        t._check_vertex(w)
    if donor == receiver:
        raise TreeStructureError("donor and receiver must be distinct")
    if receiver in moved:
        raise TreeStructureError("receiver cannot be one of the moved vertices")
    if len(set(moved)) != len(moved):
        raise TreeStructureError("moved vertices must be distinct")
    donor_nbrs = set(t.adjacency[donor])
    for w in moved:
        if w not in donor_nbrs:
            raise TreeStructureError(f"vertex {w} is not adjacent to donor {donor}")
    if moved:
        toward = tree_path(t, donor, receiver)[1]
        if toward in moved:
            raise TreeStructureError(
                f"moving {toward} would detach the donor from the receiver"
            )
    moved_set = set(moved)
    edges = []
    for u, v in t.edges():
        if u == donor and v in moved_set:
            edges.append((receiver, v))
        elif v == donor and u in moved_set:
            edges.append((receiver, u))
        else:
            edges.append((u, v))
    return Tree.from_edges(t.order, edges)


def swap_endpoints(t: Tree, u: int, x: int, v: int, y: int) -> Tree:
    """Replace edges u~x and v~y by u~y and v~x (degrees are unchanged)."""
    for w in (u, x, v, y):
        t._check_vertex(w)
    if len({u, x, v, y}) != 4:
        raise TreeStructureError("u, x, v, y must be four distinct vertices")
    if x not in t.adjacency[u]:
        raise TreeStructureError(f"{u} and {x} are not adjacent")
    if y not in t.adjacency[v]:
        raise TreeStructureError(f"{v} and {y} are not adjacent")
    dropped = {frozenset((u, x)), frozenset((v, y))}
    edges = [e for e in t.edges() if frozenset(e) not in dropped]
    edges.append((u, y))
    edges.append((v, x))
    try:
        return Tree.from_edges(t.order, edges)
    except TreeStructureError as exc:
        raise TreeStructureError(f"endpoint swap does not preserve tree-ness: {exc}")


def select_support_pair(t: Tree) -> tuple[int, int]:
    """Two support vertices of the pendant-stripped core at maximum distance
    within the core, as original ids; ties broken by the smallest id pair."""
    if t.order < 3:
        raise ValueError("needs a tree of order >= 3")
    core, old_of = strip_pendants(t)
    if core.order < 2:
        raise PreconditionError(
            "stripped tree is a single vertex; no support pair exists"
        )
    supports = sorted(
        {core.adjacency[p][0] for p in range(core.order) if core.degrees[p] == 1}
    )
    if len(supports) < 2:
        raise PreconditionError(
            "stripped tree has fewer than 2 support vertices"
        )
    best: tuple[int, int, int] | None = None  # (-distance, u_old, v_old)
    for i, a in enumerate(supports):
        dist = _bfs_distances(core, a)
        for b in supports[i + 1 :]:
            cand = (-dist[b], old_of[a], old_of[b])
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best[1], best[2]


def _bfs_distances(t: Tree, source: int) -> list[int]:
    dist = [-1] * t.order
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for w in frontier:
            for z in t.adjacency[w]:
                if dist[z] < 0:
                    dist[z] = dist[w] + 1
                    nxt.append(z)
        frontier = nxt
    return dist


@dataclass(frozen=True)
class _CaseConfig:
    """The decomposition around a maximum-distance support pair.

    u/v are the pair (roles already normalized for the detected case), x/y
    their path neighbors toward each other (x == y at distance 2, x == v and
    y == u when the pair is adjacent), a/b their pendant-neighbor counts, and
    the heavy tuples their remaining degree->=2 neighbors off the path.
    """

    u: int
    v: int
    x: int
    y: int
    a: int
    b: int
    u_pendants: tuple[int, ...]
    v_pendants: tuple[int, ...]
    u_heavy: tuple[int, ...]
    v_heavy: tuple[int, ...]
    tag: str


def _case_config(t: Tree) -> _CaseConfig:
    u, v = select_support_pair(t)
    path = tree_path(t, u, v)
    x, y = path[1], path[-2]

    def around(w: int, toward: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        pend = tuple(z for z in t.adjacency[w] if t.degrees[z] == 1)
        heavy = tuple(z for z in t.adjacency[w] if t.degrees[z] >= 2 and z != toward)
        return pend, heavy

    up, uh = around(u, x)
    vp, vh = around(v, y)
    a, b = len(up), len(vp)
    if a > 0 and b > 0:
        if t.degrees[u] < t.degrees[v]:
            u, v, x, y, up, vp, uh, vh, a, b = v, u, y, x, vp, up, vh, uh, b, a
        tag = "1.1" if t.degrees[x] >= t.degrees[y] else "1.2"
    elif a == 0 and b == 0:
        tag = "3"
    else:
        if a > 0:  # the bare side plays the donor role
            u, v, x, y, up, vp, uh, vh, a, b = v, u, y, x, vp, up, vh, uh, b, a
        tag = "2"
    return _CaseConfig(u, v, x, y, a, b, up, vp, uh, vh, tag)


def lemma1_case_tag(t: Tree) -> str:
    """Which case move applies to this tree (classify(t) must be Other)."""
    label = classify(t)
    if label is not TreeClass.OTHER:
        raise PreconditionError(
            f"case moves expect a tree outside the star families; got {label.value}"
        )
    return _case_config(t).tag


def apply_lemma1_case(t: Tree, case_tag: str) -> Tree:
    """Apply the tagged case move around the selected support pair.

    1.1 re-homes all of v's neighbors except y and one pendant onto u;
    1.2 first swaps the path edges u~x / v~y (skipped when the pair is
    adjacent, where the swap degenerates to the identity), then does the same
    re-homing; 2 and 3 re-home the heavy neighbors of the pendant-free donor.
    """
    if case_tag not in LEMMA1_CASE_TAGS:
        raise ValueError(f"unknown case tag {case_tag!r}; expected one of {LEMMA1_CASE_TAGS}")
    label = classify(t)
    if label is not TreeClass.OTHER:
        raise PreconditionError(
            f"case moves expect a tree outside the star families; got {label.value}"
        )
    cfg = _case_config(t)
    if cfg.tag != case_tag:
        raise PreconditionError(
            f"case {case_tag} preconditions not met: the selected pair realizes "
            f"case {cfg.tag} (a={cfg.a}, b={cfg.b}, d(x)={t.degrees[cfg.x]}, "
            f"d(y)={t.degrees[cfg.y]})"
        )
    if cfg.tag == "1.1":
        moved = cfg.v_heavy + cfg.v_pendants[1:]
        return shift_neighbors(t, ShiftSpec(cfg.v, cfg.u, moved))
    if cfg.tag == "1.2":
        work = t
        if len({cfg.u, cfg.x, cfg.v, cfg.y}) == 4:
            work = swap_endpoints(t, cfg.u, cfg.x, cfg.v, cfg.y)
        moved = cfg.v_heavy + cfg.v_pendants[1:]
        return shift_neighbors(work, ShiftSpec(cfg.v, cfg.u, moved))
    # cases 2 and 3: the pendant-free u donates its heavy neighbors to v
    return shift_neighbors(t, ShiftSpec(cfg.u, cfg.v, cfg.u_heavy))


def _core_pendant_counts(t: Tree) -> tuple[Tree, tuple[int, ...], list[int]]:
    core, old_of = strip_pendants(t)
    counts = [
        sum(1 for z in t.adjacency[old] if t.degrees[z] == 1) for old in old_of
    ]
    return core, old_of, counts


def apply_lemma2_step(t: Tree) -> Tree:
    """Empty the first loaded core leaf of a T2 tree onto the bare hub.

    The result lands in T1 with a strictly larger Sombor index.
    """
    label = classify(t)
    if label is not TreeClass.T2:
        raise PreconditionError(f"expected a T2 tree, classify gave {label.value}")
    core, old_of = strip_pendants(t)
    hub = old_of[max(range(core.order), key=lambda v: core.degrees[v])]
    leaf = min(old for old in old_of if old != hub)
    moved = tuple(z for z in t.adjacency[leaf] if t.degrees[z] == 1)
    return shift_neighbors(t, ShiftSpec(leaf, hub, moved))


def apply_theorem_step(t: Tree) -> Optional[Tree]:
    """Move all but one pendant from a loaded core leaf of a T1 tree onto the
    hub.  Returns None when the tree is already the maximizer (TStar); each
    step strictly lowers the surplus pendant count, so iteration terminates.
    """
    label = classify(t)
    if label is TreeClass.TSTAR:
        return None
    if label is not TreeClass.T1:
        raise PreconditionError(f"expected a T1 tree, classify gave {label.value}")
    core, old_of, counts = _core_pendant_counts(t)
    by_old = dict(zip(old_of, counts))
    if core.order == 2:
        # either end could serve as the hub; keep the heavier one
        hub = min(old_of, key=lambda w: (-by_old[w], w))
    else:
        hub = old_of[max(range(core.order), key=lambda v: core.degrees[v])]
    loaded = [w for w in old_of if w != hub and by_old[w] >= 2]
    donor = min(loaded)  # nonempty: the tree is T1 but not TStar
    pendants = sorted(z for z in t.adjacency[donor] if t.degrees[z] == 1)
    return shift_neighbors(t, ShiftSpec(donor, hub, tuple(pendants[1:])))
