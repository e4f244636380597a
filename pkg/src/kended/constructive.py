"""Constructive pipeline: base path, maximal attachment paths, augmentation.

Starting from a base path that either covers S or pushes the independence
number of the uncovered part below alpha - kappa - 1, the loop repeatedly
attaches a maximum-length path that starts inside the union of all maximum
independent subsets of the uncovered part and meets the tree only at its
terminal vertex. Each attachment raises the leaf budget by at most one and
lowers the residual independence number by at least one, so the loop ends
with either a covering tree with at most k leaves or a k-ended tree whose
residual is at most alpha - kappa - k + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceededError, InternalInvariantError
from .graphs import Graph, Path, Tree, VertexSet, iter_bits
from .invariants import (
    alpha_mask,
    hypothesis_holds,
    maximum_independent_masks,
    set_connectivity,
)
from .treesearch import DEFAULT_TREE_CAP

COVERING = "covering"
RESIDUAL_BOUND = "residual-bound"

BASE_COVERS = "covers-s"
BASE_RESIDUAL = "residual-bound"


@dataclass
class AugmentationState:
    """Mutable loop state: current tree, its leaf budget, residual alpha, trace."""

    tree: Tree
    t: int
    residual_alpha: int
    trace: list[Path] = field(default_factory=list)


@dataclass(frozen=True)
class ConstructionOutcome:
    """Result of the construction: a covering tree, or a k-ended tree with a residual bound.

    `bound` is alpha - kappa - k + 1, or None when kappa is infinite (|S| <= 1),
    in which case the outcome is always a trivial covering. The trace replays
    the construction: base path first, then each attached path.
    """

    kind: str    # COVERING or RESIDUAL_BOUND
    tree: Tree
    residual_alpha: int
    bound: int | None
    trace: tuple[Path, ...]


def _check_inputs(graph: Graph, subset: VertexSet, cap: int) -> int:
    if subset.host_n != graph.n:
        raise ValueError("subset indexes a different host graph")
    if graph.n > cap:
        raise CapExceededError(f"instance has n={graph.n}, above the cap {cap}")
    return subset.mask


def _reachable_free_count(graph: Graph, v: int, visited: int) -> int:
    comp = 0
    frontier = graph.rows[v] & ~visited
    while frontier:
        comp |= frontier
        grow = 0
        for u in iter_bits(frontier):
            grow |= graph.rows[u]
        frontier = grow & ~visited & ~comp
    return comp.bit_count()


def _paths_with_length(graph: Graph, length: int):
    """All simple paths with exactly `length` vertices, lexicographic order.

    Each path appears once, in its canonical direction (first < last vertex).
    """
    rows = graph.rows

    def rec(prefix: tuple[int, ...], visited: int):
        if len(prefix) == length:
            if length == 1 or prefix[0] < prefix[-1]:
                yield prefix
            return
        v = prefix[-1]
        if len(prefix) + _reachable_free_count(graph, v, visited) < length:
            return
        cand = rows[v] & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            yield from rec(prefix + (low.bit_length() - 1,), visited | low)

    for s in range(graph.n):
        yield from rec((s,), 1 << s)


def base_path(graph: Graph, subset: VertexSet, cap: int = DEFAULT_TREE_CAP) -> tuple[Path, str]:
    """A path covering S, or one whose uncovered part has alpha <= alpha - kappa - 1.

    Exhaustive search: paths are enumerated in decreasing length and the first
    one meeting either condition is returned. One of the two always exists for
    a connected graph and nonempty S, so exhaustion without success is an
    internal invariant failure, not an input error.
    """
    smask = _check_inputs(graph, subset, cap)
    if smask == 0:
        raise ValueError("base path needs a nonempty subset")
    if not graph.is_connected():
        raise ValueError("base path needs a connected graph")
    if smask & (smask - 1) == 0:
        return Path((smask.bit_length() - 1,)), BASE_COVERS
    alpha, _ = alpha_mask(graph, smask)
    kappa = set_connectivity(graph, subset)
    assert not kappa.is_infinite
    bound = alpha - kappa.finite - 1
    residual_cache: dict[int, int] = {}
    for length in range(graph.n, 0, -1):
        for seq in _paths_with_length(graph, length):
            pmask = 0
            for v in seq:
                pmask |= 1 << v
            remainder = smask & ~pmask
            if remainder == 0:
                return Path(seq), BASE_COVERS
            if bound >= 0:
                if remainder not in residual_cache:
                    residual_cache[remainder] = alpha_mask(graph, remainder)[0]
                if residual_cache[remainder] <= bound:
                    return Path(seq), BASE_RESIDUAL
    raise InternalInvariantError("path search exhausted; this contradicts the base-path guarantee")


def maximal_attachment_path(graph: Graph, tree: Tree, subset: VertexSet) -> tuple[Path, int]:
    """The maximum-length path from the union of maximum independent subsets of
    the uncovered part to the tree, internally disjoint from the tree.

    Ties are broken lexicographically on vertex sequences. The returned path
    is oriented from its start s0 (in the union) to its tree endpoint. The
    postcondition that the path meets every maximum independent subset of
    S - V(tree) is asserted; a failure is a bug detector, not an input error.
    """
    smask = _check_subset_host(graph, subset)
    if tree.host_n != graph.n:
        raise ValueError("tree belongs to a different host graph")
    tmask = tree.vertex_mask
    remainder = smask & ~tmask
    if remainder == 0:
        raise ValueError("subset already covered; nothing to attach")
    if not graph.is_connected():
        raise ValueError("attachment needs a connected graph")
    subsets = maximum_independent_masks(graph, remainder)
    union = 0
    for m in subsets:
        union |= m
    rows = graph.rows
    best: tuple[int, ...] | None = None

    def consider(seq: tuple[int, ...]) -> None:
        nonlocal best
        if best is None or len(seq) > len(best) or (len(seq) == len(best) and seq < best):
            best = seq

    def rec(prefix: tuple[int, ...], visited: int) -> None:
        v = prefix[-1]
        finish = rows[v] & tmask
        while finish:
            low = finish & -finish
            finish ^= low
            consider(prefix + (low.bit_length() - 1,))
        cand = rows[v] & ~tmask & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            rec(prefix + (low.bit_length() - 1,), visited | low)

    for s in iter_bits(union):
        rec((s,), 1 << s)
    if best is None:
        raise InternalInvariantError("no attachment path found in a connected graph")
    pmask = 0
    for v in best:
        pmask |= 1 << v
    for m in subsets:
        if pmask & m == 0:
            raise InternalInvariantError(
                "maximal attachment path misses a maximum independent subset of the remainder"
            )
    return Path(best), best[0]


def _check_subset_host(graph: Graph, subset: VertexSet) -> int:
    if subset.host_n != graph.n:
        raise ValueError("subset indexes a different host graph")
    return subset.mask


def augment(tree: Tree, path: Path) -> Tree:
    """Attach a path that meets the tree exactly at its terminal vertex.

    The result is a valid tree with at most one more leaf than before.
    """
    if len(path) < 2:
        raise ValueError("attachment path needs at least two vertices")
    tmask = tree.vertex_mask
    last = path.end
    if not (tmask >> last) & 1:
        raise ValueError("attachment path must end at a tree vertex")
    if path.mask() & tmask != 1 << last:
        raise ValueError("attachment path touches the tree before its end")
    merged = Tree(
        tree.host_n,
        tree.vertices + path.vertices,
        list(tree.edges) + path.edge_pairs(),
    )
    # a one-vertex tree has zero leaves but any proper extension has two
    if merged.leaf_count > max(2, tree.leaf_count + 1):
        raise InternalInvariantError("augmentation raised the leaf count by more than one")
    return merged


def construct_k_ended_tree(
    graph: Graph,
    subset: VertexSet,
    k: int,
    cap: int = DEFAULT_TREE_CAP,
    base: tuple[Path, str] | None = None,
) -> ConstructionOutcome:
    """Run the full construction for a budget of k leaves.

    `base` optionally reuses a precomputed base_path(graph, subset) result,
    which is independent of k. When alpha <= k + kappa - 1 the outcome is
    always a covering (asserted); otherwise a residual-bound outcome satisfies
    residual <= alpha - kappa - k + 1 (asserted, recomputed from scratch).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    smask = _check_inputs(graph, subset, cap)
    if graph.n == 0:
        raise ValueError("construction needs a nonempty graph")
    if not graph.is_connected():
        raise ValueError("construction needs a connected graph")
    if smask.bit_count() <= 1:
        v = smask.bit_length() - 1 if smask else 0
        tree = Tree.single_vertex(graph.n, v)
        return ConstructionOutcome(COVERING, tree, 0, None, ())
    alpha, _ = alpha_mask(graph, smask)
    kappa = set_connectivity(graph, subset)
    assert not kappa.is_infinite
    bound = alpha - kappa.finite - k + 1
    if base is None:
        base = base_path(graph, subset, cap=cap)
    path0, _ = base
    state = AugmentationState(
        tree=Tree.from_path(graph.n, path0.vertices),
        t=2,
        residual_alpha=alpha_mask(graph, smask & ~path0.mask())[0],
        trace=[path0],
    )
    if state.residual_alpha > 0 and state.residual_alpha > alpha - kappa.finite - 1:
        raise InternalInvariantError("base path violates its residual guarantee")
    while state.residual_alpha > 0 and state.t < k:
        p0, _s0 = maximal_attachment_path(graph, state.tree, subset)
        state.tree = augment(state.tree, p0)
        state.trace.append(p0)
        state.t += 1
        new_residual = alpha_mask(graph, smask & ~state.tree.vertex_mask)[0]
        if new_residual > state.residual_alpha - 1:
            raise InternalInvariantError("augmentation failed to reduce the residual alpha")
        state.residual_alpha = new_residual
        if state.tree.leaf_count > state.t:
            raise InternalInvariantError("tree exceeded its leaf budget")
    state.tree.validate_in(graph)
    if state.residual_alpha == 0:
        if not state.tree.covers(subset):
            raise InternalInvariantError("zero residual but the subset is not covered")
        if state.tree.leaf_count > k:
            raise InternalInvariantError("covering tree exceeded the leaf budget")
        return ConstructionOutcome(COVERING, state.tree, 0, bound, tuple(state.trace))
    if state.residual_alpha > bound:
        raise InternalInvariantError(
            f"residual alpha {state.residual_alpha} exceeds the bound {bound}"
        )
    if hypothesis_holds(alpha, k, kappa):
        raise InternalInvariantError("outcome must be covering when alpha <= k + kappa - 1")
    return ConstructionOutcome(
        RESIDUAL_BOUND, state.tree, state.residual_alpha, bound, tuple(state.trace)
    )
