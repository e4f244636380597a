"""Exact covering-tree oracles: k-ended existence, minimum leaves, minimum
branch vertices, and Hamiltonian path search.

The existence searches grow trees one frontier edge at a time and memoize on
a state that fully determines future options: (vertex mask, leaf mask) for
the leaf-budget search, (vertex mask, degree-1 mask, degree-2 mask) for the
branch-budget search. Both budgets are monotone along growth, so pruning a
state over budget is sound, and any covering tree can be pruned down to one
whose every leaf lies in S without raising either budget, so the searches
restrict acceptance to such trees without losing completeness.

Two-leaf queries (covering paths) use a Held-Karp style DP over (vertex
mask, endpoint) instead; hamiltonian_path_exists is an independent plain
backtracking search so the two routes can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, InternalInvariantError
from .graphs import Graph, Path, Tree, VertexSet

DEFAULT_TREE_CAP = 10

QUERY_MODES = ("existence", "minimize-leaves", "minimize-branch-vertices")


@dataclass(frozen=True)
class CoveringTreeQuery:
    """One covering-tree question: the subset, the leaf budget, and the mode."""

    subset: VertexSet
    k: int
    mode: str    # one of QUERY_MODES

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("leaf budget k must be at least 2")
        if self.mode not in QUERY_MODES:
            raise ValueError(f"mode must be one of {QUERY_MODES}")


def run_covering_tree_query(graph: Graph, query: CoveringTreeQuery, cap: int = DEFAULT_TREE_CAP):
    if query.mode == "existence":
        return find_k_ended_covering_tree(graph, query.subset, query.k, cap=cap)
    if query.mode == "minimize-leaves":
        return minimum_leaf_covering_tree(graph, query.subset, cap=cap)
    return min_branch_covering_tree(graph, query.subset, cap=cap)


def _check_cap(graph: Graph, cap: int) -> None:
    if graph.n > cap:
        raise CapExceededError(f"instance has n={graph.n}, above the cap {cap}")


def _check_subset(graph: Graph, subset: VertexSet) -> int:
    if subset.host_n != graph.n:
        raise ValueError("subset indexes a different host graph")
    return subset.mask


def _covering_path_mask(graph: Graph, smask: int) -> list[int] | None:
    """A path whose vertex set covers smask, or None; deterministic first hit.

    DP over (vertex mask, endpoint); masks are processed in ascending numeric
    order, which makes the returned witness reproducible.
    """
    n = graph.n
    rows = graph.rows
    if n == 0:
        return None
    endpoint = [0] * (1 << n)
    parent: dict[tuple[int, int], int] = {}
    for v in range(n):
        endpoint[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        eps = endpoint[mask]
        if not eps:
            continue
        if smask & ~mask == 0:
            v = (eps & -eps).bit_length() - 1
            seq = [v]
            m = mask
            while m != 1 << seq[-1]:
                u = parent[(m, seq[-1])]
                m ^= 1 << seq[-1]
                seq.append(u)
            seq.reverse()
            return seq
        while eps:
            low = eps & -eps
            v = low.bit_length() - 1
            eps ^= low
            cand = rows[v] & ~mask
            while cand:
                lu = cand & -cand
                u = lu.bit_length() - 1
                cand ^= lu
                nm = mask | lu
                if not (endpoint[nm] >> u) & 1:
                    endpoint[nm] |= lu
                    parent[(nm, u)] = v
    return None


def _grow_tree_leaf_budget(graph: Graph, smask: int, k: int, r0: int) -> list[tuple[int, int]] | None:
    """Edges of a tree containing r0 that covers smask with at most k leaves, all in S."""
    n = graph.n
    rows = graph.rows
    seen: set[int] = set()
    edges: list[tuple[int, int]] = []

    def rec(mask: int, leaf: int) -> bool:
        if smask & ~mask == 0 and leaf & ~smask == 0:
            return True
        key = (mask << n) | leaf
        if key in seen:
            return False
        seen.add(key)
        single = mask & (mask - 1) == 0
        m = mask
        while m:
            lw = m & -m
            w = lw.bit_length() - 1
            m ^= lw
            cand = rows[w] & ~mask
            while cand:
                lu = cand & -cand
                u = lu.bit_length() - 1
                cand ^= lu
                if single:
                    new_leaf = mask | lu
                else:
                    new_leaf = (leaf & ~lw) | lu
                if new_leaf.bit_count() > k:
                    continue
                new_mask = mask | lu
                # a non-S leaf with no free neighbor can never stop being a leaf
                dead = False
                t = new_leaf & ~smask
                while t:
                    lv = t & -t
                    if rows[lv.bit_length() - 1] & ~new_mask == 0:
                        dead = True
                        break
                    t ^= lv
                if dead:
                    continue
                edges.append((w, u))
                if rec(new_mask, new_leaf):
                    return True
                edges.pop()
        return False

    if rec(1 << r0, 0):
        return list(edges)
    return None


def _grow_tree_branch_budget(graph: Graph, smask: int, budget: int, r0: int) -> list[tuple[int, int]] | None:
    """Edges of a tree containing r0 covering smask with at most `budget` branch vertices."""
    n = graph.n
    rows = graph.rows
    seen: set[int] = set()
    edges: list[tuple[int, int]] = []

    def rec(mask: int, deg1: int, deg2: int, branch_count: int) -> bool:
        if smask & ~mask == 0 and deg1 & ~smask == 0 and mask & (mask - 1):
            return True
        key = ((mask << n) | deg1) << n | deg2
        if key in seen:
            return False
        seen.add(key)
        single = mask & (mask - 1) == 0
        m = mask
        while m:
            lw = m & -m
            w = lw.bit_length() - 1
            m ^= lw
            cand = rows[w] & ~mask
            while cand:
                lu = cand & -cand
                u = lu.bit_length() - 1
                cand ^= lu
                if single:
                    new_d1, new_d2, new_bc = mask | lu, 0, 0
                elif deg1 & lw:
                    new_d1, new_d2, new_bc = (deg1 & ~lw) | lu, deg2 | lw, branch_count
                elif deg2 & lw:
                    if branch_count + 1 > budget:
                        continue
                    new_d1, new_d2, new_bc = deg1 | lu, deg2 & ~lw, branch_count + 1
                else:
                    new_d1, new_d2, new_bc = deg1 | lu, deg2, branch_count
                new_mask = mask | lu
                dead = False
                t = new_d1 & ~smask
                while t:
                    lv = t & -t
                    if rows[lv.bit_length() - 1] & ~new_mask == 0:
                        dead = True
                        break
                    t ^= lv
                if dead:
                    continue
                edges.append((w, u))
                if rec(new_mask, new_d1, new_d2, new_bc):
                    return True
                edges.pop()
        return False

    if rec(1 << r0, 1 << r0, 0, 0):
        return list(edges)
    return None


def _tree_from_growth(host_n: int, r0: int, edges: list[tuple[int, int]]) -> Tree:
    vertices = {r0}
    for u, v in edges:
        vertices.add(u)
        vertices.add(v)
    return Tree(host_n, vertices, edges)


def _coverable(graph: Graph, smask: int) -> bool:
    r0 = (smask & -smask).bit_length() - 1
    return graph.component_mask(r0) & smask == smask


def find_k_ended_covering_tree(
    graph: Graph, subset: VertexSet, k: int, cap: int = DEFAULT_TREE_CAP
) -> Tree | None:
    """Some tree with at most k leaves whose vertices cover S, or None.

    The tree need not be spanning. Exhaustive and exact up to the cap.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    _check_cap(graph, cap)
    smask = _check_subset(graph, subset)
    if graph.n == 0:
        return None
    if smask == 0:
        return Tree.single_vertex(graph.n, 0)
    if smask & (smask - 1) == 0:
        return Tree.single_vertex(graph.n, smask.bit_length() - 1)
    if not _coverable(graph, smask):
        return None
    seq = _covering_path_mask(graph, smask)
    if seq is not None:
        return Tree.from_path(graph.n, seq)
    if k == 2:
        return None
    r0 = (smask & -smask).bit_length() - 1
    edges = _grow_tree_leaf_budget(graph, smask, k, r0)
    if edges is None:
        return None
    return _tree_from_growth(graph.n, r0, edges)


def minimum_leaf_covering_tree(
    graph: Graph, subset: VertexSet, cap: int = DEFAULT_TREE_CAP
) -> tuple[int, Tree]:
    """Exact minimum of the leaf count over covering trees, with a witness.

    Runs existence queries for increasing budgets, reusing the one audited
    search core. A one-vertex subset yields (0, one-vertex tree).
    """
    _check_cap(graph, cap)
    smask = _check_subset(graph, subset)
    if smask == 0:
        raise ValueError("minimum over covering trees needs a nonempty subset")
    if smask & (smask - 1) == 0:
        return 0, Tree.single_vertex(graph.n, smask.bit_length() - 1)
    if not _coverable(graph, smask):
        raise ValueError("subset spans more than one component; no covering tree exists")
    seq = _covering_path_mask(graph, smask)
    if seq is not None:
        return 2, Tree.from_path(graph.n, seq)
    r0 = (smask & -smask).bit_length() - 1
    for k in range(3, smask.bit_count() + 1):
        edges = _grow_tree_leaf_budget(graph, smask, k, r0)
        if edges is not None:
            tree = _tree_from_growth(graph.n, r0, edges)
            if tree.leaf_count != k:
                raise InternalInvariantError(
                    f"budget-{k} search returned a {tree.leaf_count}-leaf tree after budget {k - 1} failed"
                )
            return k, tree
    raise InternalInvariantError("no covering tree found although the subset is coverable")


def covering_tree_with_branch_budget(
    graph: Graph, subset: VertexSet, budget: int, cap: int = DEFAULT_TREE_CAP
) -> Tree | None:
    """Some covering tree with at most `budget` branch vertices, or None."""
    if budget < 0:
        raise ValueError("branch budget must be non-negative")
    _check_cap(graph, cap)
    smask = _check_subset(graph, subset)
    if graph.n == 0:
        return None
    if smask == 0:
        return Tree.single_vertex(graph.n, 0)
    if smask & (smask - 1) == 0:
        return Tree.single_vertex(graph.n, smask.bit_length() - 1)
    if not _coverable(graph, smask):
        return None
    seq = _covering_path_mask(graph, smask)
    if seq is not None:
        return Tree.from_path(graph.n, seq)
    if budget == 0:
        return None
    r0 = (smask & -smask).bit_length() - 1
    edges = _grow_tree_branch_budget(graph, smask, budget, r0)
    if edges is None:
        return None
    return _tree_from_growth(graph.n, r0, edges)


def min_branch_covering_tree(
    graph: Graph, subset: VertexSet, cap: int = DEFAULT_TREE_CAP
) -> tuple[int, Tree]:
    """Exact minimum of the branch-vertex count over covering trees, with a witness."""
    _check_cap(graph, cap)
    smask = _check_subset(graph, subset)
    if smask == 0:
        raise ValueError("minimum over covering trees needs a nonempty subset")
    if smask & (smask - 1) == 0:
        return 0, Tree.single_vertex(graph.n, smask.bit_length() - 1)
    if not _coverable(graph, smask):
        raise ValueError("subset spans more than one component; no covering tree exists")
    seq = _covering_path_mask(graph, smask)
    if seq is not None:
        return 0, Tree.from_path(graph.n, seq)
    r0 = (smask & -smask).bit_length() - 1
    for budget in range(1, max(1, smask.bit_count() - 1)):
        edges = _grow_tree_branch_budget(graph, smask, budget, r0)
        if edges is not None:
            tree = _tree_from_growth(graph.n, r0, edges)
            if tree.branch_count != budget:
                raise InternalInvariantError(
                    f"budget-{budget} search returned {tree.branch_count} branch vertices "
                    f"after budget {budget - 1} failed"
                )
            return budget, tree
    raise InternalInvariantError("no covering tree found although the subset is coverable")


def hamiltonian_path_exists(graph: Graph, cap: int = DEFAULT_TREE_CAP) -> Path | None:
    """A Hamiltonian path found by plain backtracking, or None.

    Kept independent of the covering-path DP so the two can be checked
    against each other.
    """
    _check_cap(graph, cap)
    n = graph.n
    if n == 0:
        return None
    if n == 1:
        return Path((0,))
    if not graph.is_connected():
        return None
    rows = graph.rows
    full = (1 << n) - 1
    seq: list[int] = []

    def extend(v: int, visited: int) -> bool:
        seq.append(v)
        if visited == full:
            return True
        cand = rows[v] & ~visited
        while cand:
            low = cand & -cand
            cand ^= low
            if extend(low.bit_length() - 1, visited | low):
                return True
        seq.pop()
        return False

    for start in range(n):
        if extend(start, 1 << start):
            return Path(tuple(seq))
    return None
