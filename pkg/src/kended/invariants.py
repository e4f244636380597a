"""Exact subset invariants: independence numbers and local/set connectivity.

All operations are pure functions of immutable inputs. Independence numbers
use branch-and-bound over bitmask candidate sets; connectivity uses unit-
capacity max flow on the vertex-split digraph, so values are exact Menger
counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CapExceededError
from .graphs import Graph, VertexSet, iter_bits

DEFAULT_ENUMERATION_CAP = 10**6


class ConnectivityValue:
    """A non-negative integer, or the distinguished infinite value used when |S| <= 1.

    Infinite compares greater than every integer and is never a sentinel
    number; serialization uses the JSON string "infinity".
    """

    __slots__ = ("finite",)

    INFINITE: "ConnectivityValue"

    def __init__(self, finite: int | None) -> None:
        if finite is not None:
            if finite < 0:
                raise ValueError("connectivity cannot be negative")
            finite = int(finite)
        self.finite = finite

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    def _key(self) -> float:
        return float("inf") if self.finite is None else float(self.finite)

    @staticmethod
    def _other_key(other: object) -> float | None:
        if isinstance(other, ConnectivityValue):
            return other._key()
        if isinstance(other, int):
            return float(other)
        return None

    def __eq__(self, other: object) -> bool:
        key = self._other_key(other)
        return NotImplemented if key is None else self._key() == key

    def __lt__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() < key

    def __le__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() <= key

    def __gt__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() > key

    def __ge__(self, other: object) -> bool:
        key = self._other_key(other)
        if key is None:
            return NotImplemented
        return self._key() >= key

    def __hash__(self) -> int:
        return hash(self._key())

    def to_json(self) -> int | str:
        return "infinity" if self.finite is None else self.finite

    def __repr__(self) -> str:
        return "ConnectivityValue(infinite)" if self.finite is None else f"ConnectivityValue({self.finite})"

    def __str__(self) -> str:
        return "infinity" if self.finite is None else str(self.finite)


ConnectivityValue.INFINITE = ConnectivityValue(None)


@dataclass(frozen=True)
class IndependenceWitness:
    """Exact independence number of S in G together with one maximum witness set."""

    size: int
    witness: VertexSet


def hypothesis_holds(alpha: int, k: int, kappa: ConnectivityValue) -> bool:
    """Whether alpha <= k + kappa - 1; an infinite kappa satisfies it automatically."""
    if kappa.is_infinite:
        return True
    return alpha <= k + kappa.finite - 1


def _check_subset(graph: Graph, subset: VertexSet) -> int:
    if subset.host_n != graph.n:
        raise ValueError(f"subset indexes {subset.host_n} vertices but graph has {graph.n}")
    return subset.mask


def alpha_mask(graph: Graph, smask: int) -> tuple[int, int]:
    """Exact maximum independent subset of the vertices in smask: (size, witness mask).

    Branch and bound: pick the candidate vertex with the most candidate
    neighbors, branch on include/exclude, bound by the remaining candidate
    count. Deterministic (include-first, lowest-index tie break).
    """
    rows = graph.rows
    closed = [rows[v] | (1 << v) for v in range(graph.n)]
    best_size = 0
    best_mask = 0

    def grow(cand: int, size: int, chosen: int) -> None:
        nonlocal best_size, best_mask
        if size + cand.bit_count() <= best_size:
            return
        pivot = -1
        pivot_deg = -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (rows[v] & cand).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
            m ^= low
        if pivot_deg <= 0:
            # remaining candidates are pairwise non-adjacent; take them all
            best_size = size + cand.bit_count()
            best_mask = chosen | cand
            return
        grow(cand & ~closed[pivot], size + 1, chosen | (1 << pivot))
        grow(cand & ~(1 << pivot), size, chosen)

    grow(smask, 0, 0)
    return best_size, best_mask


def independence_number(graph: Graph, subset: VertexSet) -> IndependenceWitness:
    """Maximum cardinality of an independent-in-G subset of S, with a witness."""
    smask = _check_subset(graph, subset)
    size, witness = alpha_mask(graph, smask)
    return IndependenceWitness(size, VertexSet(graph.n, witness))


def maximum_independent_masks(graph: Graph, smask: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    """All maximum independent subsets of smask, as masks sorted ascending.

    Raises CapExceededError past `cap` rather than truncating, because callers
    rely on the list being complete.
    """
    alpha, _ = alpha_mask(graph, smask)
    if alpha == 0:
        return [0]
    rows = graph.rows
    closed = [rows[v] | (1 << v) for v in range(graph.n)]
    out: list[int] = []

    def rec(cand: int, chosen: int, size: int) -> None:
        if size == alpha:
            out.append(chosen)
            if len(out) > cap:
                raise CapExceededError(f"more than {cap} maximum independent subsets")
            return
        if size + cand.bit_count() < alpha:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~closed[v], chosen | low, size + 1)
        rec(cand ^ low, chosen, size)

    rec(smask, 0, 0)
    out.sort()
    return out


def enumerate_maximum_independent_subsets(
    graph: Graph, subset: VertexSet, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[VertexSet]:
    """The complete, deterministically ordered list of maximum independent subsets of S."""
    smask = _check_subset(graph, subset)
    return [VertexSet(graph.n, m) for m in maximum_independent_masks(graph, smask, cap)]


def local_connectivity(graph: Graph, x: int, y: int) -> int:
    """Maximum number of internally disjoint x-y paths (exact, via unit-capacity flow).

    Every vertex other than x and y is split into an in/out node joined by a
    unit arc; each edge becomes a unit arc in both directions. A direct x-y
    edge counts as one path.
    """
    n = graph.n
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError("endpoint out of range")
    if x == y:
        raise ValueError("local connectivity needs two distinct vertices")

    capacity: dict[int, dict[int, int]] = {}

    def add_arc(a: int, b: int) -> None:
        capacity.setdefault(a, {})[b] = 1
        capacity.setdefault(b, {}).setdefault(a, 0)

    for v in range(n):
        if v != x and v != y:
            add_arc(2 * v, 2 * v + 1)
    for u, v in graph.edges():
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)

    source = 2 * x + 1
    sink = 2 * y
    flow = 0
    while True:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, cap in capacity.get(a, {}).items():
                if cap > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            capacity[a][b] -= 1
            capacity[b][a] += 1
            b = a
        flow += 1


def set_connectivity_pair(
    graph: Graph, subset: VertexSet
) -> tuple[ConnectivityValue, tuple[int, int] | None]:
    """Minimum local connectivity over distinct pairs of S, with a minimizing pair.

    Infinite (and no pair) when |S| <= 1; zero when some pair lies in
    different components.
    """
    smask = _check_subset(graph, subset)
    vertices = list(iter_bits(smask))
    if len(vertices) <= 1:
        return ConnectivityValue.INFINITE, None
    best: int | None = None
    best_pair: tuple[int, int] | None = None
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            k = local_connectivity(graph, vertices[i], vertices[j])
            if best is None or k < best:
                best = k
                best_pair = (vertices[i], vertices[j])
                if best == 0:
                    return ConnectivityValue(0), best_pair
    assert best is not None
    return ConnectivityValue(best), best_pair


def set_connectivity(graph: Graph, subset: VertexSet) -> ConnectivityValue:
    return set_connectivity_pair(graph, subset)[0]
