"""Verification harness: per-instance claim checks, sharpness cells, sweeps.

Checked claims (ids used in verdicts and reports):
  kended-cover     if alpha_G(S) <= k + kappa_G(S) - 1 then some tree with at
                   most k leaves covers S
  branch-cover     same hypothesis, conclusion: a covering tree with at most
                   k - 2 branch vertices exists
  residual-bound   unconditional: either a k-ended covering tree exists or
                   the construction yields a k-ended tree whose uncovered
                   part has independence number <= alpha - kappa - k + 1
  hamiltonian-path if alpha(G) <= kappa(G) + 1 then a Hamiltonian path exists

All four are proved statements, so any counterexample verdict is promoted to
a hard CounterexampleError carrying full reproduction data: it means a bug in
this package, not new mathematics.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator

from .constructive import COVERING, ConstructionOutcome, base_path, construct_k_ended_tree
from .errors import CapExceededError, CounterexampleError, InternalInvariantError, PlanError
from .families import (
    DEFAULT_ENUM_CAP,
    GraphFamilySpec,
    enumerate_connected_labeled_graphs,
    make_family,
    random_gnp,
)
from .formats import emit_graph6, parse_graph6
from .graphs import Graph, Path, Tree, VertexSet, iter_bits
from .invariants import ConnectivityValue, alpha_mask, hypothesis_holds, local_connectivity
from .treesearch import (
    DEFAULT_TREE_CAP,
    covering_tree_with_branch_budget,
    find_k_ended_covering_tree,
    hamiltonian_path_exists,
)

CLAIMS = ("kended-cover", "branch-cover", "residual-bound", "hamiltonian-path")

S_POLICIES = ("all-subsets", "random-subsets", "s=v")
ALL_SUBSETS_MAX_N = 6


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one claim check on one instance.

    hypothesis_holds always records alpha <= k + kappa - 1 (true for infinite
    kappa); for the unconditional residual-bound claim a counterexample is any
    false conclusion, for the others it is hypothesis true with conclusion
    false.
    """

    claim: str
    graph_id: str
    subset: tuple[int, ...]
    k: int
    alpha: int
    kappa: ConnectivityValue
    hypothesis_holds: bool
    conclusion_holds: bool
    witness: Tree | None
    elapsed: float
    detail: dict | None = None

    @property
    def is_counterexample(self) -> bool:
        if self.claim == "residual-bound":
            return not self.conclusion_holds
        return self.hypothesis_holds and not self.conclusion_holds


@dataclass(frozen=True)
class SharpnessVerdict:
    """Exact invariants of one complete-bipartite cell (parts m and m+k, S = larger part)."""

    m: int
    k: int
    alpha: int
    kappa: int
    min_leaves: int
    min_branch: int
    matches_expected: bool


SHARPNESS_NOTE = (
    "min_leaves and min_branch are exact minima over all covering trees, "
    "computed by exhaustive search; expected values are alpha = m+k, "
    "kappa = m, min_leaves = k+1, min_branch = k-1"
)


class GraphContext:
    """Per-graph caches shared across subsets, budgets and claims.

    Everything cached here is a pure function of the graph, so contexts can be
    used by one worker without coordination.
    """

    def __init__(self, graph: Graph, cap: int = DEFAULT_TREE_CAP) -> None:
        self.graph = graph
        self.cap = cap
        self.graph_id = emit_graph6(graph)
        self._alpha: dict[int, int] = {}
        self._pair: dict[tuple[int, int], int] = {}
        self._cover: dict[tuple[int, int], Tree | None] = {}
        self._branch: dict[tuple[int, int], Tree | None] = {}
        self._base: dict[int, tuple[Path, str]] = {}
        self._construct: dict[tuple[int, int], ConstructionOutcome] = {}

    def alpha(self, smask: int) -> int:
        if smask not in self._alpha:
            self._alpha[smask] = alpha_mask(self.graph, smask)[0]
        return self._alpha[smask]

    def kappa(self, smask: int) -> ConnectivityValue:
        vertices = list(iter_bits(smask))
        if len(vertices) <= 1:
            return ConnectivityValue.INFINITE
        best: int | None = None
        for i in range(len(vertices)):
            for j in range(i + 1, len(vertices)):
                pair = (vertices[i], vertices[j])
                if pair not in self._pair:
                    self._pair[pair] = local_connectivity(self.graph, *pair)
                value = self._pair[pair]
                if best is None or value < best:
                    best = value
                    if best == 0:
                        return ConnectivityValue(0)
        assert best is not None
        return ConnectivityValue(best)

    def cover_tree(self, smask: int, k: int) -> Tree | None:
        key = (smask, k)
        if key not in self._cover:
            prev = self._cover.get((smask, k - 1))
            if prev is not None:
                self._cover[key] = prev
            else:
                self._cover[key] = find_k_ended_covering_tree(
                    self.graph, VertexSet(self.graph.n, smask), k, cap=self.cap
                )
        return self._cover[key]

    def branch_tree(self, smask: int, budget: int) -> Tree | None:
        key = (smask, budget)
        if key not in self._branch:
            prev = self._branch.get((smask, budget - 1))
            if prev is not None:
                self._branch[key] = prev
            else:
                self._branch[key] = covering_tree_with_branch_budget(
                    self.graph, VertexSet(self.graph.n, smask), budget, cap=self.cap
                )
        return self._branch[key]

    def construct(self, smask: int, k: int) -> ConstructionOutcome:
        key = (smask, k)
        if key not in self._construct:
            subset = VertexSet(self.graph.n, smask)
            base = None
            if smask.bit_count() >= 2:
                if smask not in self._base:
                    self._base[smask] = base_path(self.graph, subset, cap=self.cap)
                base = self._base[smask]
            self._construct[key] = construct_k_ended_tree(
                self.graph, subset, k, cap=self.cap, base=base
            )
        return self._construct[key]


def _subset_tuple(smask: int) -> tuple[int, ...]:
    return tuple(iter_bits(smask))


def _audit_cover_witness(ctx: GraphContext, tree: Tree, smask: int, leaf_budget: int | None,
                         branch_budget: int | None) -> None:
    tree.validate_in(ctx.graph)
    if smask & ~tree.vertex_mask:
        raise InternalInvariantError("witness tree does not cover the subset")
    if leaf_budget is not None and tree.leaf_count > leaf_budget:
        raise InternalInvariantError("witness tree exceeds the leaf budget")
    if branch_budget is not None and tree.branch_count > branch_budget:
        raise InternalInvariantError("witness tree exceeds the branch budget")
    if len(tree.vertices) >= 2 and tree.branch_count > tree.leaf_count - 2:
        raise InternalInvariantError("witness tree violates leaves >= branch vertices + 2")


def _verdict_cover(ctx: GraphContext, smask: int, k: int) -> TheoremVerdict:
    start = time.perf_counter()
    alpha = ctx.alpha(smask)
    kappa = ctx.kappa(smask)
    hyp = hypothesis_holds(alpha, k, kappa)
    witness = ctx.cover_tree(smask, k)
    if witness is not None:
        _audit_cover_witness(ctx, witness, smask, k, None)
    outcome = ctx.construct(smask, k)
    constructive_covering = outcome.kind == COVERING
    if hyp and not constructive_covering:
        raise InternalInvariantError("construction must cover when the hypothesis holds")
    if constructive_covering and witness is None:
        raise InternalInvariantError("construction covered but the exhaustive oracle found nothing")
    return TheoremVerdict(
        claim="kended-cover",
        graph_id=ctx.graph_id,
        subset=_subset_tuple(smask),
        k=k,
        alpha=alpha,
        kappa=kappa,
        hypothesis_holds=hyp,
        conclusion_holds=witness is not None,
        witness=witness,
        elapsed=time.perf_counter() - start,
        detail={"constructive_covering": constructive_covering},
    )


def _verdict_branch(ctx: GraphContext, smask: int, k: int) -> TheoremVerdict:
    start = time.perf_counter()
    alpha = ctx.alpha(smask)
    kappa = ctx.kappa(smask)
    hyp = hypothesis_holds(alpha, k, kappa)
    witness = ctx.branch_tree(smask, k - 2)
    if witness is not None:
        _audit_cover_witness(ctx, witness, smask, None, k - 2)
    return TheoremVerdict(
        claim="branch-cover",
        graph_id=ctx.graph_id,
        subset=_subset_tuple(smask),
        k=k,
        alpha=alpha,
        kappa=kappa,
        hypothesis_holds=hyp,
        conclusion_holds=witness is not None,
        witness=witness,
        elapsed=time.perf_counter() - start,
    )


def _verdict_residual(ctx: GraphContext, smask: int, k: int) -> TheoremVerdict:
    start = time.perf_counter()
    alpha = ctx.alpha(smask)
    kappa = ctx.kappa(smask)
    hyp = hypothesis_holds(alpha, k, kappa)
    cover = ctx.cover_tree(smask, k)
    if cover is not None:
        detail: dict = {"covering": True}
        witness: Tree | None = cover
        conclusion = True
    else:
        outcome = ctx.construct(smask, k)
        if outcome.kind == COVERING:
            raise InternalInvariantError(
                "construction covered but the exhaustive oracle says no k-ended covering tree exists"
            )
        assert not kappa.is_infinite    # infinite kappa always yields a covering
        bound = alpha - kappa.finite - k + 1
        residual = alpha_mask(ctx.graph, smask & ~outcome.tree.vertex_mask)[0]
        outcome.tree.validate_in(ctx.graph)
        conclusion = residual <= bound and outcome.tree.leaf_count <= k
        witness = outcome.tree
        detail = {"covering": False, "residual_alpha": residual, "bound": bound}
    return TheoremVerdict(
        claim="residual-bound",
        graph_id=ctx.graph_id,
        subset=_subset_tuple(smask),
        k=k,
        alpha=alpha,
        kappa=kappa,
        hypothesis_holds=hyp,
        conclusion_holds=conclusion,
        witness=witness,
        elapsed=time.perf_counter() - start,
        detail=detail,
    )


def _verdict_hamiltonian(ctx: GraphContext) -> TheoremVerdict:
    start = time.perf_counter()
    full = ctx.graph.full_mask
    alpha = ctx.alpha(full)
    kappa = ctx.kappa(full)
    hyp = hypothesis_holds(alpha, 2, kappa)    # alpha <= kappa + 1
    ham = hamiltonian_path_exists(ctx.graph, cap=ctx.cap)
    oracle = ctx.cover_tree(full, 2)
    if (ham is None) != (oracle is None):
        raise InternalInvariantError(
            "backtracking Hamiltonian search disagrees with the covering-path oracle"
        )
    witness = Tree.from_path(ctx.graph.n, ham.vertices) if ham is not None else None
    return TheoremVerdict(
        claim="hamiltonian-path",
        graph_id=ctx.graph_id,
        subset=_subset_tuple(full),
        k=2,
        alpha=alpha,
        kappa=kappa,
        hypothesis_holds=hyp,
        conclusion_holds=ham is not None,
        witness=witness,
        elapsed=time.perf_counter() - start,
    )


def _require_connected(graph: Graph) -> None:
    if graph.n == 0 or not graph.is_connected():
        raise ValueError("verification requires a nonempty connected graph")


def _checked_mask(graph: Graph, subset: VertexSet) -> int:
    if subset.host_n != graph.n:
        raise ValueError("subset indexes a different host graph")
    return subset.mask


def verify_kended_cover(graph: Graph, subset: VertexSet, k: int,
                        cap: int = DEFAULT_TREE_CAP) -> TheoremVerdict:
    """Check the k-ended covering claim on one instance (connected graph, k >= 2)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    _require_connected(graph)
    return _verdict_cover(GraphContext(graph, cap), _checked_mask(graph, subset), k)


def verify_branch_cover(graph: Graph, subset: VertexSet, k: int,
                        cap: int = DEFAULT_TREE_CAP) -> TheoremVerdict:
    """Check the branch-vertex covering claim on one instance."""
    if k < 2:
        raise ValueError("k must be at least 2")
    _require_connected(graph)
    return _verdict_branch(GraphContext(graph, cap), _checked_mask(graph, subset), k)


def verify_residual_bound(graph: Graph, subset: VertexSet, k: int,
                          cap: int = DEFAULT_TREE_CAP) -> TheoremVerdict:
    """Check the unconditional cover-or-residual-bound claim on one instance."""
    if k < 2:
        raise ValueError("k must be at least 2")
    _require_connected(graph)
    return _verdict_residual(GraphContext(graph, cap), _checked_mask(graph, subset), k)


def verify_hamiltonian_path_condition(graph: Graph, cap: int = DEFAULT_TREE_CAP) -> TheoremVerdict:
    """Check the classical alpha <= kappa + 1 Hamiltonian path condition."""
    _require_connected(graph)
    return _verdict_hamiltonian(GraphContext(graph, cap))


def verify_sharpness(m: int, k: int, cap: int = DEFAULT_TREE_CAP) -> SharpnessVerdict:
    """Exact invariants of the complete-bipartite cell with parts m and m+k, S = larger part."""
    if m < 1 or k < 1:
        raise ValueError("sharpness cells need m >= 1 and k >= 1")
    n = 2 * m + k
    if n > cap:
        raise CapExceededError(f"cell (m={m}, k={k}) needs n={n}, above the cap {cap}")
    graph, subset = make_family(GraphFamilySpec("complete-bipartite", (m, k)))
    assert subset is not None
    ctx = GraphContext(graph, cap)
    alpha = ctx.alpha(subset.mask)
    kappa = ctx.kappa(subset.mask)
    assert not kappa.is_infinite
    from .treesearch import min_branch_covering_tree, minimum_leaf_covering_tree

    min_leaves, leaf_tree = minimum_leaf_covering_tree(graph, subset, cap=cap)
    min_branch, branch_tree = min_branch_covering_tree(graph, subset, cap=cap)
    leaf_tree.validate_in(graph)
    branch_tree.validate_in(graph)
    matches = (
        alpha == m + k
        and kappa.finite == m
        and min_leaves == k + 1
        and min_branch == k - 1
    )
    return SharpnessVerdict(m, k, alpha, kappa.finite, min_leaves, min_branch, matches)


# ---------------------------------------------------------------------------
# Sweeps


@dataclass(frozen=True)
class SweepPlan:
    """One harness run: an instance source, a k-range, and a subset policy."""

    mode: str = "exhaustive"       # exhaustive | random | graph6
    n: int = 5
    p: float = 0.5
    count: int = 100
    seed: int = 0
    k_min: int = 2
    k_max: int = 4
    s_policy: str = "all-subsets"  # all-subsets | random-subsets | s=v
    s_count: int = 1
    path: str | None = None
    workers: int = 1


def validate_plan(plan: SweepPlan) -> None:
    if plan.mode not in ("exhaustive", "random", "graph6"):
        raise PlanError(f"unknown mode {plan.mode!r}")
    if plan.s_policy not in S_POLICIES:
        raise PlanError(f"unknown s_policy {plan.s_policy!r}; expected one of {S_POLICIES}")
    if plan.k_min < 2:
        raise PlanError("k_min must be at least 2")
    if plan.k_max < plan.k_min:
        raise PlanError("k_max must be >= k_min")
    if plan.mode == "exhaustive":
        if not 1 <= plan.n <= DEFAULT_ENUM_CAP:
            raise PlanError(f"exhaustive mode needs 1 <= n <= {DEFAULT_ENUM_CAP}")
    if plan.mode == "random":
        if plan.n < 1:
            raise PlanError("random mode needs n >= 1")
        if not 0.0 <= plan.p <= 1.0:
            raise PlanError("edge probability must lie in [0, 1]")
        if plan.count < 0:
            raise PlanError("count must be non-negative")
        if plan.s_policy == "random-subsets" and plan.s_count < 1:
            raise PlanError("s_count must be at least 1")
    if plan.mode == "graph6" and not plan.path:
        raise PlanError("graph6 mode needs path = <file>")
    if plan.s_policy == "all-subsets":
        if plan.mode == "random" and plan.n > ALL_SUBSETS_MAX_N:
            raise PlanError(f"all-subsets policy is restricted to n <= {ALL_SUBSETS_MAX_N}")
    if plan.workers < 1:
        raise PlanError("workers must be at least 1")


_PLAN_KEYS = {
    "mode": str,
    "n": int,
    "p": float,
    "count": int,
    "seed": int,
    "k_min": int,
    "k_max": int,
    "s_policy": str,
    "s_count": int,
    "path": str,
    "workers": int,
}


def parse_sweep_plan(text: str) -> SweepPlan:
    """Parse a key = value plan file; '#' starts a comment."""
    values: dict = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise PlanError(f"line {no}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _PLAN_KEYS:
            raise PlanError(f"line {no}: unknown key {key!r}")
        if key in values:
            raise PlanError(f"line {no}: duplicate key {key!r}")
        try:
            values[key] = _PLAN_KEYS[key](value)
        except ValueError as exc:
            raise PlanError(f"line {no}: bad value for {key!r}: {value!r}") from exc
    plan = SweepPlan(**values)
    validate_plan(plan)
    return plan


def default_sweep_plan() -> SweepPlan:
    """Exhaustive n <= 5, all nonempty subsets, k in 2..4."""
    return SweepPlan()


def _subset_masks(plan: SweepPlan, n: int, rng: random.Random) -> list[int]:
    full = (1 << n) - 1
    if full == 0:
        return []
    if plan.s_policy == "all-subsets":
        if n > ALL_SUBSETS_MAX_N:
            raise PlanError(f"all-subsets policy is restricted to n <= {ALL_SUBSETS_MAX_N}")
        return list(range(1, full + 1))
    if plan.s_policy == "s=v":
        return [full]
    return [rng.randrange(1, full + 1) for _ in range(plan.s_count)]


def _plan_instances(plan: SweepPlan) -> Iterator[tuple[Graph | None, list[int]]]:
    """Yield (graph, subset masks) per instance; (None, []) marks a skipped one.

    Subsets are drawn here, in the parent process, so the stream is identical
    regardless of worker count.
    """
    rng = random.Random(plan.seed)
    if plan.mode == "exhaustive":
        for n in range(1, plan.n + 1):
            for graph in enumerate_connected_labeled_graphs(n, cap=DEFAULT_ENUM_CAP):
                yield graph, _subset_masks(plan, n, rng)
    elif plan.mode == "random":
        for _ in range(plan.count):
            graph = random_gnp(plan.n, plan.p, rng)
            if not graph.is_connected() or graph.n == 0:
                yield None, []
                continue
            yield graph, _subset_masks(plan, plan.n, rng)
    else:
        assert plan.path is not None
        with open(plan.path, "r", encoding="ascii") as handle:
            records = [line.strip() for line in handle if line.strip()]
        for record in records:
            graph = parse_graph6(record)
            if graph.n == 0 or not graph.is_connected():
                yield None, []
                continue
            yield graph, _subset_masks(plan, graph.n, rng)


def _graph_verdicts(graph: Graph, subset_masks: list[int], ks: tuple[int, ...],
                    cap: int) -> list[TheoremVerdict]:
    ctx = GraphContext(graph, cap)
    verdicts = []
    for smask in subset_masks:
        for k in ks:
            verdicts.append(_verdict_cover(ctx, smask, k))
            verdicts.append(_verdict_branch(ctx, smask, k))
            verdicts.append(_verdict_residual(ctx, smask, k))
    verdicts.append(_verdict_hamiltonian(ctx))
    return verdicts


def _graph_task(args: tuple[Graph, list[int], tuple[int, ...], int]) -> list[TheoremVerdict]:
    graph, subset_masks, ks, cap = args
    verdicts = _graph_verdicts(graph, subset_masks, ks, cap)
    for verdict in verdicts:
        if verdict.is_counterexample:
            raise CounterexampleError(verdict)
    return verdicts


def _sweep_events(plan: SweepPlan, cap: int) -> Iterator[tuple[str, TheoremVerdict | None]]:
    validate_plan(plan)
    ks = tuple(range(plan.k_min, plan.k_max + 1))
    if plan.workers > 1:
        live = []
        skipped_prefix: list[int] = []
        skips = 0
        for graph, masks in _plan_instances(plan):
            if graph is None:
                skips += 1
                continue
            skipped_prefix.append(skips)
            skips = 0
            live.append((graph, masks, ks, cap))
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            for idx, verdicts in enumerate(pool.map(_graph_task, live, chunksize=4)):
                for _ in range(skipped_prefix[idx]):
                    yield "skipped", None
                for verdict in verdicts:
                    yield "verdict", verdict
        for _ in range(skips):
            yield "skipped", None
        return
    for graph, masks in _plan_instances(plan):
        if graph is None:
            yield "skipped", None
            continue
        for verdict in _graph_verdicts(graph, masks, ks, cap):
            if verdict.is_counterexample:
                raise CounterexampleError(verdict)
            yield "verdict", verdict


def sweep_verdicts(plan: SweepPlan, cap: int = DEFAULT_TREE_CAP) -> Iterator[TheoremVerdict]:
    """Deterministic stream of verdicts for a plan; aborts on any counterexample."""
    for kind, verdict in _sweep_events(plan, cap):
        if kind == "verdict":
            assert verdict is not None
            yield verdict


@dataclass
class ClaimTally:
    instances: int = 0
    hypothesis_true: int = 0
    conclusion_true: int = 0


@dataclass
class WorstCase:
    elapsed: float
    graph_id: str
    subset: tuple[int, ...]
    k: int


@dataclass
class SweepReport:
    plan: SweepPlan
    graphs_evaluated: int = 0
    skipped_disconnected: int = 0
    counterexamples: int = 0
    claims: dict[str, ClaimTally] = field(default_factory=dict)
    worst: dict[str, WorstCase] = field(default_factory=dict)

    @property
    def total_instances(self) -> int:
        return sum(t.instances for t in self.claims.values())


def run_sweep(plan: SweepPlan, cap: int = DEFAULT_TREE_CAP) -> SweepReport:
    """Run a plan to completion and aggregate; raises CounterexampleError on failure."""
    report = SweepReport(plan=plan)
    for claim in CLAIMS:
        report.claims[claim] = ClaimTally()
    for kind, verdict in _sweep_events(plan, cap):
        if kind == "skipped":
            report.skipped_disconnected += 1
            continue
        assert verdict is not None
        tally = report.claims[verdict.claim]
        tally.instances += 1
        tally.hypothesis_true += verdict.hypothesis_holds
        tally.conclusion_true += verdict.conclusion_holds
        if verdict.claim == "hamiltonian-path":
            report.graphs_evaluated += 1
        worst = report.worst.get(verdict.claim)
        if worst is None or verdict.elapsed > worst.elapsed:
            report.worst[verdict.claim] = WorstCase(
                verdict.elapsed, verdict.graph_id, verdict.subset, verdict.k
            )
    return report


def plan_with_seed(plan: SweepPlan, seed: int | None) -> SweepPlan:
    return plan if seed is None else replace(plan, seed=seed)
