"""Exact solvers for ordinal shortest path and knapsack problems.

All solvers follow the same pipeline: map each element to its transformed
cost vector, run a standard multi-objective search (label-correcting for
paths, dynamic programming for knapsack), and report the Pareto frontier of
transformed values together with the counting- and ordinal-space images and
representative solutions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ordpareto.core import (
    CategorySpace,
    InvalidCategoryError,
    OrdparetoError,
    counting_vector,
    head_transform,
    ordinal_vector,
    pareto_dominates,
)

OK = "ok"
UNREACHABLE = "unreachable"


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    weights: tuple[Fraction, ...] = ()
    categories: tuple[int, ...] = ()


@dataclass(frozen=True)
class GraphInstance:
    """Directed graph with per-edge categories and optional real weights.

    ``spaces`` holds one :class:`CategorySpace` per ordinal objective;
    ``weights`` on each edge has one nonnegative rational per real objective.
    """

    nodes: int
    edges: tuple[Edge, ...]
    spaces: tuple[CategorySpace, ...]
    source: int
    target: int
    num_real: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "spaces", tuple(self.spaces))
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise OrdparetoError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            for node in (e.tail, e.head):
                if not 1 <= node <= self.nodes:
                    raise OrdparetoError(
                        f"edge {e.id} touches node {node} outside 1..{self.nodes}"
                    )
            if len(e.weights) != self.num_real:
                raise OrdparetoError(
                    f"edge {e.id} has {len(e.weights)} weights, expected {self.num_real}"
                )
            if any(w < 0 for w in e.weights):
                raise OrdparetoError(f"edge {e.id} has a negative weight")
            if len(e.categories) != len(self.spaces):
                raise OrdparetoError(
                    f"edge {e.id} has {len(e.categories)} categories, "
                    f"expected {len(self.spaces)}"
                )
            for cat, space in zip(e.categories, self.spaces):
                if not 1 <= cat <= space.K:
                    raise InvalidCategoryError(
                        f"edge {e.id}: category {cat} outside 1..{space.K}"
                    )
        for node in (self.source, self.target):
            if not 1 <= node <= self.nodes:
                raise OrdparetoError(f"terminal node {node} out of range")

    def edge_by_id(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise OrdparetoError(f"no edge with id {edge_id}")


@dataclass(frozen=True)
class Item:
    id: int
    weight: int
    category: int


@dataclass(frozen=True)
class KnapsackInstance:
    items: tuple[Item, ...]
    capacity: int
    space: CategorySpace

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if self.capacity < 0:
            raise OrdparetoError(f"capacity must be nonnegative: {self.capacity}")
        seen = set()
        for item in self.items:
            if item.id in seen:
                raise OrdparetoError(f"duplicate item id {item.id}")
            seen.add(item.id)
            if item.weight <= 0:
                raise OrdparetoError(
                    f"item {item.id}: consumption must be positive"
                )
            if not 1 <= item.category <= self.space.K:
                raise InvalidCategoryError(
                    f"item {item.id}: category {item.category} outside 1..{self.space.K}"
                )


@dataclass(frozen=True)
class ResultEntry:
    """One non-dominated outcome value with its images and solutions.

    ``value`` lives in the transformed (tail / head / mixed) space.
    ``countings`` holds one counting vector per ordinal objective and
    ``ordinals`` the matching sorted category sequences. ``weights`` holds
    the real objective values (empty for pure ordinal problems).
    ``solutions`` lists element-id tuples; the first one is the
    deterministic representative (smallest id sequence).
    """

    value: tuple
    countings: tuple[tuple[int, ...], ...]
    ordinals: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    solutions: tuple[tuple[int, ...], ...]

    @property
    def representative(self) -> tuple[int, ...]:
        return self.solutions[0]


@dataclass(frozen=True)
class SolveResult:
    status: str
    entries: tuple[ResultEntry, ...] = ()

    def values(self) -> tuple[tuple, ...]:
        return tuple(e.value for e in self.entries)


def _edge_cost_tail(edge: Edge, spaces: Sequence[CategorySpace]) -> tuple:
    """Transformed cost of one edge: real weights followed by the per-
    objective binary tail vectors (ones up to the edge's category)."""
    cost: list = list(edge.weights)
    for cat, space in zip(edge.categories, spaces):
        cost.extend(1 if j <= cat else 0 for j in range(1, space.K + 1))
    return tuple(cost)


def _edge_cost_weighted(edge: Edge, space: CategorySpace) -> tuple:
    """Transformed weighted counting cost: the edge's weight in every tail
    component up to its category, zero beyond."""
    w = edge.weights[0]
    return tuple(w if j <= edge.categories[0] else 0 for j in range(1, space.K + 1))


def _multiobjective_shortest_paths(
    g: GraphInstance, edge_cost, all_efficient: bool
) -> dict[tuple, list[tuple[int, ...]]]:
    """Label-correcting search over simple s-t paths.

    Returns a map from non-dominated cost vector at the target to the list
    of edge-id paths attaining it (one path unless ``all_efficient``).
    Labels carry their node sequence, so cyclic extensions are never
    generated; dominated labels are pruned at every node.
    """
    outgoing: dict[int, list[Edge]] = {}
    for e in g.edges:
        outgoing.setdefault(e.tail, []).append(e)
    for edges in outgoing.values():
        edges.sort(key=lambda e: e.id)

    zero = tuple(0 for _ in edge_cost(g.edges[0])) if g.edges else ()
    # labels[node]: value -> list of (edge-id path, visited node frozenset)
    labels: dict[int, dict[tuple, list[tuple[tuple[int, ...], frozenset]]]] = {
        g.source: {zero: [((), frozenset([g.source]))]}
    }
    queue: deque[tuple[int, tuple, tuple[int, ...], frozenset]] = deque(
        [(g.source, zero, (), frozenset([g.source]))]
    )

    while queue:
        node, value, path, visited = queue.popleft()
        current = labels.get(node, {})
        if value not in current or (path, visited) not in current[value]:
            continue  # label was pruned after being queued
        for edge in outgoing.get(node, ()):
            if edge.head in visited:
                continue
            new_value = tuple(a + b for a, b in zip(value, edge_cost(edge)))
            new_path = path + (edge.id,)
            new_visited = visited | {edge.head}
            bucket = labels.setdefault(edge.head, {})
            if any(
                pareto_dominates(other, new_value) for other in bucket
            ):
                continue
            if new_value in bucket:
                entries = bucket[new_value]
                if all_efficient:
                    if (new_path, new_visited) in entries:
                        continue
                    entries.append((new_path, new_visited))
                else:
                    if new_path >= entries[0][0]:
                        continue
                    bucket[new_value] = [(new_path, new_visited)]
            else:
                for other in [
                    o for o in bucket if pareto_dominates(new_value, o)
                ]:
                    del bucket[other]
                bucket[new_value] = [(new_path, new_visited)]
            queue.append((edge.head, new_value, new_path, new_visited))

    result = labels.get(g.target, {})
    # The per-node pruning is incremental; take a final Pareto pass.
    values = list(result)
    final: dict[tuple, list[tuple[int, ...]]] = {}
    for value in values:
        if any(pareto_dominates(other, value) for other in values):
            continue
        paths = sorted(p for p, _ in result[value])
        final[value] = paths if all_efficient else paths[:1]
    return final


def _path_entries(
    g: GraphInstance,
    frontier: dict[tuple, list[tuple[int, ...]]],
) -> tuple[ResultEntry, ...]:
    entries = []
    for value in sorted(frontier):
        rep = frontier[value][0]
        rep_edges = [g.edge_by_id(i) for i in rep]
        countings = tuple(
            counting_vector((e.categories[l] for e in rep_edges), space)
            for l, space in enumerate(g.spaces)
        )
        ordinals = tuple(counting_vector_to_ordinal(c) for c in countings)
        weights = tuple(
            sum((e.weights[j] for e in rep_edges), Fraction(0))
            for j in range(g.num_real)
        )
        entries.append(
            ResultEntry(
                value=value,
                countings=countings,
                ordinals=ordinals,
                weights=weights,
                solutions=tuple(tuple(p) for p in frontier[value]),
            )
        )
    return tuple(entries)


def counting_vector_to_ordinal(counts: Sequence[int]) -> tuple[int, ...]:
    return ordinal_vector(counts)


def solve_shortest_path(
    g: GraphInstance, all_efficient: bool = False
) -> SolveResult:
    """All ordinally efficient s-t paths of a single-ordinal-objective graph.

    Runs the Pareto label-correcting search on the binary tail cost vectors;
    the resulting Pareto-non-dominated tail vectors are exactly the
    ordinally efficient outcomes.
    """
    if len(g.spaces) != 1 or g.num_real != 0:
        raise OrdparetoError(
            "solve_shortest_path expects exactly one ordinal objective and "
            "no real objectives; use solve_mixed otherwise"
        )
    return solve_mixed(g, all_efficient)


def solve_mixed(g: GraphInstance, all_efficient: bool = False) -> SolveResult:
    """Pareto frontier over s-t paths of real weights plus per-objective
    tail vectors (block-diagonal transformation of the outcome vector)."""
    if g.num_real + len(g.spaces) < 1:
        raise OrdparetoError("need at least one objective")
    if g.source == g.target:
        zero_value = tuple(
            [Fraction(0)] * g.num_real
            + [0] * sum(s.K for s in g.spaces)
        )
        entry = ResultEntry(
            value=zero_value,
            countings=tuple((0,) * s.K for s in g.spaces),
            ordinals=tuple(() for _ in g.spaces),
            weights=(Fraction(0),) * g.num_real,
            solutions=((),),
        )
        return SolveResult(OK, (entry,))
    frontier = _multiobjective_shortest_paths(
        g, lambda e: _edge_cost_tail(e, g.spaces), all_efficient
    )
    if not frontier:
        return SolveResult(UNREACHABLE)
    return SolveResult(OK, _path_entries(g, frontier))


def solve_weighted_counting(
    g: GraphInstance, all_efficient: bool = False
) -> SolveResult:
    """Pareto frontier of tail-accumulated weighted counting vectors.

    Requires one coherent weight/category pair per edge: each edge
    contributes its weight, instead of a unit, to every tail component up
    to its category.
    """
    if len(g.spaces) != 1 or g.num_real != 1:
        raise OrdparetoError(
            "solve_weighted_counting expects exactly one weight and one "
            "ordinal objective per edge"
        )
    if g.source == g.target:
        entry = ResultEntry(
            value=(Fraction(0),) * g.spaces[0].K,
            countings=((0,) * g.spaces[0].K,),
            ordinals=((),),
            weights=(Fraction(0),),
            solutions=((),),
        )
        return SolveResult(OK, (entry,))
    frontier = _multiobjective_shortest_paths(
        g, lambda e: _edge_cost_weighted(e, g.spaces[0]), all_efficient
    )
    if not frontier:
        return SolveResult(UNREACHABLE)
    return SolveResult(OK, _path_entries(g, frontier))


def solve_knapsack(
    k: KnapsackInstance, all_efficient: bool = False
) -> SolveResult:
    """Pareto-maximal head-count vectors over capacity-feasible subsets.

    Dynamic programming over items with per-consumption-level state sets;
    head counts are maximized so the empty subset is not trivially optimal.
    """
    # states[used]: head vector -> list of item-id tuples
    states: list[dict[tuple[int, ...], list[tuple[int, ...]]]] = [
        {} for _ in range(k.capacity + 1)
    ]
    zero = (0,) * k.space.K
    states[0][zero] = [()]
    items = sorted(k.items, key=lambda it: it.id)
    for item in items:
        delta = tuple(
            1 if j >= item.category else 0 for j in range(1, k.space.K + 1)
        )
        for used in range(k.capacity - item.weight, -1, -1):
            for vec, sols in list(states[used].items()):
                new_vec = tuple(a + b for a, b in zip(vec, delta))
                new_used = used + item.weight
                bucket = states[new_used]
                new_sols = [s + (item.id,) for s in sols]
                if new_vec in bucket:
                    bucket[new_vec].extend(new_sols)
                else:
                    bucket[new_vec] = new_sols

    # Collect all feasible head vectors and filter for Pareto-maximality.
    combined: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for bucket in states:
        for vec, sols in bucket.items():
            combined.setdefault(vec, []).extend(sols)
    vectors = list(combined)
    entries = []
    for vec in sorted(vectors):
        if any(pareto_dominates(vec, other) for other in vectors):
            continue  # some other vector is componentwise >= and different
        sols = sorted(set(combined[vec]))
        if not all_efficient:
            sols = sols[:1]
        counts = head_to_counting(vec)
        entries.append(
            ResultEntry(
                value=vec,
                countings=(counts,),
                ordinals=(ordinal_vector(counts),),
                weights=(),
                solutions=tuple(sols),
            )
        )
    return SolveResult(OK, tuple(entries))


def head_to_counting(heads: Sequence[int]) -> tuple[int, ...]:
    """Invert prefix sums back to a counting vector."""
    return tuple(
        heads[j] - (heads[j - 1] if j else 0) for j in range(len(heads))
    )
