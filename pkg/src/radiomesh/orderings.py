"""Pair-walk vertex orderings over the mesh-by-star product.

For even mesh order the construction pairs fiber t(j) with
t(j + m*m/2) and walks each pair in a strict two-copy zigzag. For odd
mesh order it runs three phases: zigzag pairs over the first m*(m-1)
cells, paired walks over the interior of the last row, and three
distinguished last-row fibers traversed by short hub/leaf paths.

Greedy realization of these orderings always yields a valid labeling;
the consecutive-only realization reproduces the telescoped sums that the
closed-form span claims rest on, and is generally invalid. Both spans
are reported side by side so the claims harness can compare them with
the catalog values.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import DistanceMatrix, Graph, all_pairs_distances
from .labeling import (
    Labeling,
    OrderingPlan,
    OrderingProvenance,
    consecutive_only_assign,
    greedy_assign,
    validate,
)
from .product import (
    CellIndexing,
    ParityError,
    ProductGraph,
    ProductParams,
    build_product_graph,
    fiber_vertex_id,
)


def _zigzag_sides(n: int) -> tuple[list[int], list[int]]:
    """Per-copy visit sequences (1-based fiber positions) for one pair.

    Side A: hub, even positions ascending, then odd leaf positions; side
    B: hub, odd positions from 3, then even positions. Interleaved
    strictly A, B, A, B this is the unique alternation whose prefix is
    A(1), B(1), A(2), B(3), A(4), ... and which still covers both fibers.
    """
    side_a = [1] + list(range(2, n + 2, 2)) + list(range(3, n + 2, 2))
    side_b = [1] + list(range(3, n + 2, 2)) + list(range(2, n + 2, 2))
    return side_a, side_b


def _interior_sides(n: int) -> tuple[list[int], list[int]]:
    """Visit sequences for a last-row interior pair (odd mesh order).

    The walk raises the fiber position by one at every step, alternating
    copies (x1, y2, x3, y4, ...), then continues the alternation over the
    complementary positions of each copy.
    """
    side_x = list(range(1, n + 2, 2)) + list(range(2, n + 2, 2))
    side_y = list(range(2, n + 2, 2)) + list(range(1, n + 2, 2))
    return side_x, side_y


def _pair_walk(params, indexing, t_a, t_b, seq_a, seq_b):
    out = []
    for ka, kb in zip(seq_a, seq_b):
        out.append(fiber_vertex_id(params, indexing, t_a, ka))
        out.append(fiber_vertex_id(params, indexing, t_b, kb))
    return out


def even_pair_ordering(
    params: ProductParams, indexing: CellIndexing = CellIndexing.ROW_MAJOR
) -> OrderingPlan:
    """Visit order for even mesh order: zigzag the pairs (t(j), t(j + m*m/2))."""
    if params.m % 2:
        raise ParityError(f"even pair ordering needs even mesh order, got m={params.m}")
    half = params.m * params.m // 2
    side_a, side_b = _zigzag_sides(params.n)
    sequence: list[int] = []
    for j in range(1, half + 1):
        sequence += _pair_walk(params, indexing, j, j + half, side_a, side_b)
    return OrderingPlan(tuple(sequence), OrderingProvenance.EVEN_PAIR_WALK)


def odd_three_phase_ordering(
    params: ProductParams, indexing: CellIndexing = CellIndexing.ROW_MAJOR
) -> OrderingPlan:
    """Visit order for odd mesh order, in three phases.

    Phase 1 zigzags the pairs (t(x), t(x + m*(m-1)/2)) over the first
    m*(m-1) cells. Phase 2 pairs the last-row interior cells d and
    d + (m-1)/2 for d in [2, (m-1)/2]; that offset (not (m+1)/2, which
    would collide with the distinguished last cell) is the one tiling
    the row around the three distinguished cells. Phase 3 walks the
    distinguished fibers t(1), t((m+1)/2), t(m) of the last row along
    endpoint-endpoint-midpoint paths, one fiber position triple at a
    time; positions beyond the fiber size are skipped, which also covers
    the empty leaf-path range when n < 3.
    """
    m, n = params.m, params.n
    if m % 2 == 0:
        raise ParityError(f"three-phase ordering needs odd mesh order, got m={m}")
    sequence: list[int] = []

    half = m * (m - 1) // 2
    side_a, side_b = _zigzag_sides(n)
    for x in range(1, half + 1):
        sequence += _pair_walk(params, indexing, x, x + half, side_a, side_b)

    base = m * (m - 1)
    shift = (m - 1) // 2
    side_x, side_y = _interior_sides(n)
    for d in range(2, (m - 1) // 2 + 1):
        sequence += _pair_walk(params, indexing, base + d, base + d + shift, side_x, side_y)

    t_first = base + 1
    t_mid = base + (m + 1) // 2
    t_last = base + m
    paths = [
        [(t_first, 1), (t_last, 2), (t_mid, 3)],
        [(t_last, 1), (t_first, 3), (t_mid, 2)],
        [(t_first, 2), (t_last, 3), (t_mid, 1)],
    ]
    for position in range(4, n + 2):
        paths.append([(t_first, position), (t_last, position), (t_mid, position)])
    for path in paths:
        for t_index, position in path:
            if position <= n + 1:
                sequence.append(fiber_vertex_id(params, indexing, t_index, position))

    return OrderingPlan(tuple(sequence), OrderingProvenance.ODD_THREE_PHASE)


def construction_ordering(
    params: ProductParams, indexing: CellIndexing = CellIndexing.ROW_MAJOR
) -> OrderingPlan:
    """Parity-appropriate construction ordering."""
    if params.m % 2 == 0:
        return even_pair_ordering(params, indexing)
    return odd_three_phase_ordering(params, indexing)


@dataclass(frozen=True)
class ConstructionLabelings:
    """Both realizations of the construction ordering, with verdicts."""

    ordering: OrderingPlan
    greedy: Labeling
    consecutive: Labeling
    consecutive_valid: bool

    @property
    def greedy_span(self) -> int:
        return self.greedy.span

    @property
    def consecutive_span(self) -> int:
        return self.consecutive.span


def build_construction_labeling(
    params: ProductParams,
    indexing: CellIndexing = CellIndexing.ROW_MAJOR,
    product: ProductGraph | None = None,
    dm: DistanceMatrix | None = None,
) -> ConstructionLabelings:
    """Run both assignments over the construction ordering.

    The greedy labeling is valid by construction; the consecutive-only
    labeling is validated and reported as-is.
    """
    plan = construction_ordering(params, indexing)
    if product is None:
        product = build_product_graph(params, indexing)
    graph: Graph = product.graph
    if dm is None:
        dm = all_pairs_distances(graph)
    greedy = greedy_assign(graph, dm, plan)
    consecutive = consecutive_only_assign(graph, dm, plan)
    verdict = validate(graph, dm, consecutive)
    return ConstructionLabelings(plan, greedy, consecutive, verdict.valid)
