"""Radio labelings over a fixed graph: validation and ordering-driven assignment.

A labeling maps every vertex to a channel (non-negative integer) and is
valid when each pair (u, v) keeps ``|label(u) - label(v)|`` at least
``diam(G) + 1 - d(u, v)``. Orderings drive construction: ``greedy_assign``
realizes the cheapest labeling consistent with a visit order, while
``consecutive_only_assign`` accumulates the gap requirement between
consecutive visits only, the quantity that pair-walk span arguments add
up, which need not be valid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .graphs import DistanceMatrix, Graph, InvalidParameterError


class LabelingContractError(ValueError):
    """A labeling does not fit the graph it is being checked against."""


class OrderingProvenance(Enum):
    EVEN_PAIR_WALK = "even-pair-walk"
    ODD_THREE_PHASE = "odd-three-phase"
    SEARCH_NODE = "search-node"
    EXTERNAL = "external"


@dataclass(frozen=True)
class OrderingPlan:
    """A visit order over all vertices of one graph."""

    sequence: tuple[int, ...]
    provenance: OrderingProvenance = OrderingProvenance.EXTERNAL

    def __post_init__(self):
        if sorted(self.sequence) != list(range(len(self.sequence))):
            raise InvalidParameterError("ordering is not a permutation of 0..N-1")


@dataclass(frozen=True)
class Labeling:
    """Total channel assignment, indexed by vertex id.

    ``graph`` records which graph the labels refer to when known; file
    parses leave it unset.
    """

    labels: tuple[int, ...]
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.labels:
            raise InvalidParameterError("labeling must cover at least one vertex")
        if any(x < 0 for x in self.labels):
            raise InvalidParameterError("labels must be non-negative")

    @property
    def span(self) -> int:
        return max(self.labels) - min(self.labels)

    def canonical(self) -> "Labeling":
        """Shift so the smallest label is 0."""
        low = min(self.labels)
        if low == 0:
            return self
        return Labeling(tuple(x - low for x in self.labels), self.graph)


class Violation(NamedTuple):
    u: int
    v: int
    required: int
    actual: int


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violations: tuple[Violation, ...]


def _check_fit(g: Graph, labeling: Labeling) -> None:
    if labeling.graph is not None and labeling.graph != g:
        raise LabelingContractError("labeling was built for a different graph")
    if len(labeling.labels) != g.num_vertices:
        raise LabelingContractError(
            f"labeling covers {len(labeling.labels)} vertices, graph has {g.num_vertices}"
        )


def validate(g: Graph, dm: DistanceMatrix, labeling: Labeling) -> ValidityReport:
    """Check every vertex pair against the gap requirement.

    Returns the full list of violating pairs, so a failed report shows
    exactly which constraints broke rather than just a boolean.
    """
    _check_fit(g, labeling)
    base = dm.diameter + 1
    labels = labeling.labels
    violations = []
    for u in range(g.num_vertices):
        row = dm.row(u).tolist()
        lu = labels[u]
        for v in range(u + 1, g.num_vertices):
            required = base - row[v]
            actual = abs(lu - labels[v])
            if actual < required:
                violations.append(Violation(u, v, required, actual))
    return ValidityReport(not violations, tuple(violations))


def greedy_assign(g: Graph, dm: DistanceMatrix, plan: OrderingPlan) -> Labeling:
    """Cheapest labeling whose label order follows ``plan``.

    The first vertex gets 0; each later vertex gets the smallest value
    satisfying the gap requirement against every vertex already placed.
    Since the requirement is always at least 1, labels strictly increase
    along the plan and the result is valid by construction.
    """
    seq = plan.sequence
    if len(seq) != g.num_vertices:
        raise InvalidParameterError("plan does not cover the graph")
    base = dm.diameter + 1
    labels = [0] * g.num_vertices
    placed = [seq[0]]
    for v in seq[1:]:
        row = dm.row(v).tolist()
        value = 0
        for u in placed:
            candidate = labels[u] + base - row[u]
            if candidate > value:
                value = candidate
        labels[v] = value
        placed.append(v)
    return Labeling(tuple(labels), graph=g)


def consecutive_only_assign(g: Graph, dm: DistanceMatrix, plan: OrderingPlan) -> Labeling:
    """Accumulate the gap requirement between consecutive visits only.

    The final label telescopes to ``sum(diam + 1 - d(u_{i-1}, u_i))``.
    Validity against non-consecutive pairs is NOT guaranteed; callers
    pass the result to :func:`validate` and report the verdict.
    """
    seq = plan.sequence
    if len(seq) != g.num_vertices:
        raise InvalidParameterError("plan does not cover the graph")
    base = dm.diameter + 1
    labels = [0] * g.num_vertices
    prev = seq[0]
    for v in seq[1:]:
        labels[v] = labels[prev] + base - dm[prev, v]
        prev = v
    return Labeling(tuple(labels), graph=g)
