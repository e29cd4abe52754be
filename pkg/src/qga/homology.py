"""Smoothness, properness, Ext between simples, and the pre-silting / pre-SMC predicates."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx

from .errors import InfiniteObjectError, ValidationError
from .quiver import (
    Path,
    QuadraticMonomialAlgebra,
    as_idempotent,
    enumerate_paths,
    has_cycle,
    path_space_is_finite,
    validate_gentle,
)


@dataclass(frozen=True)
class CycleVerdict:
    holds: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _find_cycle(graph: nx.DiGraph) -> tuple[str, ...] | None:
    try:
        edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return None
    return tuple(u for u, _ in edges)


def is_smooth(algebra: QuadraticMonomialAlgebra) -> CycleVerdict:
    """Smooth iff there is no cyclic word all of whose consecutive pairs are relations."""
    cycle = _find_cycle(algebra.successor_graph("critical"))
    return CycleVerdict(cycle is None, cycle)


def is_proper(algebra: QuadraticMonomialAlgebra) -> CycleVerdict:
    """Proper iff there is no cyclic word avoiding the relations."""
    cycle = _find_cycle(algebra.successor_graph("nonzero"))
    return CycleVerdict(cycle is None, cycle)


# -- Ext between simples ------------------------------------------------------


@dataclass(frozen=True)
class ExtTable:
    """``dim Hom(S_i, S_j[l])`` with a basis of critical paths for every entry.

    A critical path from ``i`` to ``j`` of length ``p`` and degree ``d`` spans a
    class in shift ``l = p - d``.
    """

    entries: dict[tuple[str, str, int], list[Path]] = field(default_factory=dict)
    shift_range: tuple[int, int] | None = None

    def dim(self, i, j, l: int) -> int:
        return len(self.entries.get((str(i), str(j), l), ()))

    def dimensions(self) -> dict[tuple[str, str, int], int]:
        return {k: len(v) for k, v in self.entries.items()}

    def to_document(self) -> list[dict]:
        return [
            {"i": i, "j": j, "l": l, "dim": len(basis), "basis": [list(p.arrows) for p in basis]}
            for (i, j, l), basis in self.entries.items()
        ]


def ext_table(
    algebra: QuadraticMonomialAlgebra,
    shift_range: tuple[int, int] | None = None,
    max_length: int | None = None,
) -> ExtTable:
    """Tabulate ``Hom(S_i, S_j[l])`` from critical paths.

    With ``shift_range=None`` the whole table is computed, which requires a
    smooth algebra unless ``max_length`` truncates the enumeration.
    """
    if shift_range is None and max_length is None and not is_smooth(algebra):
        raise InfiniteObjectError("the Ext table of a non-smooth algebra is infinite; pass a bound")
    table: dict[tuple[str, str, int], list[Path]] = defaultdict(list)
    vertices = algebra.vertices
    for i in vertices:
        for j in vertices:
            bound = max_length
            if bound is None and shift_range is not None and not _finite(algebra, i, j):
                bound = _length_bound_for_shifts(algebra, shift_range)
            for p in enumerate_paths(algebra, i, j, "critical", bound):
                l = p.length - p.degree
                if shift_range is None or shift_range[0] <= l <= shift_range[1]:
                    table[(i, j, l)].append(p)
    order = {v: k for k, v in enumerate(vertices)}
    entries = {k: table[k] for k in sorted(table, key=lambda k: (order[k[0]], order[k[1]], k[2]))}
    return ExtTable(entries, shift_range)


def _finite(algebra: QuadraticMonomialAlgebra, i: str, j: str) -> bool:
    return path_space_is_finite(algebra, i, j, "critical")


def _length_bound_for_shifts(algebra: QuadraticMonomialAlgebra, shift_range: tuple[int, int]) -> int:
    """A length beyond which no critical path lands in ``shift_range``.

    Along a relation cycle each step changes ``length - degree`` by ``1 - |a|``.
    When some cycle has zero net change the shifts never escape, so the range
    alone cannot bound the enumeration.  For gentle algebras every arrow has at
    most one relation successor, so a critical path is a tail, some turns
    around a single cycle, and a head, each piece shorter than ``n`` arrows.
    """
    if not validate_gentle(algebra).is_gentle:
        raise InfiniteObjectError("shift-bounded Ext of a non-smooth, non-gentle algebra needs a length bound")
    weights = {a.name: 1 - a.degree for a in algebra.arrows}
    graph = algebra.successor_graph("critical")
    lo, hi = shift_range
    for cycle in nx.simple_cycles(graph):
        if sum(weights[a] for a in cycle) == 0:
            raise InfiniteObjectError(
                f"relation cycle {'.'.join(cycle)} keeps the shift constant; pass a length bound"
            )
    n = max(1, len(algebra.arrows))
    spread = n * max((abs(w) for w in weights.values()), default=1)
    return n * (max(abs(lo), abs(hi)) + 2 * spread + 3)


# -- pre-silting and pre-SMC --------------------------------------------------


@dataclass(frozen=True)
class PredicateReport:
    holds: bool
    witness: object = None
    note: str | None = None

    def __bool__(self) -> bool:
        return self.holds


def _max_degree_paths(algebra: QuadraticMonomialAlgebra, kept: frozenset[str]):
    """Weighted graph whose walks from ``src`` to ``snk`` are nonzero paths between kept vertices.

    Nodes are arrows; the walk ``src -> a1 -> ... -> an -> snk`` carries weight
    ``sum |ai|``.  Also returns the arrows lying on such a walk and the start
    and final arrows.
    """
    graph = algebra.successor_graph("nonzero")
    starts = [a.name for a in algebra.arrows if a.source in kept]
    finals = [a.name for a in algebra.arrows if a.target in kept]
    reach = set(starts)
    for s in starts:
        reach |= nx.descendants(graph, s)
    back = set(finals)
    for f in finals:
        back |= nx.ancestors(graph, f)
    return graph, reach & back, starts, finals


def is_presilting_projective(algebra: QuadraticMonomialAlgebra, kept) -> PredicateReport:
    """Whether ``eA`` has no positive self-extensions.

    With zero differential ``Hom(eA, eA[n])`` is the degree ``n`` part of
    ``eAe``, so the predicate holds iff every nonzero path between kept
    vertices has degree ``<= 0``.  This is decided exactly: a positive-degree
    cycle on such a path makes the maximum unbounded, otherwise a longest-path
    computation over the finite graph settles it.
    """
    e = as_idempotent(algebra, kept).vertices
    if not e:
        return PredicateReport(True)
    graph, useful, starts, finals = _max_degree_paths(algebra, e)
    q = algebra.quiver
    sub = nx.DiGraph()
    sub.add_nodes_from(useful)
    sub.add_edges_from((a, b) for a, b in graph.edges if a in useful and b in useful)

    weight = {a: q.arrow(a).degree for a in useful}
    cycle = _positive_cycle(sub, weight)
    if cycle is not None:
        return PredicateReport(False, _close_cycle(sub, cycle, starts, finals),
                               "positive-degree nonzero cycle between kept vertices")

    best = _longest_path(sub, weight,
                         [s for s in starts if s in useful], set(f for f in finals if f in useful))
    if best is not None and best[0] > 0:
        return PredicateReport(False, best[1], f"nonzero path of degree {best[0]}")
    return PredicateReport(True)


def _positive_cycle(graph: nx.DiGraph, weight: dict[str, int]) -> tuple[str, ...] | None:
    """A cycle of positive total weight, if any (Bellman-Ford on negated weights)."""
    g = nx.DiGraph()
    for u, v in graph.edges:
        if u != v:
            g.add_edge(u, v, weight=-weight[v])
        elif weight[u] > 0:
            return (u,)
    # self-loops are handled above: find_negative_cycle mishandles them
    for comp in nx.strongly_connected_components(g):
        if len(comp) == 1:
            continue
        try:
            cycle = nx.find_negative_cycle(g.subgraph(comp), min(comp))
        except nx.NetworkXError:
            continue
        return tuple(cycle[:-1])
    return None


def _close_cycle(graph, cycle, starts, finals) -> tuple[str, ...]:
    """Extend a cycle into an actual path between kept vertices."""
    head = cycle[0]
    lead = ()
    for s in starts:
        if s == head or (s in graph and nx.has_path(graph, s, head)):
            lead = tuple(nx.shortest_path(graph, s, head))[:-1] if s != head else ()
            break
    tail = ()
    for f in finals:
        if f == head or (f in graph and nx.has_path(graph, head, f)):
            tail = tuple(nx.shortest_path(graph, head, f))[1:] if f != head else ()
            break
    return lead + cycle + (head,) + tail


def _longest_path(graph: nx.DiGraph, weight: dict[str, int], starts, finals):
    """Maximum-weight walk from a start to a final node; the graph has no positive cycle."""
    g = nx.DiGraph()
    g.add_node("__src__")
    g.add_node("__snk__")
    for u, v in graph.edges:
        g.add_edge(u, v, weight=-weight[v])
    for s in starts:
        g.add_edge("__src__", s, weight=-weight[s])
    for f in finals:
        g.add_edge(f, "__snk__", weight=0)
    if not nx.has_path(g, "__src__", "__snk__"):
        return None
    length, path = nx.single_source_bellman_ford(g, "__src__", "__snk__")
    return -length, tuple(path[1:-1])


def is_preSMC_simples(algebra: QuadraticMonomialAlgebra, kept) -> PredicateReport:
    """Whether the simples ``S_i`` for kept ``i`` form a pre-simple-minded collection.

    Requires ``Hom(S_i, S_j) = δ_ij k`` and no negative shifts, read off the
    Ext table restricted to kept vertices.
    """
    e = as_idempotent(algebra, kept).vertices
    if not e:
        return PredicateReport(True)
    if not is_smooth(algebra):
        raise ValidationError("pre-SMC check needs a smooth algebra")
    table = ext_table(algebra)
    for (i, j, l), basis in table.entries.items():
        if i not in e or j not in e:
            continue
        expected = 1 if (l == 0 and i == j) else 0
        if l <= 0 and len(basis) != expected:
            return PredicateReport(False, {"i": i, "j": j, "l": l, "dim": len(basis),
                                           "basis": [list(p.arrows) for p in basis]})
    return PredicateReport(True)


def koszul_dimensions(dual: QuadraticMonomialAlgebra, max_length: int | None = None) -> dict:
    """Graded dimensions of ``A^!`` keyed like ``ext_table``: ``(i, j, l)`` counts paths ``j -> i`` of degree ``l``."""
    dims: dict[tuple[str, str, int], int] = defaultdict(int)
    for i in dual.vertices:
        for j in dual.vertices:
            for p in enumerate_paths(dual, j, i, "nonzero", max_length):
                dims[(i, j, p.degree)] += 1
    return dict(dims)


__all__ = [
    "CycleVerdict",
    "ExtTable",
    "PredicateReport",
    "ext_table",
    "has_cycle",
    "is_preSMC_simples",
    "is_presilting_projective",
    "is_proper",
    "is_smooth",
    "koszul_dimensions",
]
