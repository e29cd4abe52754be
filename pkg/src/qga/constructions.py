"""Algebra-to-algebra constructions.

* ``quadratic_dual``: the graded quadratic dual on the opposite quiver.
* ``idempotent_cut``: the algebra ``A_e`` on the vertices outside ``e``, whose
  arrows are relation-words running through ``e``.
* ``corner_algebra`` / ``corner_via_dual``: ``eAe`` computed from nonzero
  paths, and independently as the dual of a cut of the dual.
* ``graded_iso``: isomorphism search between finite algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .errors import InfiniteObjectError, ValidationError
from .quiver import (
    Arrow,
    GradedQuiver,
    Idempotent,
    QuadraticMonomialAlgebra,
    _relevant_arrows,
    as_idempotent,
    has_cycle,
    require_gentle,
)

OP_SUFFIX = "^op"


def op_name(name: str) -> str:
    """Name of the opposite arrow; applying it twice gives back ``name``."""
    return name[: -len(OP_SUFFIX)] if name.endswith(OP_SUFFIX) else name + OP_SUFFIX


def bracket(word: Iterable[str]) -> str:
    """Generated arrow name for a word; single arrows keep their name."""
    word = tuple(word)
    return word[0] if len(word) == 1 else "[" + ".".join(word) + "]"


def word_degree(algebra: QuadraticMonomialAlgebra, word: Iterable[str]) -> int:
    """Degree of the generator ``[a1...as]``: ``sum |ai| - s + 1``."""
    word = tuple(word)
    return sum(algebra.quiver.arrow(a).degree for a in word) - len(word) + 1


@dataclass(frozen=True)
class Derived:
    """Result of a cut or corner construction.

    ``words`` maps every new arrow to its underlying word in the input algebra.
    When ``finite`` is false the arrow set was truncated at ``bound`` letters.
    """

    algebra: QuadraticMonomialAlgebra
    finite: bool
    words: Mapping[str, tuple[str, ...]] = field(compare=False)
    bound: int | None = None

    @property
    def truncated_at(self) -> int | None:
        return None if self.finite else self.bound


def quadratic_dual(algebra: QuadraticMonomialAlgebra) -> QuadraticMonomialAlgebra:
    arrows = tuple(Arrow(op_name(a.name), a.target, a.source, 1 - a.degree) for a in algebra.arrows)
    relations = tuple(
        (op_name(b), op_name(a))
        for a, b in algebra.quiver.composable_pairs()
        if not algebra.is_relation(a, b)
    )
    return QuadraticMonomialAlgebra(GradedQuiver(algebra.vertices, arrows), relations)


def _words_between(
    algebra: QuadraticMonomialAlgebra,
    graph: nx.DiGraph,
    starts: list[str],
    is_final,
    max_length: int | None,
    what: str,
) -> tuple[list[tuple[str, ...]], bool]:
    """Words following ``graph`` from a start arrow that stop at the first final arrow."""
    q = algebra.quiver
    finals = [a.name for a in algebra.arrows if is_final(a)]
    passing = nx.DiGraph()
    passing.add_nodes_from(graph.nodes)
    passing.add_edges_from((a, b) for a, b in graph.edges if not is_final(q.arrow(a)))
    useful = _relevant_arrows(passing, starts, finals)
    finite = not has_cycle(passing, useful)
    if not finite and max_length is None:
        raise InfiniteObjectError(f"{what} has infinitely many arrows; pass a length bound")

    words = []
    frontier = [(s,) for s in starts if s in useful]
    while frontier:
        nxt = []
        for w in frontier:
            if is_final(q.arrow(w[-1])):
                words.append(w)
            elif max_length is None or len(w) < max_length:
                nxt += [w + (b,) for b in passing.successors(w[-1]) if b in useful]
        frontier = nxt
    idx = q.arrow_index
    words.sort(key=lambda w: (idx[w[0]], len(w), tuple(idx[a] for a in w)))
    return words, finite


def _assemble(
    algebra: QuadraticMonomialAlgebra,
    vertices: list[str],
    words: list[tuple[str, ...]],
    degree,
) -> tuple[QuadraticMonomialAlgebra, dict[str, tuple[str, ...]]]:
    q = algebra.quiver
    arrows = []
    names: dict[str, tuple[str, ...]] = {}
    for w in words:
        name = bracket(w)
        names[name] = w
        arrows.append(Arrow(name, q.arrow(w[0]).source, q.arrow(w[-1]).target, degree(w)))
    relations = [
        (x.name, y.name)
        for x in arrows
        for y in arrows
        if x.target == y.source and algebra.is_relation(names[x.name][-1], names[y.name][0])
    ]
    return QuadraticMonomialAlgebra(GradedQuiver(tuple(vertices), tuple(arrows)), tuple(relations)), names


def idempotent_cut(
    algebra: QuadraticMonomialAlgebra, removed, max_arrow_length: int | None = None
) -> Derived:
    """``A_e`` for ``e`` the set of REMOVED vertices.

    Arrows are the words ``a1...as`` whose consecutive pairs are relations
    through removed vertices, starting and ending outside ``e``; the arrow
    ``[a1...as]`` has degree ``sum |ai| - s + 1``.  ``[p][q]`` is a relation
    when ``last(p) first(q)`` is a relation of ``A``.
    """
    e = as_idempotent(algebra, removed).vertices
    q = algebra.quiver
    graph = nx.DiGraph()
    graph.add_nodes_from(a.name for a in q.arrows)
    for a, b in algebra.relations:
        if q.arrow(a).target in e:
            graph.add_edge(a, b)
    starts = [a.name for a in q.arrows if a.source not in e]
    words, finite = _words_between(
        algebra, graph, starts, lambda a: a.target not in e, max_arrow_length, "A_e"
    )
    kept = [v for v in algebra.vertices if v not in e]
    result, names = _assemble(algebra, kept, words, lambda w: word_degree(algebra, w))
    return Derived(result, finite, names, max_arrow_length)


def corner_algebra(
    algebra: QuadraticMonomialAlgebra, kept, max_arrow_length: int | None = None
) -> Derived:
    """``eAe`` for ``e`` the set of KEPT vertices, for gentle ``A``.

    Generators are nonzero paths between kept vertices whose interior avoids
    ``e``; their degree is the path degree.
    """
    require_gentle(algebra)
    e = as_idempotent(algebra, kept).vertices
    q = algebra.quiver
    graph = algebra.successor_graph("nonzero")
    starts = [a.name for a in q.arrows if a.source in e]
    words, finite = _words_between(
        algebra, graph, starts, lambda a: a.target in e, max_arrow_length, "eAe"
    )
    vertices = [v for v in algebra.vertices if v in e]
    result, names = _assemble(
        algebra, vertices, words, lambda w: sum(q.arrow(a).degree for a in w)
    )
    return Derived(result, finite, names, max_arrow_length)


def _unop_word(word: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(op_name(a) for a in reversed(word))


def corner_via_dual(
    algebra: QuadraticMonomialAlgebra, kept, max_arrow_length: int | None = None
) -> Derived:
    """``eAe`` computed as the dual of ``(A^!)_{1-e}``."""
    require_gentle(algebra)
    e = as_idempotent(algebra, kept)
    dual = quadratic_dual(algebra)
    cut = idempotent_cut(dual, e.complement(algebra).vertices, max_arrow_length)
    result = quadratic_dual(cut.algebra)
    words = {op_name(name): _unop_word(w) for name, w in cut.words.items()}
    return Derived(result, cut.finite, words, max_arrow_length)


def cut_via_dual(
    algebra: QuadraticMonomialAlgebra, removed, max_arrow_length: int | None = None
) -> Derived:
    """``A_e`` computed as the dual of ``(1-e)A^!(1-e)``."""
    e = as_idempotent(algebra, removed)
    dual = quadratic_dual(algebra)
    corner = corner_algebra(dual, e.complement(algebra).vertices, max_arrow_length)
    result = quadratic_dual(corner.algebra)
    words = {op_name(name): _unop_word(w) for name, w in corner.words.items()}
    return Derived(result, corner.finite, words, max_arrow_length)


# -- isomorphism --------------------------------------------------------------


@dataclass(frozen=True)
class GradedIso:
    vertex_map: Mapping[str, str]
    arrow_map: Mapping[str, str]

    def verify(self, a: QuadraticMonomialAlgebra, b: QuadraticMonomialAlgebra) -> bool:
        """Check the witness independently of the search that produced it."""
        if sorted(self.vertex_map) != sorted(a.vertices) or sorted(self.vertex_map.values()) != sorted(b.vertices):
            return False
        if sorted(self.arrow_map) != sorted(x.name for x in a.arrows):
            return False
        if sorted(self.arrow_map.values()) != sorted(x.name for x in b.arrows):
            return False
        for x in a.arrows:
            y = b.quiver.arrow(self.arrow_map[x.name])
            if (self.vertex_map[x.source], self.vertex_map[x.target], x.degree) != (y.source, y.target, y.degree):
                return False
        mapped = {(self.arrow_map[p], self.arrow_map[r]) for p, r in a.relations}
        return mapped == b.relation_set


def _encode(algebra: QuadraticMonomialAlgebra) -> nx.DiGraph:
    g = nx.DiGraph()
    for v in algebra.vertices:
        g.add_node(("v", v), kind="v", degree=None)
    for a in algebra.arrows:
        g.add_node(("a", a.name), kind="a", degree=a.degree)
        g.add_edge(("v", a.source), ("a", a.name), kind="src")
        g.add_edge(("a", a.name), ("v", a.target), kind="tgt")
    for x, y in algebra.relations:
        g.add_edge(("a", x), ("a", y), kind="rel")
    return g


def _signature(algebra: QuadraticMonomialAlgebra):
    return (
        len(algebra.vertices),
        len(algebra.relations),
        sorted(a.degree for a in algebra.arrows),
        sorted(
            (len(algebra.quiver.outgoing(v)), len(algebra.quiver.incoming(v))) for v in algebra.vertices
        ),
    )


def graded_iso(a: QuadraticMonomialAlgebra, b: QuadraticMonomialAlgebra) -> GradedIso | None:
    """An isomorphism of graded quivers with relations, or ``None``.

    Vertices and arrows are encoded as nodes of one directed graph (relations
    become arrow-to-arrow edges) and matched by VF2 backtracking with degree
    and node-kind constraints.  The first witness in search order is returned.
    """
    if _signature(a) != _signature(b):
        return None
    matcher = DiGraphMatcher(
        _encode(a),
        _encode(b),
        node_match=lambda x, y: x["kind"] == y["kind"] and x["degree"] == y["degree"],
        edge_match=lambda x, y: x["kind"] == y["kind"],
    )
    for mapping in matcher.isomorphisms_iter():
        vmap = {k[1]: v[1] for k, v in mapping.items() if k[0] == "v"}
        amap = {k[1]: v[1] for k, v in mapping.items() if k[0] == "a"}
        return GradedIso(
            {v: vmap[v] for v in a.vertices}, {x.name: amap[x.name] for x in a.arrows}
        )
    return None


def ungraded(algebra: QuadraticMonomialAlgebra) -> QuadraticMonomialAlgebra:
    return algebra.regraded({a.name: 0 for a in algebra.arrows})


@dataclass(frozen=True)
class IteratedCut:
    holds: bool
    first_then_second: QuadraticMonomialAlgebra
    together: QuadraticMonomialAlgebra
    second_then_first: QuadraticMonomialAlgebra
    witnesses: tuple[GradedIso | None, GradedIso | None]


def check_iterated_cut(algebra: QuadraticMonomialAlgebra, first, second) -> IteratedCut:
    """Compare ``(A_e')_e''``, ``A_{e'+e''}`` and ``(A_e'')_e'`` up to graded isomorphism."""
    e1 = as_idempotent(algebra, first).vertices
    e2 = as_idempotent(algebra, second).vertices
    if e1 & e2:
        raise ValidationError(f"idempotents share vertices {sorted(e1 & e2)}")
    together = idempotent_cut(algebra, e1 | e2).algebra
    one_two = idempotent_cut(idempotent_cut(algebra, e1).algebra, e2).algebra
    two_one = idempotent_cut(idempotent_cut(algebra, e2).algebra, e1).algebra
    left = graded_iso(one_two, together)
    right = graded_iso(two_one, together)
    return IteratedCut(left is not None and right is not None, one_two, together, two_one, (left, right))


def complement(algebra: QuadraticMonomialAlgebra, e) -> Idempotent:
    return as_idempotent(algebra, e).complement(algebra)
