"""Graded quivers, paths and quadratic monomial algebras.

Paths compose left to right: ``("a", "b")`` is the path that first follows
``a`` and then ``b``.  An algebra ``A = kQ/<I>`` is stored as its quiver plus
the set ``I`` of length-two monomial relations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Literal, Mapping, Sequence

import networkx as nx

from .errors import InfiniteObjectError, ParseError, ValidationError

Mode = Literal["nonzero", "critical"]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class GradedQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            dup = _first_duplicate(self.vertices)
            raise ValidationError(f"duplicate vertex {dup!r}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValidationError(f"duplicate arrow name {_first_duplicate(names)!r}")
        known = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in known:
                    raise ValidationError(f"arrow {a.name!r} uses unknown vertex {end!r}")

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def outgoing(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def incoming(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def composable(self, first: str, second: str) -> bool:
        return self.arrow(first).target == self.arrow(second).source

    def composable_pairs(self) -> list[tuple[str, str]]:
        return [(a.name, b.name) for a in self.arrows for b in self.arrows if a.target == b.source]

    def components(self) -> list[list[str]]:
        """Vertex sets of the connected components, in declaration order."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((a.source, a.target) for a in self.arrows)
        comps = [sorted(c, key=self.vertex_index.__getitem__) for c in nx.connected_components(g)]
        comps.sort(key=lambda c: self.vertex_index[c[0]])
        return comps


@dataclass(frozen=True)
class Path:
    """A path in a quiver; length-zero paths are vertex idempotents."""

    arrows: tuple[str, ...]
    source: str
    target: str
    degree: int = 0

    @property
    def length(self) -> int:
        return len(self.arrows)

    @classmethod
    def idempotent(cls, vertex: str) -> "Path":
        return cls((), vertex, vertex, 0)

    @classmethod
    def of(cls, quiver: GradedQuiver, names: Sequence[str]) -> "Path":
        if not names:
            raise ValueError("use Path.idempotent for length-zero paths")
        arrows = [quiver.arrow(n) for n in names]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise ValidationError(f"arrows {x.name!r} and {y.name!r} do not compose")
        return cls(tuple(names), arrows[0].source, arrows[-1].target, sum(a.degree for a in arrows))

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.source}"
        return ".".join(self.arrows)


@dataclass(frozen=True)
class QuadraticMonomialAlgebra:
    """``kQ/<I>`` with ``I`` a set of composable arrow pairs.

    Relations are kept in a canonical order (by declaration index of the two
    arrows) so that equality is set equality and serialization is stable.
    """

    quiver: GradedQuiver
    relations: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        rels = [tuple(r) for r in self.relations]
        if len(set(rels)) != len(rels):
            raise ValidationError(f"duplicate relation {_first_duplicate(rels)!r}")
        idx = self.quiver.arrow_index
        for r in rels:
            if len(r) != 2:
                raise ValidationError(f"relation {r!r} must have exactly two arrows")
            a, b = r
            for name in r:
                if name not in idx:
                    raise ValidationError(f"relation {a}.{b} uses unknown arrow {name!r}")
            if not self.quiver.composable(a, b):
                raise ValidationError(f"relation {a}.{b} is not composable")
        rels.sort(key=lambda r: (idx[r[0]], idx[r[1]]))
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def build(
        cls,
        vertices: Iterable[object],
        arrows: Iterable[tuple] = (),
        relations: Iterable[tuple[str, str]] = (),
    ) -> "QuadraticMonomialAlgebra":
        """Convenience constructor: arrows as ``(name, source, target[, degree])``."""
        arrow_objs = []
        for spec in arrows:
            name, s, t, *rest = spec
            arrow_objs.append(Arrow(str(name), str(s), str(t), int(rest[0]) if rest else 0))
        quiver = GradedQuiver(tuple(str(v) for v in vertices), tuple(arrow_objs))
        return cls(quiver, tuple(tuple(r) for r in relations))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @cached_property
    def relation_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.relations)

    def is_relation(self, a: str, b: str) -> bool:
        return (a, b) in self.relation_set

    def successors(self, arrow: str, mode: Mode) -> list[str]:
        """Arrows that may follow ``arrow`` in a path of the given mode."""
        t = self.quiver.arrow(arrow).target
        want = mode == "critical"
        return [b.name for b in self.quiver.arrows if b.source == t and self.is_relation(arrow, b.name) == want]

    def successor_graph(self, mode: Mode) -> nx.DiGraph:
        """Directed graph on arrow names: ``a -> b`` when ``ab`` is allowed in ``mode``."""
        g = nx.DiGraph()
        g.add_nodes_from(a.name for a in self.arrows)
        for a in self.arrows:
            for b in self.successors(a.name, mode):
                g.add_edge(a.name, b)
        return g

    def path(self, names: Sequence[str]) -> Path:
        return Path.of(self.quiver, names)

    def regraded(self, degrees: Mapping[str, int]) -> "QuadraticMonomialAlgebra":
        arrows = tuple(Arrow(a.name, a.source, a.target, degrees.get(a.name, a.degree)) for a in self.arrows)
        return QuadraticMonomialAlgebra(GradedQuiver(self.vertices, arrows), self.relations)


@dataclass(frozen=True)
class Violation:
    condition: str
    witness: tuple[str, ...]
    message: str = field(default="", compare=False)


@dataclass(frozen=True)
class GentleReport:
    is_gentle: bool
    violations: tuple[Violation, ...] = ()


@dataclass(frozen=True)
class Idempotent:
    """A sum of vertex idempotents, given by its vertex set."""

    vertices: frozenset[str]

    @classmethod
    def of(cls, algebra: QuadraticMonomialAlgebra, vertices: Iterable[object]) -> "Idempotent":
        vs = frozenset(str(v) for v in vertices)
        unknown = vs - set(algebra.vertices)
        if unknown:
            raise ValidationError(f"idempotent uses unknown vertices {sorted(unknown)}")
        return cls(vs)

    def complement(self, algebra: QuadraticMonomialAlgebra) -> "Idempotent":
        return Idempotent(frozenset(algebra.vertices) - self.vertices)

    def ordered(self, algebra: QuadraticMonomialAlgebra) -> list[str]:
        return [v for v in algebra.vertices if v in self.vertices]


def _first_duplicate(items):
    seen = set()
    for x in items:
        if x in seen:
            return x
        seen.add(x)
    return None


def as_idempotent(algebra: QuadraticMonomialAlgebra, e) -> Idempotent:
    return e if isinstance(e, Idempotent) else Idempotent.of(algebra, e)


# -- gentleness ---------------------------------------------------------------


def validate_gentle(algebra: QuadraticMonomialAlgebra) -> GentleReport:
    """Check the valence and unique-continuation conditions of a gentle algebra.

    Condition ids: ``V1`` more than two outgoing arrows at a vertex, ``V2`` more
    than two incoming arrows, ``V3`` an arrow with two relation successors or
    predecessors, ``V4`` an arrow with two non-relation successors or
    predecessors.  Quadraticity of ``I`` holds by construction.
    """
    q = algebra.quiver
    violations: list[Violation] = []
    for v in q.vertices:
        out = [a.name for a in q.outgoing(v)]
        inc = [a.name for a in q.incoming(v)]
        if len(out) > 2:
            violations.append(Violation("V1", (v, *out), f"vertex {v} is the source of {len(out)} arrows"))
        if len(inc) > 2:
            violations.append(Violation("V2", (v, *inc), f"vertex {v} is the target of {len(inc)} arrows"))
    for a in q.arrows:
        after = q.outgoing(a.target)
        before = q.incoming(a.source)
        rel_after = [b.name for b in after if algebra.is_relation(a.name, b.name)]
        free_after = [b.name for b in after if not algebra.is_relation(a.name, b.name)]
        rel_before = [c.name for c in before if algebra.is_relation(c.name, a.name)]
        free_before = [c.name for c in before if not algebra.is_relation(c.name, a.name)]
        if len(rel_after) > 1:
            violations.append(Violation("V3", (a.name, *rel_after), f"{a.name} has relation successors {rel_after}"))
        if len(rel_before) > 1:
            violations.append(Violation("V3", (*rel_before, a.name), f"{a.name} has relation predecessors {rel_before}"))
        if len(free_after) > 1:
            violations.append(Violation("V4", (a.name, *free_after), f"{a.name} composes freely with {free_after}"))
        if len(free_before) > 1:
            violations.append(Violation("V4", (*free_before, a.name), f"{free_before} compose freely with {a.name}"))
    return GentleReport(not violations, tuple(violations))


def require_gentle(algebra: QuadraticMonomialAlgebra) -> None:
    report = validate_gentle(algebra)
    if not report.is_gentle:
        first = report.violations[0]
        raise ValidationError(f"algebra is not gentle: {first.condition} {first.message}")


# -- paths --------------------------------------------------------------------


def _relevant_arrows(graph: nx.DiGraph, starts: Iterable[str], finals: Iterable[str]) -> set[str]:
    """Arrows lying on some walk from a start arrow to a final arrow."""
    fwd: set[str] = set()
    for s in starts:
        if s not in fwd:
            fwd.add(s)
            fwd |= nx.descendants(graph, s)
    bwd: set[str] = set()
    for f in finals:
        if f not in bwd:
            bwd.add(f)
            bwd |= nx.ancestors(graph, f)
    return fwd & bwd


def has_cycle(graph: nx.DiGraph, nodes: Iterable[str] | None = None) -> bool:
    sub = graph if nodes is None else graph.subgraph(nodes)
    return not nx.is_directed_acyclic_graph(sub)


def path_space_is_finite(algebra: QuadraticMonomialAlgebra, source: str, target: str, mode: Mode) -> bool:
    graph = algebra.successor_graph(mode)
    starts = [a.name for a in algebra.arrows if a.source == source]
    finals = [a.name for a in algebra.arrows if a.target == target]
    return not has_cycle(graph, _relevant_arrows(graph, starts, finals))


def enumerate_paths(
    algebra: QuadraticMonomialAlgebra,
    source: str,
    target: str,
    mode: Mode = "nonzero",
    max_length: int | None = None,
) -> list[Path]:
    """All paths ``source -> target`` of the given mode, shortest first.

    ``mode="critical"`` keeps paths whose consecutive pairs all lie in ``I``;
    ``mode="nonzero"`` keeps paths with no consecutive pair in ``I``.  Paths of
    equal length are ordered by the declaration indices of their arrows.  With
    ``max_length=None`` the path space must be finite.
    """
    q = algebra.quiver
    for v in (source, target):
        if v not in q.vertex_index:
            raise ValidationError(f"unknown vertex {v!r}")
    graph = algebra.successor_graph(mode)
    starts = [a.name for a in algebra.arrows if a.source == source]
    finals = [a.name for a in algebra.arrows if a.target == target]
    useful = _relevant_arrows(graph, starts, finals)
    if max_length is None and has_cycle(graph, useful):
        raise InfiniteObjectError(
            f"infinitely many {mode} paths from {source} to {target}; pass max_length"
        )

    found: list[Path] = []
    if source == target:
        found.append(Path.idempotent(source))
    if max_length is not None and max_length < 1:
        return found

    frontier = [(name,) for name in starts if name in useful]
    length = 1
    while frontier:
        for word in frontier:
            if q.arrow(word[-1]).target == target:
                found.append(Path.of(q, word))
        if max_length is not None and length >= max_length:
            break
        frontier = [w + (b,) for w in frontier for b in graph.successors(w[-1]) if b in useful]
        length += 1
    idx = q.arrow_index
    found.sort(key=lambda p: (p.length, tuple(idx[a] for a in p.arrows)))
    return found


def iter_words(
    algebra: QuadraticMonomialAlgebra, mode: Mode, max_length: int
) -> Iterator[tuple[str, ...]]:
    """Every word of positive length ``<= max_length`` allowed in ``mode``."""
    graph = algebra.successor_graph(mode)
    frontier = [(a.name,) for a in algebra.arrows]
    while frontier:
        yield from frontier
        if len(frontier[0]) >= max_length:
            return
        frontier = [w + (b,) for w in frontier for b in graph.successors(w[-1])]


# -- documents ----------------------------------------------------------------


def to_document(algebra: QuadraticMonomialAlgebra, truncated_at: int | None = None) -> dict:
    doc: dict = {
        "vertices": list(algebra.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target, "degree": a.degree}
            for a in algebra.arrows
        ],
        "relations": [list(r) for r in algebra.relations],
    }
    if truncated_at is not None:
        doc["truncated"] = True
        doc["bound"] = truncated_at
    return doc


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(x, (list, dict)) for x in value)
    return not isinstance(value, dict)


def _dump(value, indent: int) -> str:
    # scalar arrays, and objects of scalars or scalar arrays, stay on one line
    if isinstance(value, list) and _is_flat(value):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict) and all(_is_flat(v) for v in value.values()):
        return json.dumps(value, ensure_ascii=False)
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, list):
        return "[\n" + ",\n".join(inner + _dump(x, indent + 1) for x in value) + "\n" + pad + "]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = (inner + json.dumps(str(k), ensure_ascii=False) + ": " + _dump(v, indent + 1) for k, v in value.items())
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    return json.dumps(value, ensure_ascii=False)


def dump_document(doc) -> str:
    """Deterministic JSON text: two-space indent, scalar arrays inline."""
    return _dump(doc, 0) + "\n"


def serialize(algebra: QuadraticMonomialAlgebra, truncated_at: int | None = None) -> str:
    """Canonical UTF-8 text of an algebra document (byte-stable)."""
    return dump_document(to_document(algebra, truncated_at))


def parse_algebra(text: str) -> QuadraticMonomialAlgebra:
    """Parse an algebra document; see ``serialize`` for the format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def from_document(doc: object) -> QuadraticMonomialAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("document must be an object with keys vertices, arrows, relations")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be an array of strings")
    arrows = []
    for i, spec in enumerate(doc.get("arrows", [])):
        if not isinstance(spec, dict):
            raise ParseError(f"arrow #{i} must be an object")
        try:
            name, source, target = spec["name"], spec["source"], spec["target"]
        except KeyError as exc:
            raise ParseError(f"arrow #{i} is missing key {exc.args[0]!r}") from None
        degree = spec.get("degree", 0)
        if not all(isinstance(x, str) for x in (name, source, target)):
            raise ParseError(f"arrow #{i}: name, source and target must be strings")
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise ParseError(f"arrow {name!r}: degree must be an integer")
        arrows.append(Arrow(name, source, target, degree))
    relations = []
    for i, rel in enumerate(doc.get("relations", [])):
        if not (isinstance(rel, list) and len(rel) == 2 and all(isinstance(x, str) for x in rel)):
            raise ParseError(f"relation #{i} must be a 2-element array of arrow names")
        relations.append((rel[0], rel[1]))
    return QuadraticMonomialAlgebra(GradedQuiver(tuple(vertices), tuple(arrows)), tuple(relations))
