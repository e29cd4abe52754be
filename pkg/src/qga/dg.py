"""Partial cofibrant dg resolutions ``A_J`` of quadratic monomial algebras.

For ``J`` a subset of the relations, the generators of ``A_J`` are the words
``[a1...an]`` whose consecutive pairs lie in ``J`` (every single arrow is such
a word).  The generator has degree ``sum |ai| - n + 1``, products whose
junction lies in ``I \\ J`` vanish, and

    d[a1...an] = sum_i (-1)^{|[a1...ai]|} [a1...ai][a(i+1)...an].

All scalars are ``fractions.Fraction``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import networkx as nx

from .errors import InfiniteObjectError, ValidationError
from .quiver import Arrow, GradedQuiver, QuadraticMonomialAlgebra, has_cycle, to_document

Monomial = tuple[str, ...]


class FormalCombination:
    """A finite rational combination of generator paths; zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for path, coeff in items:
            acc[tuple(path)] += Fraction(coeff)
        self._terms = {p: c for p, c in acc.items() if c != 0}

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalCombination):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "FormalCombination") -> "FormalCombination":
        return FormalCombination(list(self) + list(other))

    def __sub__(self, other: "FormalCombination") -> "FormalCombination":
        return self + other.scaled(-1)

    def scaled(self, c) -> "FormalCombination":
        return FormalCombination((p, c * v) for p, v in self)

    def coefficient(self, path: Monomial) -> Fraction:
        return self._terms.get(tuple(path), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})" + "".join(p) for p, c in self._terms.items())


def generator_name(word: Iterable[str]) -> str:
    return "[" + ".".join(word) + "]"


@dataclass(frozen=True)
class DgQuiverAlgebra:
    quiver: GradedQuiver
    relations: tuple[tuple[str, str], ...]
    differential: Mapping[str, FormalCombination] = field(compare=False)
    words: Mapping[str, tuple[str, ...]] = field(compare=False)
    truncated: bool = False
    bound: int | None = None

    @property
    def algebra(self) -> QuadraticMonomialAlgebra:
        """The underlying graded algebra (forgetting the differential)."""
        return QuadraticMonomialAlgebra(self.quiver, self.relations)

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.quiver.arrows)

    def degree(self, monomial: Monomial) -> int:
        return sum(self.quiver.arrow(g).degree for g in monomial)

    def vanishes(self, monomial: Monomial) -> bool:
        rels = self._relation_set
        return any((x, y) in rels for x, y in zip(monomial, monomial[1:]))

    @property
    def _relation_set(self) -> frozenset:
        return frozenset(self.relations)

    def word_of(self, monomial: Monomial) -> tuple[str, ...]:
        return tuple(a for g in monomial for a in self.words[g])

    def d(self, x: FormalCombination) -> FormalCombination:
        """Extend the differential to products by the graded Leibniz rule, modulo ``I'``."""
        out: list[tuple[Monomial, Fraction]] = []
        for mono, coeff in x:
            sign_degree = 0
            for k, g in enumerate(mono):
                sign = -1 if sign_degree % 2 else 1
                for inner, c in self.differential.get(g, FormalCombination()):
                    term = mono[:k] + inner + mono[k + 1:]
                    if not self.vanishes(term):
                        out.append((term, sign * coeff * c))
                sign_degree += self.quiver.arrow(g).degree
        return FormalCombination(out)

    def to_document(self) -> dict:
        doc = to_document(self.algebra, self.bound if self.truncated else None)
        doc["differential"] = [
            {
                "generator": g,
                "terms": [{"path": list(p), "coeff": str(c)} for p, c in self.differential[g]],
            }
            for g in self.generators
            if self.differential[g]
        ]
        return doc


def _j_graph(algebra: QuadraticMonomialAlgebra, J: Iterable[tuple[str, str]]) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(a.name for a in algebra.arrows)
    g.add_edges_from(J)
    return g


def _check_subset(algebra: QuadraticMonomialAlgebra, J) -> frozenset[tuple[str, str]]:
    J = frozenset(tuple(r) for r in J)
    extra = J - algebra.relation_set
    if extra:
        raise ValidationError(f"J must be a subset of the relations; not relations: {sorted(extra)}")
    return J


def is_AJ_finite(algebra: QuadraticMonomialAlgebra, J) -> bool:
    """True when only finitely many ``J``-words exist, i.e. ``J`` has no relation cycle."""
    J = _check_subset(algebra, J)
    return not has_cycle(_j_graph(algebra, J))


def j_words(algebra: QuadraticMonomialAlgebra, J, max_length: int | None = None) -> list[tuple[str, ...]]:
    J = _check_subset(algebra, J)
    graph = _j_graph(algebra, J)
    if max_length is None and has_cycle(graph):
        raise InfiniteObjectError("A_J has infinitely many generators; pass max_word_length")
    idx = algebra.quiver.arrow_index
    words = []
    frontier = [(a.name,) for a in algebra.arrows]
    while frontier:
        words += sorted(frontier, key=lambda w: tuple(idx[a] for a in w))
        if max_length is not None and len(frontier[0]) >= max_length:
            break
        frontier = [w + (b,) for w in frontier for b in graph.successors(w[-1])]
    return words


def build_AJ(algebra: QuadraticMonomialAlgebra, J, max_word_length: int | None = None) -> DgQuiverAlgebra:
    J = _check_subset(algebra, J)
    finite = is_AJ_finite(algebra, J)
    q = algebra.quiver
    words = j_words(algebra, J, None if finite else max_word_length)
    if finite and max_word_length is not None:
        longest = max((len(w) for w in words), default=0)
        if longest > max_word_length:
            words = [w for w in words if len(w) <= max_word_length]
            finite = False
    by_word = {w: generator_name(w) for w in words}
    degree = {w: sum(q.arrow(a).degree for a in w) - len(w) + 1 for w in words}
    arrows = tuple(
        Arrow(by_word[w], q.arrow(w[0]).source, q.arrow(w[-1]).target, degree[w]) for w in words
    )
    free = algebra.relation_set - J
    relations = tuple(
        (by_word[u], by_word[v])
        for u in words
        for v in words
        if (u[-1], v[0]) in free
    )
    differential = {}
    for w in words:
        terms = []
        for i in range(1, len(w)):
            sign = -1 if degree[w[:i]] % 2 else 1
            terms.append(((by_word[w[:i]], by_word[w[i:]]), Fraction(sign)))
        differential[by_word[w]] = FormalCombination(terms)
    return DgQuiverAlgebra(
        GradedQuiver(q.vertices, arrows),
        relations,
        differential,
        {by_word[w]: w for w in words},
        truncated=not finite,
        bound=max_word_length,
    )


@dataclass(frozen=True)
class DifferentialCheck:
    ok: bool
    failing_generator: str | None = None
    residual: FormalCombination | None = None


def check_differential(dg: DgQuiverAlgebra) -> DifferentialCheck:
    """Verify ``d∘d = 0`` on every generator, expanding products by Leibniz."""
    for g in dg.generators:
        dd = dg.d(dg.d(FormalCombination({(g,): 1})))
        if dd:
            return DifferentialCheck(False, g, dd)
    return DifferentialCheck(True)


def phi(dg: DgQuiverAlgebra, algebra: QuadraticMonomialAlgebra, x: FormalCombination) -> FormalCombination:
    """The comparison map ``A_J -> A``: keep single-arrow generators, reduce modulo ``I``."""
    out = []
    for mono, c in x:
        word = []
        for g in mono:
            w = dg.words[g]
            if len(w) != 1:
                break
            word.append(w[0])
        else:
            if not any(algebra.is_relation(a, b) for a, b in zip(word, word[1:])):
                out.append((tuple(word), c))
    return FormalCombination(out)


def junction_count(J: frozenset, word: tuple[str, ...]) -> int:
    """Number of consecutive pairs of ``word`` lying in ``J``."""
    return sum((a, b) in J for a, b in zip(word, word[1:]))


def psi(dg: DgQuiverAlgebra, J: frozenset, x: FormalCombination) -> FormalCombination:
    """The contracting homotopy on the kernel of ``phi``.

    A monomial ``g0 g1 ... gs`` is sent to ``1/m`` times the signed sum over
    junctions ``i`` whose pair lies in ``J`` of the monomial with ``g(i-1)`` and
    ``gi`` merged; the sign is ``(-1)`` to the total degree of ``g0 ... g(i-1)``
    and ``m`` counts the ``J``-pairs of the underlying word.
    """
    by_word = {w: g for g, w in dg.words.items()}
    out = []
    for mono, c in x:
        m = junction_count(J, dg.word_of(mono))
        if m == 0:
            continue
        prefix_degree = 0
        for i in range(1, len(mono)):
            prefix_degree += dg.quiver.arrow(mono[i - 1]).degree
            left, right = dg.words[mono[i - 1]], dg.words[mono[i]]
            if (left[-1], right[0]) not in J:
                continue
            merged = by_word.get(left + right)
            if merged is None:
                raise InfiniteObjectError(f"merged generator {generator_name(left + right)} exceeds the bound")
            sign = -1 if prefix_degree % 2 else 1
            out.append((mono[: i - 1] + (merged,) + mono[i + 1:], c * sign / m))
    return FormalCombination(out)


def kernel_monomials(dg: DgQuiverAlgebra, J: frozenset, max_path_length: int) -> list[Monomial]:
    """Nonzero monomials of ``A_J`` with word length ``<= max_path_length`` spanning ``ker phi``."""
    q = dg.quiver
    length = {g: len(w) for g, w in dg.words.items()}
    outgoing: dict[str, list[str]] = defaultdict(list)
    for a in q.arrows:
        outgoing[a.source].append(a.name)
    result = []
    stack = [((g,), length[g]) for g in reversed(dg.generators) if length[g] <= max_path_length]
    while stack:
        mono, n = stack.pop()
        if junction_count(J, dg.word_of(mono)) > 0:
            result.append(mono)
        last = mono[-1]
        for h in reversed(outgoing[q.arrow(last).target]):
            if n + length[h] <= max_path_length and not dg.vanishes((last, h)):
                stack.append((mono + (h,), n + length[h]))
    result.sort(key=lambda m: (len(dg.word_of(m)), len(m), m))
    return result


@dataclass
class HomotopyReport:
    checked: int
    failures: list[tuple[Monomial, FormalCombination]]
    bound: int
    note: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def check_homotopy(algebra: QuadraticMonomialAlgebra, J, max_path_length: int) -> HomotopyReport:
    """Verify ``d psi + psi d = id`` on every kernel monomial up to the length bound.

    Both ``d`` and ``psi`` preserve the underlying arrow word, so every image of
    an in-bound monomial stays in bound.
    """
    J = _check_subset(algebra, J)
    dg = build_AJ(algebra, J, max_path_length)
    monomials = kernel_monomials(dg, J, max_path_length)
    failures = []
    for mono in monomials:
        x = FormalCombination({mono: 1})
        lhs = dg.d(psi(dg, J, x)) + psi(dg, J, dg.d(x))
        if lhs != x:
            failures.append((mono, lhs - x))
    note = None
    if not monomials:
        note = "kernel of phi is zero" if not J else f"no kernel monomial of length <= {max_path_length}"
    return HomotopyReport(len(monomials), failures, max_path_length, note)


def with_differential(dg: DgQuiverAlgebra, generator: str, value: FormalCombination) -> DgQuiverAlgebra:
    diff = dict(dg.differential)
    diff[generator] = value
    return replace(dg, differential=diff)
