"""Named example algebras and a random generator of gentle algebras."""

from __future__ import annotations

import random
from typing import Sequence

from .quiver import QuadraticMonomialAlgebra


def linear(degrees: Sequence[int] = (0, 0, 0, 0), names: Sequence[str] = ("α", "β", "γ", "δ"),
           relations: Sequence[tuple[str, str]] | None = None) -> QuadraticMonomialAlgebra:
    """``1 -> 2 -> ... -> n+1`` with the given arrow names and degrees.

    Default relations are ``αβ`` and ``γδ`` (the cut-surface example).
    """
    n = len(names)
    arrows = [(names[i], i + 1, i + 2, degrees[i]) for i in range(n)]
    if relations is None:
        relations = [(names[0], names[1]), (names[2], names[3])]
    return QuadraticMonomialAlgebra.build(range(1, n + 2), arrows, relations)


def resolution_example() -> QuadraticMonomialAlgebra:
    """``1 -α-> 2 -β-> 3 -δ-> 4 -ε-> 5`` with ``I = {αβ, βδ, δε}``, zero grading."""
    return linear((0, 0, 0, 0), ("α", "β", "δ", "ε"), [("α", "β"), ("β", "δ"), ("δ", "ε")])


def loop_square(degree: int = 0) -> QuadraticMonomialAlgebra:
    """``k<α>/(α²)`` on one vertex."""
    return QuadraticMonomialAlgebra.build(["1"], [("α", 1, 1, degree)], [("α", "α")])


def polynomial(degree: int = 0, name: str = "Y") -> QuadraticMonomialAlgebra:
    """``k[Y]``: one loop, no relations."""
    return QuadraticMonomialAlgebra.build(["1"], [(name, 1, 1, degree)], [])


def point() -> QuadraticMonomialAlgebra:
    return QuadraticMonomialAlgebra.build(["1"])


def a2(degree: int = 0) -> QuadraticMonomialAlgebra:
    """A single arrow ``α: 1 -> 2``."""
    return QuadraticMonomialAlgebra.build([1, 2], [("α", 1, 2, degree)])


def kronecker_loop(deg_alpha: int = 0, deg_beta: int = 0, deg_gamma: int = 0) -> QuadraticMonomialAlgebra:
    """``1 -α-> 2 -γ-> 3`` with a loop ``β`` at 2 and ``I = {αβ, β², βγ}``."""
    return QuadraticMonomialAlgebra.build(
        [1, 2, 3],
        [("α", 1, 2, deg_alpha), ("β", 2, 2, deg_beta), ("γ", 2, 3, deg_gamma)],
        [("α", "β"), ("β", "β"), ("β", "γ")],
    )


def two_cycle(deg_alpha: int = 0, deg_beta: int = 0) -> QuadraticMonomialAlgebra:
    """``α: 1 -> 2``, ``β: 2 -> 1`` with ``I = {αβ}``."""
    return QuadraticMonomialAlgebra.build([1, 2], [("α", 1, 2, deg_alpha), ("β", 2, 1, deg_beta)], [("α", "β")])


def a_n(n: int, degrees: dict[str, int] | None = None) -> QuadraticMonomialAlgebra:
    """The genus-``n`` family on vertices ``1..2n``.

    Arrows ``α_i, γ_i: 2i-1 -> 2i``, ``β_i: 2i -> 2i-1`` and ``δ_j: 2j -> 2j+1``;
    relations ``α_iβ_i, β_iγ_i, γ_jδ_j, δ_jα_{j+1}``.  Arrow names are
    ``alpha1, beta1, gamma1, delta1, alpha2, ...``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    degrees = degrees or {}
    arrows = []
    relations = []
    for i in range(1, n + 1):
        lo, hi = 2 * i - 1, 2 * i
        arrows += [(f"alpha{i}", lo, hi), (f"beta{i}", hi, lo), (f"gamma{i}", lo, hi)]
        relations += [(f"alpha{i}", f"beta{i}"), (f"beta{i}", f"gamma{i}")]
        if i < n:
            arrows.append((f"delta{i}", hi, hi + 1))
            relations += [(f"gamma{i}", f"delta{i}"), (f"delta{i}", f"alpha{i + 1}")]
    arrows = [(name, s, t, degrees.get(name, 0)) for name, s, t in arrows]
    return QuadraticMonomialAlgebra.build(range(1, 2 * n + 1), arrows, relations)


def random_gentle(
    rng: random.Random,
    max_vertices: int = 6,
    degree_range: tuple[int, int] = (-2, 2),
    cycle_probability: float = 0.15,
    connected: bool = True,
) -> QuadraticMonomialAlgebra:
    """A random gentle algebra built from arc-end chains.

    Every vertex has two ends.  The ends are split into chains; consecutive
    ends of a chain are joined by an arrow, and with probability
    ``cycle_probability`` a chain is closed up.  An arrow arriving at one end
    of a vertex followed by an arrow leaving the other end is a relation.
    """
    while True:
        n = rng.randint(1, max_vertices)
        ends = [(v, s) for v in range(1, n + 1) for s in (0, 1)]
        rng.shuffle(ends)
        chains = []
        i = 0
        while i < len(ends):
            size = rng.randint(1, min(4, len(ends) - i))
            chains.append(ends[i:i + size])
            i += size
        links = []
        for chain in chains:
            links += list(zip(chain, chain[1:]))
            if rng.random() < cycle_probability:
                links.append((chain[-1], chain[0]))
        arrows = []
        leaving = {}
        arriving = {}
        for k, (x, y) in enumerate(links):
            name = f"x{k}"
            arrows.append((name, x[0], y[0], rng.randint(*degree_range)))
            leaving[x] = name
            arriving[y] = name
        relations = [
            (a, leaving[(v, 1 - s)]) for (v, s), a in arriving.items() if (v, 1 - s) in leaving
        ]
        algebra = QuadraticMonomialAlgebra.build(range(1, n + 1), arrows, relations)
        if not connected or len(algebra.quiver.components()) == 1:
            return algebra


def random_suite(count: int, seed: int = 0, **kwargs) -> list[QuadraticMonomialAlgebra]:
    rng = random.Random(seed)
    return [random_gentle(rng, **kwargs) for _ in range(count)]
