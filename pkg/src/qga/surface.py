"""Marked-surface model of a gentle algebra, built from arc-end data.

Every vertex of the quiver is an arc with two ends ``(v, 0)`` and ``(v, 1)``.
An arrow ``a: i -> j`` leaves one end of ``i`` and arrives at one end of ``j``;
an incoming ``a`` and an outgoing ``b`` at the same arc share an end exactly
when ``ab`` is not a relation.  Following arrows end to end gives the ∘-points:
a linear chain is a ∘-point on the boundary, a cyclic chain a ∘-puncture.

Faces are traced by the permutation ``h -> next(swap(h))`` on ends, where
``swap`` exchanges the two ends of an arc and ``next`` moves along the chain
(wrapping around a linear chain crosses a boundary gap).  An orbit that crosses
at least one gap is a boundary component, cut by its gaps into boundary faces
that each carry one boundary •; an orbit without gaps is a •-puncture.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import networkx as nx

from .constructions import corner_algebra, idempotent_cut, quadratic_dual
from .errors import InfiniteObjectError, ValidationError
from .homology import is_proper, is_smooth
from .quiver import QuadraticMonomialAlgebra, as_idempotent, require_gentle

End = tuple[str, int]


@dataclass(frozen=True)
class Chain:
    ends: tuple[End, ...]
    cyclic: bool


@dataclass(frozen=True)
class Face:
    kind: str  # "boundary" or "puncture"
    corners: tuple[End, ...]


@dataclass(frozen=True)
class RibbonModel:
    arc_ends: dict[str, tuple[End, End]]
    end_gluing: dict[str, tuple[End, End]]
    circ_points: tuple[Chain, ...]
    faces: tuple[Face, ...]
    orbits: tuple[tuple[End, ...], ...]
    gaps: frozenset[End]

    def chain_of(self, end: End) -> int:
        for k, chain in enumerate(self.circ_points):
            if end in chain.ends:
                return k
        raise KeyError(end)


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    boundary_components: int
    boundary_circ: int
    boundary_bullet: int
    punctures_circ: int
    punctures_bullet: int
    euler_characteristic: int
    components: int = 1

    def swapped(self) -> "SurfaceInvariants":
        """The invariants with the roles of ∘ and • exchanged."""
        return SurfaceInvariants(
            self.genus,
            self.boundary_components,
            self.boundary_bullet,
            self.boundary_circ,
            self.punctures_bullet,
            self.punctures_circ,
            self.euler_characteristic,
            self.components,
        )

    def to_document(self) -> dict:
        return asdict(self)


def _assign_ends(algebra: QuadraticMonomialAlgebra, v: str) -> tuple[dict[str, int], dict[str, int]]:
    """Side (0 or 1) of every incoming and outgoing arrow at arc ``v``."""
    q = algebra.quiver
    ins = [a.name for a in q.incoming(v)]
    outs = [a.name for a in q.outgoing(v)]
    # parity graph: edge weight 0 = same end, 1 = different ends
    g = nx.Graph()
    slots = [("in", a) for a in ins] + [("out", b) for b in outs]
    g.add_nodes_from(slots)
    for a in ins:
        for b in outs:
            g.add_edge(("in", a), ("out", b), parity=int(algebra.is_relation(a, b)))
    if len(ins) == 2:
        g.add_edge(("in", ins[0]), ("in", ins[1]), parity=1)
    if len(outs) == 2:
        g.add_edge(("out", outs[0]), ("out", outs[1]), parity=1)
    side: dict[tuple[str, str], int] = {}
    for anchor in slots:
        if anchor in side:
            continue
        side[anchor] = 0
        for u, w in nx.bfs_edges(g, anchor):
            side[w] = side[u] ^ g.edges[u, w]["parity"]
    for u, w, p in g.edges(data="parity"):
        if side[u] ^ side[w] != p:
            raise ValidationError(f"no consistent end assignment at arc {v}")
    return (
        {a: side[("in", a)] for a in ins},
        {b: side[("out", b)] for b in outs},
    )


def assemble_ribbon(algebra: QuadraticMonomialAlgebra) -> RibbonModel:
    require_gentle(algebra)
    q = algebra.quiver
    arrive: dict[str, End] = {}
    leave: dict[str, End] = {}
    for v in q.vertices:
        ins, outs = _assign_ends(algebra, v)
        for a, s in ins.items():
            arrive[a] = (v, s)
        for b, s in outs.items():
            leave[b] = (v, s)
    gluing = {a.name: (leave[a.name], arrive[a.name]) for a in q.arrows}
    succ = {x: y for x, y in gluing.values()}
    pred = {y: x for x, y in gluing.values()}

    ends = [(v, s) for v in q.vertices for s in (0, 1)]
    seen: set[End] = set()
    chains: list[Chain] = []
    for h in ends:
        if h in seen or h in pred:
            continue
        run = [h]
        while run[-1] in succ:
            run.append(succ[run[-1]])
        seen.update(run)
        chains.append(Chain(tuple(run), False))
    for h in ends:
        if h in seen:
            continue
        run = [h]
        while succ[run[-1]] != h:
            run.append(succ[run[-1]])
        seen.update(run)
        chains.append(Chain(tuple(run), True))

    nxt: dict[End, End] = {}
    gaps: set[End] = set()
    for chain in chains:
        for x, y in zip(chain.ends, chain.ends[1:] + chain.ends[:1]):
            nxt[x] = y
        if not chain.cyclic:
            gaps.add(chain.ends[-1])

    def swap(h: End) -> End:
        return (h[0], 1 - h[1])

    orbits: list[tuple[End, ...]] = []
    faces: list[Face] = []
    visited: set[End] = set()
    for h in ends:
        if h in visited:
            continue
        orbit = [h]
        while True:
            k = nxt[swap(orbit[-1])]
            if k == h:
                break
            orbit.append(k)
        visited.update(orbit)
        # a corner crosses a gap when the step out of it wraps a linear chain
        crossing = [i for i, x in enumerate(orbit) if swap(x) in gaps]
        if not crossing:
            orbits.append(tuple(orbit))
            faces.append(Face("puncture", tuple(orbit)))
            continue
        start = crossing[0] + 1
        orbit = orbit[start:] + orbit[:start]
        orbits.append(tuple(orbit))
        piece: list[End] = []
        for x in orbit:
            piece.append(x)
            if swap(x) in gaps:
                faces.append(Face("boundary", tuple(piece)))
                piece = []
    return RibbonModel(
        {v: ((v, 0), (v, 1)) for v in q.vertices},
        gluing,
        tuple(chains),
        tuple(faces),
        tuple(orbits),
        frozenset(gaps),
    )


def _counts(model: RibbonModel, arcs: set[str]) -> SurfaceInvariants:
    chains = [c for c in model.circ_points if c.ends[0][0] in arcs]
    orbits = [o for o in model.orbits if o[0][0] in arcs]
    boundary_orbits = [o for o in orbits if any((x[0], 1 - x[1]) in model.gaps for x in o)]
    boundary_circ = sum(not c.cyclic for c in chains)
    punctures_circ = sum(c.cyclic for c in chains)
    boundary_bullet = sum(
        1 for o in boundary_orbits for x in o if (x[0], 1 - x[1]) in model.gaps
    )
    punctures_bullet = len(orbits) - len(boundary_orbits)
    b = len(boundary_orbits)
    chi = len(chains) - len(arcs) + punctures_bullet
    twice_genus = 2 - b - chi
    if twice_genus % 2 or twice_genus < 0:
        raise ValidationError(f"inconsistent surface data: chi={chi}, b={b}")
    return SurfaceInvariants(twice_genus // 2, b, boundary_circ, boundary_bullet,
                             punctures_circ, punctures_bullet, chi, 1)


def component_invariants(algebra: QuadraticMonomialAlgebra) -> list[SurfaceInvariants]:
    """Invariants of each connected component, in declaration order."""
    model = assemble_ribbon(algebra)
    return [_counts(model, set(comp)) for comp in algebra.quiver.components()]


def surface_invariants(algebra: QuadraticMonomialAlgebra) -> SurfaceInvariants:
    """Invariants of the marked surface; disconnected inputs give the disjoint union.

    For a disjoint union counts add up and ``genus`` is the sum of genera, so
    ``euler_characteristic = 2 * components - 2 * genus - boundary_components``.
    """
    parts = component_invariants(algebra)
    if not parts:
        return SurfaceInvariants(0, 0, 0, 0, 0, 0, 0, 0)
    return SurfaceInvariants(
        *(sum(getattr(p, f) for p in parts) for f in (
            "genus", "boundary_components", "boundary_circ", "boundary_bullet",
            "punctures_circ", "punctures_bullet", "euler_characteristic", "components",
        ))
    )


def euler_two_ways(algebra: QuadraticMonomialAlgebra) -> tuple[int, int]:
    """Euler characteristic from the ribbon of ``A`` and from that of ``A^!``.

    On the dual the roles of ∘ and • are exchanged, so its trace counts the
    •-points of ``A`` as vertices.  Both numbers agree for every gentle ``A``.
    """
    mine = surface_invariants(algebra)
    theirs = surface_invariants(quadratic_dual(algebra))
    return mine.euler_characteristic, 2 * theirs.components - 2 * theirs.genus - theirs.boundary_components


# -- cuts ---------------------------------------------------------------------


def _finite_or_raise(derived, what: str):
    if not derived.finite:
        raise InfiniteObjectError(f"{what} is infinite")
    return derived.algebra


def cut_invariants(algebra: QuadraticMonomialAlgebra, removed) -> tuple[SurfaceInvariants, SurfaceInvariants]:
    """Invariants of the surface cut along the removed arcs, and of the subsurface they span."""
    require_gentle(algebra)
    e = as_idempotent(algebra, removed).vertices
    cut = _finite_or_raise(idempotent_cut(algebra, e), "A_e")
    corner = _finite_or_raise(corner_algebra(algebra, e), "eAe")
    return surface_invariants(cut), surface_invariants(corner)


@dataclass(frozen=True)
class Status:
    smooth: bool
    proper: bool
    punctures_bullet: int | None
    punctures_circ: int | None

    @property
    def puncture_free(self) -> bool:
        return self.smooth and self.proper


@dataclass(frozen=True)
class TwoOutOfThree:
    algebra: Status
    cut: Status | None
    corner: Status | None
    consistent: bool
    note: str | None = None

    def to_document(self) -> dict:
        return asdict(self)


def _status(algebra: QuadraticMonomialAlgebra) -> Status:
    inv = surface_invariants(algebra)
    return Status(bool(is_smooth(algebra)), bool(is_proper(algebra)), inv.punctures_bullet, inv.punctures_circ)


def two_out_of_three(algebra: QuadraticMonomialAlgebra, e) -> TwoOutOfThree:
    """Smooth/proper status of ``A``, ``A_e`` and ``eAe``.

    The verdict is inconsistent when exactly two of the three are smooth and
    proper.  Infinite cut or corner algebras are flagged and left unchecked.
    """
    require_gentle(algebra)
    kept = as_idempotent(algebra, e).vertices
    cut = idempotent_cut(algebra, kept)
    corner = corner_algebra(algebra, kept)
    a = _status(algebra)
    if not (cut.finite and corner.finite):
        return TwoOutOfThree(a, None, None, True, "A_e or eAe is infinite; not checked")
    c, k = _status(cut.algebra), _status(corner.algebra)
    good = [s.puncture_free for s in (a, c, k)]
    return TwoOutOfThree(a, c, k, sum(good) != 2)


# -- rendering ----------------------------------------------------------------


def to_dot(algebra: QuadraticMonomialAlgebra) -> str:
    """Graphviz rendering: ∘-points are nodes, arcs are edges labelled by end order."""
    model = assemble_ribbon(algebra)
    lines = ["graph ribbon {", "  node [shape=circle];"]
    where: dict[End, tuple[int, int]] = {}
    for k, chain in enumerate(model.circ_points):
        for pos, h in enumerate(chain.ends):
            where[h] = (k, pos)
        kind = "puncture" if chain.cyclic else "boundary"
        lines.append(f'  c{k} [label="∘{k}", tooltip="{kind}"];')
    for v, (h0, h1) in model.arc_ends.items():
        (k0, p0), (k1, p1) = where[h0], where[h1]
        lines.append(f'  c{k0} -- c{k1} [label="{v}", taillabel="{p0}", headlabel="{p1}"];')
    for n, face in enumerate(model.faces):
        corners = " ".join(f"{v}/{s}" for v, s in face.corners)
        lines.append(f"  // face {n} {face.kind}: {corners}")
    lines.append("}")
    return "\n".join(lines) + "\n"
