"""Existence of full exceptional sequences and silting objects for smooth proper gentle algebras."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import networkx as nx

from .constructions import graded_iso, ungraded
from .errors import ValidationError
from .homology import is_proper, is_smooth
from .quiver import QuadraticMonomialAlgebra, require_gentle
from .samples import a_n
from .surface import assemble_ribbon, component_invariants

EXISTS = "Exists"
NOT_EXISTS = "NotExists"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AnShape:
    """A match of the input against the canonical genus-``n`` quiver.

    ``correspondence`` sends canonical names (``alpha1``, ``"1"``, ...) to the
    input's arrows and vertices.
    """

    n: int
    params: tuple[tuple[int, int], ...]
    correspondence: dict[str, str]

    def to_document(self) -> dict:
        return {"n": self.n, "params": [list(p) for p in self.params], "correspondence": self.correspondence}


@dataclass(frozen=True)
class ExistenceVerdict:
    question: str
    value: str
    rule: str
    evidence: dict = field(default_factory=dict)

    def to_document(self) -> dict:
        return asdict(self)


def detect_An_shape(algebra: QuadraticMonomialAlgebra) -> AnShape | None:
    """Recognise the input as a regrading of the canonical genus-``n`` algebra.

    On a match, ``a_i = |alpha_i| + |beta_i|`` and ``b_i = |beta_i| + |gamma_i|``
    are read off through the isomorphism.
    """
    count = len(algebra.vertices)
    if count == 0 or count % 2:
        return None
    n = count // 2
    canonical = a_n(n)
    iso = graded_iso(canonical, ungraded(algebra))
    if iso is None:
        return None
    deg = {name: algebra.quiver.arrow(iso.arrow_map[name]).degree for name in iso.arrow_map}
    params = tuple(
        (deg[f"alpha{i}"] + deg[f"beta{i}"], deg[f"beta{i}"] + deg[f"gamma{i}"]) for i in range(1, n + 1)
    )
    return AnShape(n, params, {**dict(iso.vertex_map), **dict(iso.arrow_map)})


def _require_smooth_proper(algebra: QuadraticMonomialAlgebra) -> None:
    require_gentle(algebra)
    if not (is_smooth(algebra) and is_proper(algebra)):
        raise ValidationError("this classification needs a smooth and proper gentle algebra")


def _one_boundary_one_point(inv) -> bool:
    return inv.boundary_components == 1 and inv.boundary_circ == 1


def has_full_exceptional_sequence(algebra: QuadraticMonomialAlgebra) -> bool:
    """False exactly when some component is a surface of genus >= 1 with one boundary and one ∘."""
    _require_smooth_proper(algebra)
    return not any(inv.genus >= 1 and _one_boundary_one_point(inv) for inv in component_invariants(algebra))


def exceptional_sequence_acyclic(algebra: QuadraticMonomialAlgebra) -> list[str] | None:
    """Peel sources one at a time; ``None`` when the quiver has an oriented cycle.

    Among available sources the earliest declared vertex goes first.
    """
    g = nx.DiGraph()
    g.add_nodes_from(algebra.vertices)
    g.add_edges_from((a.source, a.target) for a in algebra.arrows)
    index = algebra.quiver.vertex_index
    try:
        return list(nx.lexicographical_topological_sort(g, key=index.__getitem__))
    except nx.NetworkXUnfeasible:
        return None


def silting_existence(algebra: QuadraticMonomialAlgebra, question: str = "silting") -> ExistenceVerdict:
    """Whether ``per(A)`` has a silting object (equivalently, an SMC in ``D^b(A)``).

    R1: a full exceptional sequence gives one.
    R2: the literal genus-``n`` shape with ``a_i != 1`` or ``b_i != 1`` for every ``i``.
    R3: genus one with ``a_1 = b_1 = 1`` has none.
    R4: anything else is undecided.
    """
    _require_smooth_proper(algebra)
    if has_full_exceptional_sequence(algebra):
        evidence = {}
        sequence = exceptional_sequence_acyclic(algebra)
        if sequence is not None:
            evidence["sequence"] = sequence
        return ExistenceVerdict(question, EXISTS, "R1", evidence)
    shape = detect_An_shape(algebra)
    surfaces = [asdict(inv) for inv in component_invariants(algebra)]
    if shape is not None:
        evidence = {"n": shape.n, "params": [list(p) for p in shape.params]}
        if all(a != 1 or b != 1 for a, b in shape.params):
            return ExistenceVerdict(question, EXISTS, "R2", evidence)
        if shape.n == 1:
            return ExistenceVerdict(question, NOT_EXISTS, "R3", evidence)
        return ExistenceVerdict(question, UNKNOWN, "R4", {**evidence, "surfaces": surfaces})
    return ExistenceVerdict(question, UNKNOWN, "R4", {"surfaces": surfaces})


@dataclass(frozen=True)
class G11Report:
    all_corners_nontrivial: bool
    all_arcs_loops: bool
    one_boundary_one_circ: bool

    @property
    def agree(self) -> bool:
        return self.all_corners_nontrivial == self.all_arcs_loops == self.one_boundary_one_circ

    def to_document(self) -> dict:
        return {**asdict(self), "agree": self.agree}


def corner_is_nontrivial(algebra: QuadraticMonomialAlgebra, v: str) -> bool:
    """Whether some nonzero path of positive length starts and ends at ``v``."""
    graph = algebra.successor_graph("nonzero")
    finals = {a.name for a in algebra.quiver.incoming(v)}
    for a in algebra.quiver.outgoing(v):
        if a.name in finals or finals & nx.descendants(graph, a.name):
            return True
    return False


def g11_equivalences(algebra: QuadraticMonomialAlgebra) -> G11Report:
    """Evaluate the three conditions that coincide for smooth proper gentle algebras.

    (1) ``e_i A e_i != k`` for every vertex; (2) both ends of every arc lie on
    the same ∘-point; (3) one boundary component carrying one ∘.  Condition
    (3) is required of every connected component.
    """
    _require_smooth_proper(algebra)
    model = assemble_ribbon(algebra)
    corners = all(corner_is_nontrivial(algebra, v) for v in algebra.vertices)
    loops = all(model.chain_of(h0) == model.chain_of(h1) for h0, h1 in model.arc_ends.values())
    surface = all(_one_boundary_one_point(inv) for inv in component_invariants(algebra))
    return G11Report(corners, loops, surface)


def classify(algebra: QuadraticMonomialAlgebra) -> dict:
    """The combined report used by the command line."""
    _require_smooth_proper(algebra)
    exceptional = has_full_exceptional_sequence(algebra)
    shape = detect_An_shape(algebra)
    silting = silting_existence(algebra, "silting")
    smc = silting_existence(algebra, "smc")
    return {
        "exceptional": exceptional,
        "sequence": exceptional_sequence_acyclic(algebra),
        "shape": None if shape is None else shape.to_document(),
        "silting": silting.to_document(),
        "smc": smc.to_document(),
        "g11": g11_equivalences(algebra).to_document(),
    }
