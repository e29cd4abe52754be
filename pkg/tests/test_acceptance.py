"""One test per acceptance criterion; conftest prints a PASS/FAIL line for each."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from qga import samples
from qga.classify import EXISTS, NOT_EXISTS, g11_equivalences, has_full_exceptional_sequence, silting_existence
from qga.classify import exceptional_sequence_acyclic
from qga.cli import main
from qga.constructions import (
    check_iterated_cut,
    corner_algebra,
    corner_via_dual,
    graded_iso,
    idempotent_cut,
    quadratic_dual,
)
from qga.dg import FormalCombination, build_AJ, check_differential, check_homotopy, is_AJ_finite
from qga.errors import InfiniteObjectError
from qga.homology import ext_table, is_proper, is_smooth, koszul_dimensions
from qga.quiver import QuadraticMonomialAlgebra, dump_document, serialize
from qga.surface import euler_two_ways, surface_invariants, two_out_of_three

GOLDEN = Path(__file__).parent / "golden"
acceptance = pytest.mark.acceptance


@acceptance(1, "partial resolution of the five-vertex linear algebra")
def test_ac1_worked_resolution():
    algebra = samples.resolution_example()
    dg = build_AJ(algebra, [("α", "β"), ("β", "δ")])
    assert set(dg.generators) == {"[α]", "[β]", "[δ]", "[ε]", "[α.β]", "[β.δ]", "[α.β.δ]"}
    assert [dg.quiver.arrow(g).degree for g in ("[α.β]", "[β.δ]", "[α.β.δ]")] == [-1, -1, -2]
    assert dg.differential["[α.β]"] == FormalCombination({("[α]", "[β]"): 1})
    assert dg.differential["[β.δ]"] == FormalCombination({("[β]", "[δ]"): 1})
    assert dg.differential["[α.β.δ]"] == FormalCombination({("[α]", "[β.δ]"): 1, ("[α.β]", "[δ]"): -1})
    assert set(dg.relations) == {("[δ]", "[ε]"), ("[β.δ]", "[ε]"), ("[α.β.δ]", "[ε]")}
    assert dump_document(dg.to_document()) == (GOLDEN / "resolution.json").read_text(encoding="utf-8")


@acceptance(2, "loop example: infinite, truncated generators, d'^2 = 0 and homotopy")
def test_ac2_loop():
    loop = samples.loop_square()
    assert not is_AJ_finite(loop, loop.relations)
    with pytest.raises(InfiniteObjectError):
        build_AJ(loop, loop.relations)
    dg = build_AJ(loop, loop.relations, 6)
    assert dg.truncated
    assert dg.generators == tuple("[" + ".".join("α" * n) + "]" for n in range(1, 7))
    for n, g in enumerate(dg.generators, start=1):
        assert dg.quiver.arrow(g).degree == 1 - n
        # d'[α^n] = sum over splits of (-1)^{|[α^i]|} [α^i][α^(n-i)]
        expected = {(dg.generators[i - 1], dg.generators[n - i - 1]): (-1) ** (1 - i) for i in range(1, n)}
        assert dg.differential[g] == FormalCombination(expected)
    assert check_differential(dg).ok
    report = check_homotopy(loop, loop.relations, 6)
    assert report.ok and report.checked > 0


@acceptance(3, "Kronecker cut yields the infinite degree family")
def test_ac3_kronecker():
    for degs in ((0, 0, 0), (1, 2, 3), (-1, 3, 0)):
        a, b, c = degs
        cut = idempotent_cut(samples.kronecker_loop(*degs), ["2"], 7)
        assert not cut.finite
        assert cut.algebra.vertices == ("1", "3")
        expected = [a + n * b + c - n - 1 for n in range(1, 6)]
        assert [x.degree for x in cut.algebra.arrows] == expected
        assert all(cut.words[x.name] == ("α",) + ("β",) * n + ("γ",) for n, x in enumerate(cut.algebra.arrows, 1))
    with pytest.raises(InfiniteObjectError):
        idempotent_cut(samples.kronecker_loop(), ["2"])


@acceptance(4, "two-cycle counterexample: corner k[X]/X^2, cut k[Y], flags consistent")
def test_ac4_two_cycle():
    algebra = samples.two_cycle()
    corner = corner_algebra(algebra, ["2"]).algebra
    cut = idempotent_cut(algebra, ["2"]).algebra
    assert graded_iso(corner, samples.loop_square(0)) is not None
    assert graded_iso(cut, samples.polynomial(-1)) is not None
    assert (bool(is_smooth(algebra)), bool(is_proper(algebra))) == (True, True)
    assert (bool(is_smooth(corner)), bool(is_proper(corner))) == (False, True)
    assert (bool(is_smooth(cut)), bool(is_proper(cut))) == (True, False)
    report = two_out_of_three(algebra, ["2"])
    assert report.consistent


@acceptance(5, "recollement figure at (0,0,0,0) and (1,2,3,4)")
def test_ac5_recollement(tmp_path, capsys):
    for a, b, c, d in ((0, 0, 0, 0), (1, 2, 3, 4)):
        path = tmp_path / "linear.json"
        path.write_text(serialize(samples.linear((a, b, c, d))), encoding="utf-8")
        assert main(["recollement", str(path), "--remove", "2,4", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        cut, corner = report["cut"], report["corner"]
        assert [(x["name"], x["degree"]) for x in cut["arrows"]] == [("[α.β]", a + b - 1), ("[γ.δ]", c + d - 1)]
        assert cut["relations"] == []
        assert [(x["name"], x["degree"]) for x in corner["arrows"]] == [("[β.γ]", b + c)]


@acceptance(6, "duality suite on >= 200 random gentle algebras")
def test_ac6_duality(random_algebras):
    assert len(random_algebras) >= 200
    failures = []
    for k, algebra in enumerate(random_algebras):
        if quadratic_dual(quadratic_dual(algebra)) != algebra:
            failures.append((k, "involution"))
        vs = algebra.vertices
        for kept in (vs[: len(vs) // 2], vs[1::2]):
            direct = corner_algebra(algebra, kept).algebra
            if graded_iso(direct, corner_via_dual(algebra, kept).algebra) is None:
                failures.append((k, "corner", kept))
        if len(vs) >= 3:
            if not check_iterated_cut(algebra, [vs[0]], [vs[-1]]).holds:
                failures.append((k, "iterated cut"))
    assert failures == []


@acceptance(7, "Koszul dictionary on >= 50 random smooth algebras")
def test_ac7_koszul(random_algebras):
    smooth = [a for a in random_algebras if is_smooth(a)]
    assert len(smooth) >= 50
    for algebra in smooth:
        assert ext_table(algebra).dimensions() == koszul_dimensions(quadratic_dual(algebra))


@acceptance(8, "surface dictionary, Euler characteristic two ways, dual swap")
def test_ac8_surface(random_algebras):
    for algebra in random_algebras:
        inv = surface_invariants(algebra)
        assert bool(is_smooth(algebra)) == (inv.punctures_bullet == 0)
        assert bool(is_proper(algebra)) == (inv.punctures_circ == 0)
        traced, from_dual = euler_two_ways(algebra)
        assert traced == from_dual == 2 * inv.components - 2 * inv.genus - inv.boundary_components
        assert surface_invariants(quadratic_dual(algebra)) == inv.swapped()


GRADINGS = (
    {},
    {"alpha{i}": 1, "gamma{i}": 1},
    {"alpha{i}": -2, "beta{i}": 3, "delta{i}": 5},
)


@acceptance(9, "genus-n family has (g, b, boundary ∘) = (n, 1, 1)")
def test_ac9_family_geometry():
    for n in (1, 2):
        for grading in GRADINGS:
            degrees = {k.format(i=i): v for k, v in grading.items() for i in range(1, n + 1)}
            inv = surface_invariants(samples.a_n(n, degrees))
            assert (inv.genus, inv.boundary_components, inv.boundary_circ) == (n, 1, 1)


@acceptance(10, "classification of the worked examples")
def test_ac10_classification():
    genus_one = samples.a_n(1, {"alpha1": 1, "gamma1": 1})  # (a1, b1) = (1, 1)
    assert not has_full_exceptional_sequence(genus_one)
    assert silting_existence(genus_one).value == NOT_EXISTS
    assert silting_existence(samples.a_n(1, {"gamma1": 1})).value == EXISTS  # (0, 1)
    for algebra, order in ((samples.a2(), ["1", "2"]), (samples.linear(), ["1", "2", "3", "4", "5"])):
        assert has_full_exceptional_sequence(algebra)
        assert exceptional_sequence_acyclic(algebra) == order
        verdict = silting_existence(algebra)
        assert verdict.value == EXISTS and verdict.evidence["sequence"] == order


def _restricted(algebra: QuadraticMonomialAlgebra, kept) -> bool:
    corner = corner_algebra(algebra, kept).algebra
    cut = idempotent_cut(algebra, kept).algebra
    return bool(is_smooth(corner)) == bool(is_proper(cut))


@acceptance(11, "g11 equivalence and the corner/cut lemma on the random suite")
def test_ac11_g11_and_corner_lemma(random_algebras):
    checked = 0
    for algebra in random_algebras:
        if not (is_smooth(algebra) and is_proper(algebra)):
            continue
        assert g11_equivalences(algebra).agree
        vs = algebra.vertices
        for kept in {tuple(vs[:1]), tuple(vs[: len(vs) // 2]), tuple(vs[1::2])}:
            if kept:
                assert _restricted(algebra, kept)
                checked += 1
    assert checked > 100
