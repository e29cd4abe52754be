from __future__ import annotations

import pytest

from qga import samples
from qga.constructions import quadratic_dual
from qga.errors import ValidationError
from qga.homology import is_proper, is_smooth
from qga.quiver import QuadraticMonomialAlgebra
from qga.surface import (
    SurfaceInvariants,
    assemble_ribbon,
    component_invariants,
    cut_invariants,
    euler_two_ways,
    surface_invariants,
    to_dot,
    two_out_of_three,
)


def test_ribbon_of_point():
    model = assemble_ribbon(samples.point())
    assert [(c.ends, c.cyclic) for c in model.circ_points] == [((("1", 0),), False), ((("1", 1),), False)]
    assert [f.kind for f in model.faces] == ["boundary", "boundary"]


def test_ribbon_genus_one():
    model = assemble_ribbon(samples.a_n(1))
    assert len(model.circ_points) == 1
    assert sorted(model.circ_points[0].ends) == [("1", 0), ("1", 1), ("2", 0), ("2", 1)]
    assert [f.kind for f in model.faces] == ["boundary"]


def test_ribbon_two_cycle():
    model = assemble_ribbon(samples.two_cycle())
    sizes = sorted(len(c.ends) for c in model.circ_points)
    assert sizes == [1, 3]
    long = next(c for c in model.circ_points if len(c.ends) == 3)
    assert ("2", 0) in long.ends and ("2", 1) in long.ends


def test_end_rule(random_algebras):
    for algebra in random_algebras:
        model = assemble_ribbon(algebra)
        ends = model.end_gluing
        for a, b in algebra.quiver.composable_pairs():
            same = ends[a][1] == ends[b][0]
            assert same == (not algebra.is_relation(a, b))
        leaving = [x for x, _ in ends.values()]
        arriving = [y for _, y in ends.values()]
        assert len(set(leaving)) == len(leaving) and len(set(arriving)) == len(arriving)
        all_ends = [h for c in model.circ_points for h in c.ends]
        assert sorted(all_ends) == sorted((v, s) for v in algebra.vertices for s in (0, 1))


def test_invariants_genus_family():
    for n in (1, 2):
        for degrees in ({}, {f"alpha{n}": 1, f"gamma{n}": 1}, {"beta1": 5, "alpha1": -2}):
            inv = surface_invariants(samples.a_n(n, degrees))
            assert (inv.genus, inv.boundary_components, inv.boundary_circ) == (n, 1, 1)
            assert inv.punctures_circ == inv.punctures_bullet == 0


def test_invariants_point():
    inv = surface_invariants(samples.point())
    assert inv == SurfaceInvariants(0, 1, 2, 2, 0, 0, 1, 1)


def test_invariants_annulus():
    inv = surface_invariants(samples.two_cycle())
    assert (inv.genus, inv.boundary_components, inv.euler_characteristic) == (0, 2, 0)
    assert inv.punctures_circ == inv.punctures_bullet == 0


def test_invariants_punctured_disks():
    y = surface_invariants(samples.polynomial())
    assert (y.genus, y.boundary_components, y.punctures_circ, y.punctures_bullet) == (0, 1, 1, 0)
    x = surface_invariants(samples.loop_square())
    assert (x.genus, x.boundary_components, x.punctures_circ, x.punctures_bullet) == (0, 1, 0, 1)


def test_disconnected_input_adds_up():
    algebra = QuadraticMonomialAlgebra.build(
        [1, 2, 3, 4, 5], [("a", 1, 2), ("b", 2, 1), ("c", 1, 2), ("x", 3, 4)], [("a", "b"), ("b", "c")]
    )
    parts = component_invariants(algebra)
    assert [(p.genus, p.boundary_components) for p in parts] == [(1, 1), (0, 1), (0, 1)]
    total = surface_invariants(algebra)
    assert total.components == 3 and total.genus == 1
    assert total.euler_characteristic == 2 * 3 - 2 * total.genus - total.boundary_components


def test_dictionary_and_duality(random_algebras):
    for algebra in random_algebras:
        inv = surface_invariants(algebra)
        assert bool(is_smooth(algebra)) == (inv.punctures_bullet == 0)
        assert bool(is_proper(algebra)) == (inv.punctures_circ == 0)
        assert surface_invariants(quadratic_dual(algebra)) == inv.swapped()
        traced, from_dual = euler_two_ways(algebra)
        assert traced == from_dual == 2 - 2 * inv.genus - inv.boundary_components
        assert inv.boundary_circ == inv.boundary_bullet


def test_requires_gentle():
    star = QuadraticMonomialAlgebra.build([0, 1, 2, 3], [("a", 0, 1), ("b", 0, 2), ("c", 0, 3)])
    with pytest.raises(ValidationError):
        surface_invariants(star)


def test_cut_invariants_figure():
    cut, corner = cut_invariants(samples.linear(), [2, 4])
    assert (cut.genus, cut.boundary_components) == (0, 1)
    assert (corner.genus, corner.boundary_components) == (0, 1)
    assert cut.boundary_circ == 4  # three arcs in a row on a disk
    assert corner.boundary_circ == 3


def test_cut_of_annulus_is_disk():
    cut, _ = cut_invariants(samples.two_cycle(), [2])
    assert (cut.genus, cut.boundary_components) == (0, 1)


def test_empty_cut_keeps_surface():
    algebra = samples.a_n(1)
    cut, corner = cut_invariants(algebra, [])
    assert cut == surface_invariants(algebra)
    assert corner == SurfaceInvariants(0, 0, 0, 0, 0, 0, 0, 0)
    _, whole = cut_invariants(algebra, algebra.vertices)
    assert whole == surface_invariants(algebra)


def test_cut_invariants_reject_non_gentle():
    with pytest.raises(ValidationError):
        cut_invariants(samples.kronecker_loop(), [2])


def test_gentle_cuts_and_corners_are_finite(random_algebras):
    # entering a relation cycle, or a relation-free one, would need a second predecessor
    for algebra in random_algebras:
        for v in algebra.vertices:
            cut_invariants(algebra, [v])


def test_two_out_of_three_examples():
    linear = two_out_of_three(samples.linear(), [2, 4])
    assert linear.consistent
    assert all(s.puncture_free for s in (linear.algebra, linear.cut, linear.corner))
    genus_one = two_out_of_three(samples.a_n(1), [2])
    assert genus_one.consistent
    assert (genus_one.corner.smooth, genus_one.corner.proper) == (False, True)
    assert (genus_one.cut.smooth, genus_one.cut.proper) == (True, False)


def test_two_out_of_three_random(random_algebras):
    checked = 0
    for algebra in random_algebras:
        for v in algebra.vertices:
            report = two_out_of_three(algebra, [v])
            assert report.consistent
            if report.cut is not None:
                checked += 1
                for status in (report.algebra, report.cut, report.corner):
                    assert status.smooth == (status.punctures_bullet == 0)
                    assert status.proper == (status.punctures_circ == 0)
    assert checked > 300


def test_dot_output():
    dot = to_dot(samples.a_n(1))
    assert dot.startswith("graph ribbon {")
    assert dot.count(" -- ") == 2
    assert to_dot(samples.a_n(1)) == dot
