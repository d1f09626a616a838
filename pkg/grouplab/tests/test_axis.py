import unittest

import pytest

from grouplab.contracting.axis import (
    Axis,
    contraction_constant,
    distance_to_axis,
    primitive_root,
    project,
    projection_diameter,
    sample_pairs,
)
from grouplab.core.alphabet import format_word
from grouplab.core.cayley import ball, geodesic
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics
from grouplab.exceptions import (
    InconclusiveProjectionError,
    InvalidWordError,
    UnsupportedOracleError,
)
from grouplab.subgroups.stallings import subgroup_elements

from helpers import subgroup

F2 = FreeGroup(2)
p = F2.alphabet.parse


@pytest.mark.parametrize(
    "f, root",
    [("a^6", "a"), ("abab", "ab"), ("ab", "ab"), ("ba^2B", "baB"), ("A^3", "A")],
)
def test_primitive_root(f: str, root: str) -> None:
    assert format_word(primitive_root(F2, p(f))) == root


def test_primitive_root_errors() -> None:
    with pytest.raises(InvalidWordError):
        primitive_root(F2, p("aA"))
    with pytest.raises(UnsupportedOracleError):
        primitive_root(FreeProductOfCyclics([2, 0]), (2,))


class TestAxis(unittest.TestCase):
    def setUp(self) -> None:
        self.axis = Axis(F2, p("a"))

    def test_projection_examples(self) -> None:
        self.assertEqual(project(self.axis, p("ba^3")), frozenset({()}))
        self.assertEqual(project(self.axis, p("a^5b^2")), frozenset({p("a^5")}))
        self.assertEqual(project(self.axis, p("a^2")), frozenset({p("a^2")}))
        self.assertEqual(distance_to_axis(self.axis, p("a^5b^2")), 2)

    def test_window_grows(self) -> None:
        self.assertEqual(project(self.axis, p("a^20b")), frozenset({p("a^20")}))

    def test_window_cap(self) -> None:
        with self.assertRaises(InconclusiveProjectionError) as ctx:
            project(self.axis, p("a^100"))
        self.assertEqual(ctx.exception.window, 64)

    def test_diameters(self) -> None:
        self.assertEqual(projection_diameter(self.axis, geodesic(F2, p("b^5"))), 0)
        self.assertEqual(projection_diameter(self.axis, [(), p("a^3")]), 3)
        self.assertEqual(projection_diameter(self.axis, geodesic(F2, p("a^3b^2"))), 3)

    def test_same_as(self) -> None:
        self.assertTrue(self.axis.same_as(Axis(F2, p("a^2"))))
        self.assertTrue(self.axis.same_as(Axis(F2, p("A"), p("a^3"))))
        self.assertFalse(self.axis.same_as(Axis(F2, p("a"), p("b"))))
        self.assertFalse(self.axis.same_as(Axis(F2, p("ab"))))

    def test_contains(self) -> None:
        translate = Axis(F2, p("a"), p("ba"))
        self.assertTrue(translate.contains(p("ba^4")))
        self.assertTrue(translate.contains(p("b")))
        self.assertFalse(translate.contains(()))

    def test_trivial_axis(self) -> None:
        with self.assertRaises(InvalidWordError):
            Axis(F2, ())


def test_tree_projections_are_singletons() -> None:
    axis = Axis(F2, p("a"))
    assert all(len(project(axis, x)) == 1 for x in ball(F2, 6))


def test_projection_is_equivariant() -> None:
    axis = Axis(F2, p("ab"))
    for g in ball(F2, 2):
        moved = axis.translated(g)
        for x in ball(F2, 3):
            expected = {F2.multiply(g, v) for v in project(axis, x)}
            assert project(moved, F2.multiply(g, x)) == expected


def test_cyclic_subgroup_projects_to_a_point() -> None:
    axis = Axis(F2, p("a"))
    for h in subgroup_elements(subgroup("b"), 8):
        assert projection_diameter(axis, geodesic(F2, h)) == 0


def test_contraction_constants() -> None:
    assert contraction_constant(Axis(F2, p("a")), 3) == 0
    assert contraction_constant(Axis(F2, p("ab")), 4) <= 2
    assert contraction_constant(Axis(FreeGroup(1), (1,)), 5) == 0


def test_sample_pairs() -> None:
    points = [(i,) for i in range(1, 6)]
    assert len(sample_pairs(points)) == 10
    assert len(sample_pairs(points, max_pairs=5)) == 5
    assert sample_pairs([()]) == []
