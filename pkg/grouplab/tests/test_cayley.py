import math
import unittest

import pytest

from grouplab.core.alphabet import format_word
from grouplab.core.cayley import (
    ball,
    geodesic,
    geodesic_between,
    growth_table,
    path_labelled_by,
    spheres,
)
from grouplab.core.growth import fit_log_linear, trusted_window
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics
from grouplab.exceptions import BudgetExceededError


def test_small_balls(f2: FreeGroup) -> None:
    assert [format_word(w) for w in ball(f2, 1)] == ["", "a", "A", "b", "B"]
    assert len(ball(f2, 3)) == 53
    assert ball(f2, 0) == [()]
    assert ball(f2, -1) == []


def test_balls_are_nested(f2: FreeGroup) -> None:
    previous = set(ball(f2, 3))
    current = ball(f2, 4)
    assert previous <= set(current)
    for g in set(current) - previous:
        assert any(n in previous for n in f2.neighbors(g))


def test_exact_free_group_growth(f2: FreeGroup) -> None:
    table = growth_table(f2, 10)
    assert table.counts == [1 + 2 * (3**r - 1) for r in range(11)]
    assert abs(table.fitted_rate - math.log(3)) / math.log(3) < 0.02
    assert table.sphere_counts[:3] == [1, 4, 12]


def test_growth_of_z() -> None:
    assert growth_table(FreeGroup(1), 3).counts == [1, 3, 5, 7]
    # linear growth: the fitted exponential rate tends to 0
    assert growth_table(FreeGroup(1), 40).fitted_rate < 0.1


def test_rank_three_closed_form() -> None:
    f3 = FreeGroup(3)
    for r in range(5):
        assert len(ball(f3, r)) == f3.ball_size_estimate(r)


def test_growth_table_csv_shape(f2: FreeGroup) -> None:
    table = growth_table(f2, 3)
    assert table.header() == ["r", "count"]
    assert table.rows()[-1] == ["3", "53"]


def test_memory_cap(f2: FreeGroup) -> None:
    with pytest.raises(BudgetExceededError) as exc:
        ball(f2, 10, cap=1000)
    assert exc.value.kind == "memory"
    assert exc.value.requested == 1 + 2 * (3**10 - 1)


def test_free_product_spheres() -> None:
    # Z/2 * Z/3 has spheres 1, 3, 4, 6, 8, ...
    g = FreeProductOfCyclics([2, 3])
    assert [len(s) for s in spheres(g, 4)] == [1, 3, 4, 6, 8]


class TestGeodesics(unittest.TestCase):
    def setUp(self) -> None:
        self.g = FreeGroup(2)
        self.p = self.g.alphabet.parse

    def test_prefix_path(self) -> None:
        self.assertEqual(geodesic(self.g, self.p("ab")), [(), self.p("a"), self.p("ab")])
        self.assertEqual(geodesic(self.g, ()), [()])

    def test_geodesic_between(self) -> None:
        path = geodesic_between(self.g, self.p("ab"), self.p("aA"))
        self.assertEqual(path, [self.p("ab"), self.p("a"), ()])

    def test_path_labelled_by(self) -> None:
        path = path_labelled_by(self.g, [self.p("a"), self.p("A")])
        self.assertEqual(path, [(), self.p("a"), ()])

    def test_free_product_geodesic(self) -> None:
        g = FreeProductOfCyclics([2, 0])
        p = g.alphabet.parse
        self.assertEqual(geodesic(g, p("ab")), [(), p("a"), p("ab")])


def test_trusted_window() -> None:
    assert trusted_window(10) == [5, 6, 7, 8, 9, 10]
    assert trusted_window(10, r_min=4) == [4, 5, 6, 7, 8, 9, 10]
    assert trusted_window(5) == [2, 3, 4, 5]


def test_log_linear_fit() -> None:
    fit = fit_log_linear([0, 1, 2, 3], [1.0, 2.0, 4.0, 8.0])
    assert fit.factor == pytest.approx(2.0)
    assert fit.r_squared == pytest.approx(1.0)
    flat = fit_log_linear([0, 1], [0.0, 0.0])
    assert flat.points == 0
