import unittest

import pytest

from grouplab.core.alphabet import format_word
from grouplab.core.cayley import ball
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics
from grouplab.exceptions import UnsupportedOracleError
from grouplab.subgroups.stallings import (
    is_infinite_index,
    membership,
    stallings_from_generators,
    subgroup_elements,
    subgroup_index,
    subgroup_intersects_cyclic,
    trivial_subgroup,
)

from helpers import subgroup


class TestFolding(unittest.TestCase):
    def test_cyclic_subgroup_is_a_loop(self) -> None:
        H = subgroup("a")
        self.assertEqual(H.num_vertices, 1)
        self.assertEqual(H.edges(), [(0, 1, 0)])

    def test_a_squared_b(self) -> None:
        H = subgroup("a^2", "b")
        self.assertEqual(H.num_vertices, 2)
        self.assertEqual(sorted(H.edges()), [(0, 1, 1), (0, 2, 0), (1, 1, 0)])
        self.assertTrue(H.is_folded())
        self.assertTrue(H.is_core())
        self.assertEqual(sorted(format_word(w) for w in H.basis()), ["aa", "b"])

    def test_redundant_generators_fold_away(self) -> None:
        H = subgroup("a", "a^3", "1")
        self.assertEqual(H.num_vertices, 1)
        self.assertEqual(len(H.basis()), 1)

    def test_conjugate_generator(self) -> None:
        H = subgroup("a", "bab^-1")
        self.assertTrue(H.is_folded())
        self.assertTrue(H.is_core())
        for w in ("a", "bAB", "abaBA"):
            self.assertTrue(membership(H, FreeGroup(2).alphabet.parse(w)))
        self.assertFalse(membership(H, FreeGroup(2).alphabet.parse("b")))

    def test_no_generators(self) -> None:
        self.assertEqual(subgroup().num_vertices, 1)
        self.assertEqual(subgroup("aA").edges(), [])

    def test_non_free_oracle(self) -> None:
        with self.assertRaises(UnsupportedOracleError):
            stallings_from_generators(FreeProductOfCyclics([2, 0]), [(1,)])


def test_membership_examples(f2: FreeGroup) -> None:
    H = subgroup("a^2", "b")
    p = f2.alphabet.parse
    assert not membership(H, p("abab"))
    assert membership(H, p("a^2ba^-2"))
    assert membership(H, ())


def test_membership_matches_products(f2: FreeGroup) -> None:
    H = subgroup("a^2", "b")
    gens = [f2.alphabet.parse(w) for w in ("aa", "AA", "b", "B")]
    products = {()}
    frontier = {()}
    for _ in range(4):
        frontier = {f2.multiply(w, g) for w in frontier for g in gens}
        products |= frontier
    assert all(membership(H, w) for w in products)


def test_index() -> None:
    assert is_infinite_index(subgroup("a^2", "b"))
    assert not is_infinite_index(subgroup("a^2", "b", "aba^-1"))
    assert subgroup_index(subgroup("a^2", "b", "aba^-1")) == 2
    assert not is_infinite_index(subgroup("a", "b"))
    assert subgroup_index(subgroup("a", "b")) == 1
    assert is_infinite_index(trivial_subgroup(2))
    assert subgroup_index(subgroup("a")) is None


@pytest.mark.parametrize(
    "gens, u, expected",
    [
        (("a^2", "b"), "a", 2),
        (("b",), "a", None),
        (("a",), "a", 1),
        (("ba^2B",), "baB", 2),
        ((), "ab", None),
    ],
)
def test_intersects_cyclic(gens: tuple, u: str, expected: object) -> None:
    H = subgroup(*gens)
    assert subgroup_intersects_cyclic(H, FreeGroup(2).alphabet.parse(u)) == expected


def test_subgroup_elements(f2: FreeGroup) -> None:
    cyclic = subgroup_elements(subgroup("a"), 2)
    assert [format_word(w) for w in cyclic] == ["", "a", "A", "aa", "AA"]
    H = subgroup("a^2", "b")
    expected = [w for w in ball(f2, 5) if membership(H, w)]
    assert sorted(subgroup_elements(H, 5), key=f2.alphabet.shortlex_key) == expected
    assert subgroup_elements(trivial_subgroup(2), 3) == [()]
