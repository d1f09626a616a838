import unittest
from pathlib import Path

import pytest

from grouplab.config.loader import (
    apply_overrides,
    default_power,
    load_config,
    parse_config,
    render_config,
)
from grouplab.config.nodes import GroupDirective, ParamsDirective, SubgroupDirective
from grouplab.config.parser import LabConfigParser
from grouplab.core.oracles import FreeGroup, FreeProductOfCyclics
from grouplab.exceptions import ConfigError

CONFIGS = Path(__file__).resolve().parents[1] / "configs"

INJECTION = """\
# comment lines and blank lines are skipped

!group {'kind': 'free', 'rank': 2}
!subgroup H ['b']
!params {
    'g_H': 'a',
    'g_K': 'a',
    'M': 3,
    'F': ['aabb', 'aaBB', 'aaba'],
    'r0': 0,
    'r_max': 4,
}
!seed 3
!experiment 'injection'
"""


class TestParser(unittest.TestCase):
    def setUp(self) -> None:
        self.parser = LabConfigParser()

    def test_multiline_directive(self) -> None:
        parsed = self.parser.parse(INJECTION, "injection.lab")
        names = [d.name for d in parsed.directives]
        self.assertEqual(names, ["group", "subgroup", "params", "seed", "experiment"])
        params = parsed.first(ParamsDirective)
        assert params is not None
        self.assertEqual(params.line, 5)
        self.assertEqual(params.params["F"], ["aabb", "aaBB", "aaba"])
        group = parsed.first(GroupDirective)
        assert group is not None
        self.assertEqual(group.spec, {"kind": "free", "rank": 2})

    def test_subgroup_shorthand(self) -> None:
        parsed = self.parser.parse("!subgroup H 'a'\n!subgroup K ['b', 'aba']")
        subs = parsed.all(SubgroupDirective)
        pairs = [(s.label, s.generators) for s in subs]
        self.assertEqual(pairs, [("H", ["a"]), ("K", ["b", "aba"])])

    def test_unknown_directive(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            self.parser.parse("!group {'kind': 'free', 'rank': 2}\n!frobnicate 3")
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("Unknown directive !frobnicate", str(ctx.exception))

    def test_duplicate_directive(self) -> None:
        text = "!seed 1\n!seed 2"
        with self.assertRaises(ConfigError) as ctx:
            self.parser.parse(text, "dup.lab")
        message = "dup.lab:2: Duplicate !seed directive (first on line 1)"
        self.assertEqual(str(ctx.exception), message)

    def test_duplicate_subgroup_label(self) -> None:
        with self.assertRaises(ConfigError):
            self.parser.parse("!subgroup H ['a']\n!subgroup H ['b']")

    def test_plain_text_is_rejected(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            self.parser.parse("group free 2")
        self.assertIn("Expected a directive", str(ctx.exception))

    def test_malformed_value(self) -> None:
        with self.assertRaises(ConfigError) as ctx:
            self.parser.parse("!seed seven")
        self.assertIn("Malformed !seed directive", str(ctx.exception))


def test_parse_and_resolve() -> None:
    cfg = parse_config(INJECTION)
    assert cfg.K == ["b"]
    assert cfg.seed == 3
    assert cfg.experiment == "injection"
    assert cfg.params.M == 3
    assert cfg.params.r0 == 0
    assert cfg.params.r_min == 2
    assert cfg.oracle == FreeGroup(2)
    assert cfg.F_words[0] == (1, 1, 2, 2)


def test_defaults_follow_the_parameters() -> None:
    text = (
        "!group {'kind': 'free', 'rank': 2}\n"
        "!params {'g_H': 'a', 'F': ['aabb', 'aaBB', 'aaba'], 'r_max': 8}\n"
    )
    cfg = parse_config(text)
    assert cfg.params.M == 3
    assert cfg.params.r0 == 2 * 3 * 1 + 2 * 4
    assert cfg.params.r_min == 4
    assert cfg.H == [] and cfg.K == []


def test_smallest_window() -> None:
    cfg = parse_config("!group {'kind': 'free', 'rank': 2}\n!params {'r_max': 1}")
    assert cfg.params.r_min == 0
    assert cfg.params.r0 == 0


def test_default_power() -> None:
    f2 = FreeGroup(2)
    assert default_power(f2, (), 2.0) == 1
    assert default_power(f2, (1, 2), 2.0) == 2
    assert default_power(f2, (1, 2, 1), 1.5) == 1


def test_free_product_orders() -> None:
    cfg = parse_config("!group {'kind': 'free_product', 'orders': [2, 'inf']}")
    assert cfg.oracle == FreeProductOfCyclics([2, 0])


@pytest.mark.parametrize(
    "text, field, line",
    [
        ("!group {'kind': 'free', 'rank': 2}\n!subgroup H ['c']", "H.0", 2),
        ("!group {'kind': 'free', 'rank': 2}\n\n!params {'theta': 0}", "params.theta", 3),
        ("!group {'kind': 'free', 'rank': 2}\n!params {'f': 'ax'}", "params.f", 2),
        ("!group {'kind': 'free_product'}", "group", 1),
        ("!params {'r_max': 4}", "group", 0),
        ("!group {'kind': 'free', 'rank': 2}\n!subgroup X ['a']", "X", 2),
        ("!group {'kind': 'free', 'rank': 2}\n!params {'r_min': 5, 'r_max': 4}", "params", 2),
        ("!group {'kind': 'free', 'rank': 2}\n!params {'radius': 4}", "params.radius", 2),
    ],
)
def test_config_errors(text: str, field: str, line: int) -> None:
    with pytest.raises(ConfigError) as info:
        parse_config(text, "bad.lab")
    assert info.value.field == field
    assert info.value.line == line


def test_overrides() -> None:
    cfg = parse_config(INJECTION, overrides={"params.r_max": 6, "seed": 11})
    assert cfg.params.r_max == 6
    assert cfg.params.r_min == 3
    assert cfg.seed == 11

    data = {"params": {"r_max": 4}}
    apply_overrides(data, {"params.r_min": 1, "budget.ball_cap": 10})
    assert data == {"params": {"r_max": 4, "r_min": 1}, "budget": {"ball_cap": 10}}

    with pytest.raises(ConfigError, match="must be smaller"):
        parse_config(INJECTION, overrides={"params.r_min": 9})


def test_render_reads_back() -> None:
    cfg = parse_config(INJECTION)
    echo = render_config(cfg)
    assert echo.endswith("!experiment injection\n")
    again = parse_config(echo)
    assert again.model_dump() == cfg.model_dump()
    assert render_config(cfg, "theorem_a").endswith("!experiment theorem_a\n")


def test_shipped_configs_load() -> None:
    paths = sorted(CONFIGS.glob("*.lab"))
    assert paths
    for path in paths:
        cfg = load_config(path)
        assert cfg.group.generator_count >= 1
