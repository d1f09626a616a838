from typing import Dict, List

import pytest

from grouplab.config.loader import parse_config
from grouplab.config.models import ExperimentConfig
from grouplab.exceptions import ConfigError, PreconditionError
from grouplab.experiments import (
    EXPERIMENTS,
    ExperimentReport,
    Status,
    calibration_experiment,
    coset_growth_experiment,
    free_product_experiment,
    generic_image_check,
    genericity_experiment,
    get_experiment,
    growth_experiment,
    injection_experiment,
    theorem_a_experiment,
)
from grouplab.experiments.common import decay_fit, relative_gap

F2 = "!group {'kind': 'free', 'rank': 2}\n"


def config(*lines: str) -> ExperimentConfig:
    return parse_config(F2 + "\n".join(lines) + "\n")


def statuses(report: ExperimentReport) -> Dict[str, Status]:
    return {c.name: c.status for c in report.criteria}


def test_registry() -> None:
    assert sorted(EXPERIMENTS) == [
        "calibration",
        "coset_growth",
        "free_product",
        "generic_image",
        "genericity",
        "growth",
        "injection",
        "theorem_a",
    ]
    assert get_experiment("theorem_a").run is theorem_a_experiment
    with pytest.raises(ConfigError) as info:
        get_experiment("theorem_b")
    assert info.value.field == "experiment"


def test_helpers() -> None:
    assert relative_gap(1.02, 1.0) == pytest.approx(0.02)
    assert relative_gap(0.5, 0.0) == 0.5
    assert decay_fit([1, 2, 3], [0.0, 0.0, 0.0]).factor == 0.0
    assert decay_fit([1, 2, 3], [0.5, 0.25, 0.125]).factor == pytest.approx(0.5)


class TestTheoremA:
    def test_cyclic_subgroups_small_window(self) -> None:
        report = theorem_a_experiment(config("!subgroup H ['a']", "!params {'r_max': 7, 'r0': 0}"))
        assert report.exit_status == 0
        assert report.rows[4] == ["4", "161", "41", "0.254658"]
        assert report.fitted["delta"] > 0.05

    @pytest.mark.slow
    def test_cyclic_subgroups(self) -> None:
        cfg = config("!subgroup H ['a']", "!params {'r_min': 4, 'r_max': 10, 'r0': 0}")
        report = theorem_a_experiment(cfg)
        assert report.overall is Status.PASS
        assert report.fitted["delta"] > 0.05
        assert len(report.rows) == 11

    def test_shifted_ratio(self) -> None:
        report = theorem_a_experiment(config("!subgroup H ['a']", "!params {'r_max': 6, 'r0': 2}"))
        assert report.rows[1][1:] == ["0", "3", ""]
        assert report.rows[2][1:] == ["1", "5", "5.000000"]
        assert any("r - 2" in note for note in report.notes)

    def test_finite_index_is_rejected(self) -> None:
        with pytest.raises(PreconditionError, match="finite index"):
            theorem_a_experiment(config("!subgroup H ['a^2', 'b', 'aba^-1']"))

    def test_shift_beyond_window(self) -> None:
        with pytest.raises(ConfigError) as info:
            theorem_a_experiment(config("!subgroup H ['a']", "!params {'r_max': 4, 'r0': 5}"))
        assert info.value.field == "params.r0"

    def test_needs_a_free_group(self) -> None:
        cfg = parse_config("!group {'kind': 'free_product', 'orders': [2, 3]}")
        with pytest.raises(PreconditionError, match="not a free group"):
            theorem_a_experiment(cfg)


INJECTION = (
    "!subgroup H ['b']",
    "!params {'g_H': 'a', 'g_K': 'a', 'M': 3, 'F': ['abAB', 'bbab', 'BBaB'],"
    " 'L': 3, 'tau': 2, 'r0': 0, 'r_max': 4}",
)


class TestInjection:
    def test_fibers_are_singletons(self) -> None:
        report = injection_experiment(config(*INJECTION))
        assert report.exit_status == 0
        assert report.fitted["N0"] == 1.0
        assert report.fitted["D_H"] == 0.0
        assert report.rows[-1] == ["4", "161", "161", "1"]

    def test_subgroup_meeting_the_axis(self) -> None:
        cfg = config(
            "!subgroup H ['a']",
            "!params {'g_H': 'a', 'M': 3, 'F': ['abAB', 'bbab', 'BBaB'], 'L': 3, 'r0': 0}",
        )
        with pytest.raises(PreconditionError, match="contains the power 1"):
            injection_experiment(cfg)

    def test_unusable_family(self) -> None:
        cfg = config(
            "!subgroup H ['b']",
            "!params {'g_H': 'a', 'M': 3, 'F': ['abAB', 'abAB', 'BBaB'], 'r0': 0, 'r_max': 2}",
        )
        with pytest.raises(ConfigError) as info:
            injection_experiment(cfg)
        assert info.value.field == "params.F"

    def test_empty_radius(self) -> None:
        cfg = config(
            "!subgroup H ['b']",
            "!params {'g_H': 'a', 'M': 3, 'F': ['abAB', 'bbab', 'BBaB'], 'L': 3, 'r_max': 2}",
        )
        report = injection_experiment(cfg)
        assert report.rows == []
        assert report.exit_status == 0

    def test_needs_g_H(self) -> None:
        with pytest.raises(ConfigError) as info:
            injection_experiment(config("!subgroup H ['b']", "!params {'r0': 0}"))
        assert info.value.field == "params.g_H"


GENERICITY = "!params {'f': 'a', 'epsilon': 0, 'theta': 1.0, 'r_min': 3, 'r_max': %d}"


class TestGenericity:
    def test_letter_barrier_small(self) -> None:
        report = genericity_experiment(config(GENERICITY % 6))
        assert report.exit_status == 0
        assert report.rows[2] == ["2", "17", "5", "0.294118", "0.166667", "0.235294"]
        assert report.fitted["barrier_free_decay"] < 0.95
        assert "fully barrier-free portion implies barrier-free" in statuses(report)

    @pytest.mark.slow
    def test_letter_barrier(self) -> None:
        report = genericity_experiment(config(GENERICITY % 10))
        assert statuses(report)["barrier-free fraction decays"] is Status.PASS
        fractions = [float(row[3]) for row in report.rows]
        assert all(x > y for x, y in zip(fractions[3:], fractions[4:]))
        assert report.fitted["barrier_free_decay"] < 0.95
        assert report.fitted["barrier_free_r2"] >= 0.98

    def test_degenerate_parameters(self) -> None:
        report = genericity_experiment(config("!params {'f': 'a', 'epsilon': 1}"))
        assert report.overall is Status.DEGENERATE
        assert report.exit_status == 2
        assert report.rows == []

    def test_barrier_too_long_for_the_ball(self) -> None:
        report = genericity_experiment(config("!params {'f': 'a^6', 'r_max': 4}"))
        assert statuses(report)["barriers present"] is Status.DEGENERATE
        assert report.overall is Status.FAIL


class TestFreeProduct:
    @pytest.mark.slow
    def test_cyclic_ping_pong(self) -> None:
        cfg = config(
            "!subgroup H ['a']",
            "!params {'g': 'b', 'max_syllables': 12, 'max_length': 12}",
        )
        report = free_product_experiment(cfg)
        assert report.exit_status == 0
        assert all(row[2] == "0" for row in report.rows)

    def test_cyclic_ping_pong_small(self) -> None:
        cfg = config("!subgroup H ['a']", "!params {'g': 'b', 'max_length': 6}")
        report = free_product_experiment(cfg)
        assert report.exit_status == 0
        # one syllable: a^n (12 choices) or b a^n B with |n| <= 4 (8 choices)
        assert report.rows[0] == ["1", "20", "0", "1"]
        assert statuses(report)["bounded projection to Ax(g)"] is Status.PASS

    def test_conjugate_collapses(self) -> None:
        cfg = config("!subgroup H ['a']", "!params {'g': 'a', 'max_length': 4}")
        report = free_product_experiment(cfg)
        assert report.overall is Status.FAIL
        assert any(note.startswith("trivial word: ") for note in report.notes)
        assert statuses(report)["bounded projection to Ax(g)"] is Status.DEGENERATE

    def test_trivial_subgroup_is_vacuous(self) -> None:
        report = free_product_experiment(config("!params {'g': 'b'}"))
        assert report.exit_status == 0
        assert "vacuous" in report.criteria[0].measured

    def test_word_budget(self) -> None:
        cfg = config("!subgroup H ['a']", "!params {'g': 'b', 'max_length': 8, 'max_words': 10}")
        report = free_product_experiment(cfg)
        assert report.overall is Status.PARTIAL
        assert report.fitted["words_checked"] == 10.0

    def test_trivial_g(self) -> None:
        with pytest.raises(ConfigError) as info:
            free_product_experiment(config("!subgroup H ['a']", "!params {'g': 'bB'}"))
        assert info.value.field == "params.g"

    @pytest.mark.parametrize("g,final", [("b", Status.PASS), ("a", Status.FAIL)])
    def test_larger_budgets_never_undo_findings(self, g: str, final: Status) -> None:
        checked: List[float] = []
        trivial: List[int] = []
        failed = False
        for budget in (1, 3, 10, 40, 10**6):
            params = f"!params {{'g': '{g}', 'max_length': 6, 'max_words': {budget}}}"
            report = free_product_experiment(config("!subgroup H ['a']", params))
            checked.append(report.fitted["words_checked"])
            trivial.append(sum(int(row[2]) for row in report.rows))
            found = statuses(report)["trivial alternating words"] is Status.FAIL
            assert found or not failed
            failed = found
        assert checked == sorted(checked)
        assert trivial == sorted(trivial)
        assert statuses(report)["trivial alternating words"] is final


IMAGE = "!params {'generic_set': '%s', 'f': 'a', 'r_max': 6}"


class TestGenericImage:
    def test_barrier_elements(self) -> None:
        report = generic_image_check(config("!subgroup H ['a']", IMAGE % "barrier"))
        assert report.exit_status == 0
        assert report.rows[-1][2] == "365"
        assert any("only" in note and "theorem_a" in note for note in report.notes)

    def test_everything(self) -> None:
        report = generic_image_check(config("!subgroup H ['a']", IMAGE % "all"))
        assert report.exit_status == 0
        assert {row[3] for row in report.rows} == {"1.000000"}

    def test_nothing_is_not_generic(self) -> None:
        report = generic_image_check(config("!subgroup H ['a']", IMAGE % "none"))
        assert report.overall is Status.WARN
        assert report.exit_status == 2

    def test_custom_predicate(self) -> None:
        report = generic_image_check(
            config("!subgroup H ['a']", IMAGE % "all"), A=lambda g: len(g) % 2 == 0
        )
        assert report.overall is Status.WARN

    def test_small_delta_is_rejected(self) -> None:
        cfg = config(
            "!subgroup H ['a']", "!params {'generic_set': 'all', 'delta_min': 0.9, 'r_max': 5}"
        )
        with pytest.raises(PreconditionError):
            generic_image_check(cfg)


class TestGrowth:
    def test_free_group_matches_closed_form(self) -> None:
        report = growth_experiment(config("!params {'r_max': 6}"))
        assert report.exit_status == 0
        assert report.rows[3] == ["3", "53", "36"]
        assert "ball sizes match the closed form" in statuses(report)
        assert report.fitted["omega_G"] == pytest.approx(3.0, rel=0.05)

    def test_free_product_of_cyclics(self) -> None:
        cfg = parse_config(
            "!group {'kind': 'free_product', 'orders': [2, 3]}\n!params {'r_max': 6}\n"
        )
        report = growth_experiment(cfg)
        assert [row[2] for row in report.rows] == ["1", "3", "4", "6", "8", "12", "16"]
        assert report.rows[4][1] == "22"
        assert list(statuses(report)) == ["ball sizes grow purely exponentially"]
        assert report.exit_status == 0


def test_coset_growth() -> None:
    cfg = config("!subgroup H ['a^2', 'b']", "!subgroup K ['bab^-1']", "!params {'r_max': 7}")
    report = coset_growth_experiment(cfg)
    assert report.header == ["r", "gr_G", "gr_1K", "gr_H1"]
    assert report.rows[1] == ["1", "5", "5", "2"]
    assert report.fitted["omega_G"] == pytest.approx(3.0, rel=0.02)
    assert len(report.criteria) == 2


def test_calibration_experiment() -> None:
    report = calibration_experiment(config("!params {'calibration_size': 30}", "!seed 4"))
    assert report.exit_status == 0
    assert len(report.rows) == 30
    assert report.fitted["lambda_cal"] <= 2.0


def test_reruns_are_byte_identical() -> None:
    cfg = config("!subgroup H ['a']", IMAGE % "barrier")
    for experiment in (theorem_a_experiment, generic_image_check):
        assert experiment(cfg).csv_text() == experiment(cfg).csv_text()
    calibration = config("!params {'calibration_size': 10}", "!seed 9")
    assert (
        calibration_experiment(calibration).csv_text()
        == calibration_experiment(calibration).csv_text()
    )
