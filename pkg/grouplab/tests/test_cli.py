import json
import logging
from pathlib import Path
from typing import Iterator

import pytest
from click.testing import CliRunner

from grouplab.cli.main import cli

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

CYCLIC = """\
!group {'kind': 'free', 'rank': 2}
!subgroup H ['a']
!params {'r0': 0}
!experiment theorem_a
"""


@pytest.fixture(autouse=True)
def reset_logging() -> Iterator[None]:
    yield
    root = logging.getLogger("grouplab")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.NOTSET)


def write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_run_writes_artifacts(tmp_path: Path) -> None:
    config = write(tmp_path, "cyclic.lab", CYCLIC)
    out = tmp_path / "out"
    result = CliRunner().invoke(
        cli, ["run", "--config", str(config), "--out", str(out), "--radius", "7"]
    )
    assert result.exit_code == 0, result.output
    assert "overall: pass" in result.output

    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["status"] == 0
    assert manifest["error"] is None
    assert manifest["experiment"] == "theorem_a"
    assert manifest["radius"] == 7
    assert manifest["artifacts"] == [
        "table.csv",
        "verdict.txt",
        "config.lab.echo",
        "manifest.json",
    ]
    table = (out / "table.csv").read_text(encoding="utf-8").splitlines()
    assert len(table) == 9
    assert table[5] == "4,161,41,0.254658"
    echo = (out / "config.lab.echo").read_text(encoding="utf-8")
    assert "!experiment theorem_a" in echo


def test_run_is_deterministic(tmp_path: Path) -> None:
    config = write(tmp_path, "cyclic.lab", CYCLIC)
    runner = CliRunner()
    outputs = []
    for name in ("first", "second"):
        out = tmp_path / name
        result = runner.invoke(
            cli, ["run", "--config", str(config), "--out", str(out), "--radius", "7", "--quiet"]
        )
        tables = [(out / f).read_bytes() for f in ("table.csv", "verdict.txt")]
        outputs.append((result.exit_code, tables))
    assert outputs[0] == outputs[1]
    assert outputs[0][0] == 0


def test_rate_gap_fails_at_small_radius(tmp_path: Path) -> None:
    # window [3, 6] still sees the parity wobble of the double coset counts
    config = write(tmp_path, "cyclic.lab", CYCLIC)
    out = tmp_path / "out"
    result = CliRunner().invoke(
        cli, ["run", "--config", str(config), "--out", str(out), "--radius", "6"]
    )
    assert result.exit_code == 1
    assert "[fail]" in (out / "verdict.txt").read_text(encoding="utf-8")


def test_run_reports_precondition_failure(tmp_path: Path) -> None:
    config = write(
        tmp_path,
        "finite.lab",
        "!group {'kind': 'free', 'rank': 2}\n"
        "!subgroup H ['a^2', 'b', 'aba^-1']\n"
        "!experiment theorem_a\n",
    )
    out = tmp_path / "out"
    result = CliRunner().invoke(cli, ["run", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 1
    assert "PreconditionError" in result.output

    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["status"] == 1
    assert manifest["error"].startswith("PreconditionError")
    assert manifest["artifacts"] == ["manifest.json"]
    assert not (out / "table.csv").exists()


def test_run_needs_an_experiment(tmp_path: Path) -> None:
    config = write(tmp_path, "bare.lab", "!group {'kind': 'free', 'rank': 2}\n")
    out = tmp_path / "out"
    result = CliRunner().invoke(cli, ["run", "--config", str(config), "--out", str(out)])
    assert result.exit_code == 1
    assert "no experiment named" in result.output


def test_experiment_option_overrides_config(tmp_path: Path) -> None:
    config = write(tmp_path, "cyclic.lab", CYCLIC)
    out = tmp_path / "out"
    result = CliRunner().invoke(
        cli,
        [
            "run",
            "--config",
            str(config),
            "--experiment",
            "coset_growth",
            "--out",
            str(out),
            "--radius",
            "5",
        ],
    )
    manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
    assert manifest["experiment"] == "coset_growth"
    assert manifest["status"] == result.exit_code


def test_check_shipped_configs() -> None:
    result = CliRunner().invoke(cli, ["check", str(CONFIGS)])
    assert result.exit_code == 0, result.output
    assert "All configs are valid" in result.output


def test_check_reports_bad_configs(tmp_path: Path) -> None:
    write(tmp_path, "good.lab", CYCLIC)
    write(tmp_path, "bad.lab", "!group {'kind': 'free', 'rank': 2}\n!experiment theorem_b\n")
    result = CliRunner().invoke(cli, ["check", str(tmp_path)])
    assert result.exit_code == 1
    assert "bad.lab" in result.output
    assert "good.lab" not in result.output


def test_check_missing_directory(tmp_path: Path) -> None:
    result = CliRunner().invoke(cli, ["check", str(tmp_path / "nowhere")])
    assert result.exit_code == 1
    assert "not found" in result.output


def test_experiments_lists_registry() -> None:
    result = CliRunner().invoke(cli, ["experiments"])
    assert result.exit_code == 0
    names = [line.split()[0] for line in result.output.splitlines()]
    assert "theorem_a" in names
    assert "calibration" in names
    assert len(names) == 8
