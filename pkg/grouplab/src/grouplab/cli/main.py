"""Main CLI entry point."""

import sys
from pathlib import Path
from typing import Optional

import click

from grouplab.runtime.logging import configure_logging, progress_callback_ctx


@click.group()
@click.version_option()
def cli() -> None:
    """grouplab experiment runner.

    Run 'grouplab run --config FILE' to run the config's experiment.
    Run 'grouplab experiments' to list what can be run.
    Run 'grouplab check DIR' to validate every .lab file below DIR.
    """
    pass


@cli.command()
@click.option(
    "--config",
    "config_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Config file (.lab)",
)
@click.option("--experiment", default=None, help="Experiment to run (overrides !experiment)")
@click.option(
    "--out",
    "out_dir",
    default=None,
    type=click.Path(file_okay=False, path_type=Path),
    help="Output directory (default: out/<experiment>)",
)
@click.option("--seed", default=None, type=int, help="Random seed (overrides !seed)")
@click.option("--radius", default=None, type=int, help="Largest radius (overrides r_max)")
@click.option("--quiet", is_flag=True, help="Only print errors")
@click.option("--verbose", is_flag=True, help="Print debug progress")
def run(
    config_path: Path,
    experiment: Optional[str],
    out_dir: Optional[Path],
    seed: Optional[int],
    radius: Optional[int],
    quiet: bool,
    verbose: bool,
) -> None:
    """Run an experiment and write table.csv, verdict.txt and manifest.json."""
    from grouplab.runtime.manifest import RunManifest
    from grouplab.runtime.manifest import run as run_manifest

    configure_logging(quiet=quiet, verbose=verbose)
    if out_dir is None:
        out_dir = Path("out") / (experiment or config_path.stem)

    def echo_progress(message: str, level: str) -> None:
        if not quiet and (level != "debug" or verbose):
            click.echo(f"⏳ {message}", err=True)

    manifest = RunManifest.for_config(config_path, out_dir, experiment, seed, radius)
    token = progress_callback_ctx.set(echo_progress)
    try:
        status = run_manifest(manifest)
    finally:
        progress_callback_ctx.reset(token)

    if manifest.error:
        click.echo(f"❌ {manifest.error}", err=True)
    elif not quiet:
        verdict = (out_dir / "verdict.txt").read_text(encoding="utf-8")
        click.echo(verdict, nl=False)
        marker = {0: "✅", 2: "⚠️ "}.get(status, "❌")
        click.echo(f"{marker} {manifest.experiment}: outputs in {out_dir}")
    sys.exit(status)


@cli.command()
@click.argument(
    "config_dir", type=click.Path(file_okay=False, path_type=Path), default=Path("configs")
)
def check(config_dir: Path) -> None:
    """Validate every .lab config below CONFIG_DIR."""
    from grouplab.cli.validate import validate_configs

    click.echo(f"🔍 Checking configs in {config_dir}...")
    errors = validate_configs(config_dir)
    if errors:
        for error in errors:
            click.echo(f"❌ {error}")
        sys.exit(1)
    click.echo("✅ All configs are valid")


@cli.command()
def experiments() -> None:
    """List the available experiments."""
    from grouplab.experiments import EXPERIMENTS

    for name, experiment in EXPERIMENTS.items():
        click.echo(f"{name:<14} {experiment.description}")


if __name__ == "__main__":
    cli()
