"""Command-line entry points: serve, wordlist validate, simulate."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .catalog import collect_diagnostics, load_catalog_file, load_sample_catalog
from .config import load_game_config
from .simulate import ParameterOutOfRange, simulate


@click.group()
def main() -> None:
    """Mole-themed spelling game: session server and headless tools."""


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data-dir", "-d", default="./data", show_default=True, type=click.Path())
@click.option("--wordlist", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--config", "config_path", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--static-dir", default=None, type=click.Path(file_okay=False),
              help="Directory with the browser client; served at /.")
def serve(port: int, host: str, data_dir: str, wordlist: str, config_path: str | None,
          static_dir: str | None) -> None:
    """Run the session service."""
    import uvicorn

    from .service import create_app

    catalog = load_catalog_file(wordlist)
    config = load_game_config(config_path)
    if static_dir is None and Path("frontend/index.html").exists():
        static_dir = "frontend"
    app = create_app(catalog, data_dir, config, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


@main.group()
def wordlist() -> None:
    """Word-list document tools."""


@wordlist.command()
@click.argument("path", type=click.Path(dir_okay=False))
def validate(path: str) -> None:
    """Check a word-list document; exit 0 only if it is a valid catalog."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        click.echo(f"cannot read {path}: {exc}")
        sys.exit(1)
    problems = collect_diagnostics(raw)
    if problems:
        for line in problems:
            click.echo(line)
        sys.exit(1)
    catalog = load_catalog_file(path)
    words = sum(len(wl.words) for wl in catalog.lists)
    click.echo(f"ok: {len(catalog.lists)} lists, {words} words")


@main.command("simulate")
@click.option("--words", default=50, show_default=True, help="Rounds to play.")
@click.option("--error-rate", default=0.9, show_default=True,
              help="Initial per-word letter error probability.")
@click.option("--learning-rate", default=0.5, show_default=True,
              help="Error-rate multiplier applied per giveaway exposure.")
@click.option("--seed", default=0, show_default=True)
@click.option("--config", "config_path", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--wordlist", "wordlist_path", default=None, type=click.Path(exists=True, dir_okay=False),
              help="Word-list document; defaults to the packaged sample.")
def simulate_cmd(words: int, error_rate: float, learning_rate: float, seed: int,
                 config_path: str | None, wordlist_path: str | None) -> None:
    """Play rounds with a synthetic learner and print summary statistics."""
    catalog = load_catalog_file(wordlist_path) if wordlist_path else load_sample_catalog()
    config = load_game_config(config_path)
    try:
        summary = simulate(error_rate, learning_rate, words, seed, catalog=catalog, config=config)
    except ParameterOutOfRange as exc:
        click.echo(f"error: {exc}")
        sys.exit(2)
    click.echo(json.dumps(summary.to_dict(), indent=2))


if __name__ == "__main__":
    main()
