import logging
from pathlib import Path

import click
from rich.logging import RichHandler

from cli.crystal_commands import COMMANDS
from ui.console import get_console

console = get_console()


def _configure_logging(debug: bool) -> None:
    handler = RichHandler(console=console, show_path=False, show_time=False, markup=False)
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if debug else logging.WARNING)


@click.group()
@click.option(
    "--cwd",
    "-c",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    help="Directory whose .g2crystal/config.toml is merged",
)
@click.option("--debug", is_flag=True, default=False, help="Enable debug logging")
@click.pass_context
def main(ctx: click.Context, cwd: Path | None, debug: bool):
    """
    g2crystal - exact verification of the G2(1) affine geometric crystal
    on the 15-dimensional module and its ultra-discretization.

    Example: python main.py verify lemma51
    """
    ctx.ensure_object(dict)
    ctx.obj["cwd"] = cwd
    ctx.obj["debug"] = debug
    _configure_logging(debug)


for command in COMMANDS:
    main.add_command(command)

if __name__ == "__main__":
    main()
