import click

from simplex_interp import __version__
from simplex_interp.cli import cmd_analyze, cmd_curve, cmd_minimize, cmd_schema, cmd_tables


@click.group()
@click.version_option(__version__, prog_name="simplex_interp")
def cli():
    """Normas de proyectores de interpolación y coeficientes de absorción en [-1, 1]."""


cli.add_command(cmd_analyze)
cli.add_command(cmd_minimize)
cli.add_command(cmd_tables)
cli.add_command(cmd_curve)
cli.add_command(cmd_schema)


if __name__ == "__main__":
    cli()
