"""Точка входа CLI asreg: `python -m src.main <команда>`."""

import typer

from src.commands import algebra_commands, curve_commands
from src.utils.logger import setup_logging

setup_logging()

app = typer.Typer(
    name="asreg",
    help="Точные вычисления для 3-мерных квадратичных AS-регулярных алгебр",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)

algebra_commands.register(app)
app.add_typer(curve_commands.app, name="curve")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
