"""Команды верхнего уровня: построение, классификация и проверка алгебр."""

from typing import Annotated, Optional

import typer

from src.algebra.errors import InvalidParameters
from src.commands.output import OutputMode, emit, handle_errors
from src.services import algebra_service
from src.utils.validators import parse_params


TypeOpt = Annotated[Optional[str], typer.Option("--type", help="Тег строки таблицы (S1, T', ...) или EC")]
ParamsOpt = Annotated[Optional[str], typer.Option("--params", help="Параметры через запятую: 2,3,5")]
PointOpt = Annotated[Optional[str], typer.Option("--point", help="Точка p для EC: a,b,c")]
ExponentOpt = Annotated[int, typer.Option("--i", help="Показатель i для EC")]
DescriptorOpt = Annotated[Optional[str], typer.Option("--descriptor", help="JSON-дескриптор алгебры")]
OutputOpt = Annotated[OutputMode, typer.Option("--output", help="json или pretty")]
SamplesOpt = Annotated[Optional[int], typer.Option("--n", min=1, help="Число точек выборки")]


def _descriptor(
    type_: str | None, params: str | None, point: str | None, i: int, descriptor: str | None
) -> str | dict:
    """Собирает дескриптор из флагов; --descriptor имеет приоритет."""
    if descriptor is not None:
        return descriptor
    if type_ is None:
        raise InvalidParameters("Нужен --type или --descriptor")
    if type_ == "EC":
        if point is None:
            raise InvalidParameters("Для типа EC нужен --point")
        return {"type": "EC", "point": [c.strip() for c in point.split(",")], "i": i}
    return {"type": type_, "params": [str(v) for v in parse_params(params)]}


@handle_errors
def construct(
    type_: TypeOpt = None,
    params: ParamsOpt = None,
    point: PointOpt = None,
    i: ExponentOpt = 0,
    descriptor: DescriptorOpt = None,
    output: OutputOpt = OutputMode.json,
):
    """Соотношения алгебры из таблицы или типа EC."""
    emit(algebra_service.construct(_descriptor(type_, params, point, i, descriptor)), output)


@handle_errors
def iso(
    a: Annotated[str, typer.Option("--a", help="JSON-дескриптор первой алгебры")],
    b: Annotated[str, typer.Option("--b", help="JSON-дескриптор второй алгебры")],
    output: OutputOpt = OutputMode.json,
):
    """Изоморфизм градуированных алгебр."""
    emit(algebra_service.iso(a, b), output)


@handle_errors
def morita(
    a: Annotated[str, typer.Option("--a", help="JSON-дескриптор первой алгебры")],
    b: Annotated[str, typer.Option("--b", help="JSON-дескриптор второй алгебры")],
    output: OutputOpt = OutputMode.json,
):
    """Эквивалентность Мориты категорий градуированных модулей."""
    emit(algebra_service.morita(a, b), output)


@handle_errors
def normal_form(
    type_: TypeOpt = None,
    params: ParamsOpt = None,
    descriptor: DescriptorOpt = None,
    output: OutputOpt = OutputMode.json,
):
    emit(algebra_service.normal_form(_descriptor(type_, params, None, 0, descriptor)), output)


@handle_errors
def point_scheme(
    type_: TypeOpt = None,
    params: ParamsOpt = None,
    point: PointOpt = None,
    i: ExponentOpt = 0,
    descriptor: DescriptorOpt = None,
    output: OutputOpt = OutputMode.json,
):
    """Кубика det M(p), задающая схему точек."""
    emit(algebra_service.point_scheme(_descriptor(type_, params, point, i, descriptor)), output)


@handle_errors
def verify_g2(
    type_: TypeOpt = None,
    params: ParamsOpt = None,
    point: PointOpt = None,
    i: ExponentOpt = 0,
    descriptor: DescriptorOpt = None,
    n: SamplesOpt = None,
    output: OutputOpt = OutputMode.json,
):
    """Восстанавливает соотношения по выборке с графика σ и сравнивает с построением."""
    emit(algebra_service.verify_g2(_descriptor(type_, params, point, i, descriptor), n), output)


@handle_errors
def verify_g1(
    type_: TypeOpt = None,
    params: ParamsOpt = None,
    point: PointOpt = None,
    i: ExponentOpt = 0,
    descriptor: DescriptorOpt = None,
    pair: Annotated[Optional[str], typer.Option("--pair", help="Дескриптор алгебры, чья пара (E, σ) проверяется")] = None,
    n: SamplesOpt = None,
    output: OutputOpt = OutputMode.json,
):
    """Выборочная проверка (G1): ранг M(p) и ядро на точках E."""
    emit(algebra_service.verify_g1(_descriptor(type_, params, point, i, descriptor), pair, n), output)


def register(app: typer.Typer) -> None:
    app.command("construct")(construct)
    app.command("iso")(iso)
    app.command("morita")(morita)
    app.command("normal-form")(normal_form)
    app.command("point-scheme")(point_scheme)
    app.command("verify-g2")(verify_g2)
    app.command("verify-g1")(verify_g1)
