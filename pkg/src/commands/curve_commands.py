"""Подкоманды `curve`: групповой закон и автоморфизмы кривой Гессе."""

from typing import Annotated, Optional

import typer

from src.algebra.field import FieldElem, parse_elem
from src.commands.output import OutputMode, emit, handle_errors
from src.services import algebra_service
from src.utils.validators import parse_point

app = typer.Typer(help="Операции на кубике Гессе E_λ: x³ + y³ + z³ = 3λxyz", no_args_is_help=True)

PointP = Annotated[str, typer.Option("--p", help="Точка a,b,c")]
LamOpt = Annotated[Optional[str], typer.Option("--lam", help="λ; по умолчанию вычисляется по точке")]
LamReq = Annotated[str, typer.Option("--lam", help="λ, например 2, 0 или 1+sqrt3")]
OutputOpt = Annotated[OutputMode, typer.Option("--output", help="json или pretty")]


def _lam(raw: str | None) -> FieldElem | None:
    return None if raw is None else parse_elem(raw)


@app.command("add")
@handle_errors
def add(
    p: PointP,
    q: Annotated[str, typer.Option("--q", help="Точка a,b,c")],
    lam: LamOpt = None,
    output: OutputOpt = OutputMode.json,
):
    """p + q с нейтральным элементом o = (1:−1:0)."""
    emit(algebra_service.curve_add(parse_point(p), parse_point(q), _lam(lam)), output)


@app.command("neg")
@handle_errors
def neg(p: PointP, lam: LamOpt = None, output: OutputOpt = OutputMode.json):
    emit(algebra_service.curve_neg(parse_point(p), _lam(lam)), output)


@app.command("smul")
@handle_errors
def smul(
    n: Annotated[int, typer.Option("--n", help="Целый множитель")],
    p: PointP,
    lam: LamOpt = None,
    output: OutputOpt = OutputMode.json,
):
    emit(algebra_service.curve_smul(n, parse_point(p), _lam(lam)), output)


@app.command("j")
@handle_errors
def j(lam: LamReq, output: OutputOpt = OutputMode.json):
    """j-инвариант E_λ."""
    emit(algebra_service.curve_j(parse_elem(lam)), output)


@app.command("torsion3")
@handle_errors
def torsion3(output: OutputOpt = OutputMode.json):
    """Девять точек E[3] в фиксированном порядке p0..p8."""
    emit(algebra_service.curve_torsion3(), output)


@app.command("is-torsion3")
@handle_errors
def is_torsion3(p: PointP, lam: LamOpt = None, output: OutputOpt = OutputMode.json):
    emit(algebra_service.curve_is_torsion3(parse_point(p), _lam(lam)), output)


@app.command("tau")
@handle_errors
def tau(lam: LamReq, output: OutputOpt = OutputMode.json):
    """Матрица образующей τ_λ группы автоморфизмов, фиксирующих o, и её порядок."""
    emit(algebra_service.curve_tau(parse_elem(lam)), output)


@app.command("f-set")
@handle_errors
def f_set(
    lam: LamReq,
    i: Annotated[int, typer.Option("--i", help="Показатель i")],
    output: OutputOpt = OutputMode.json,
):
    """Множество F_{λ,i} = {p − τ^i(p) | p ∈ E[3]}."""
    emit(algebra_service.curve_f_set(parse_elem(lam), i), output)


@app.command("orbit")
@handle_errors
def orbit(
    descriptor: Annotated[str, typer.Option("--descriptor", help="JSON-дескриптор типа EC")],
    kind: Annotated[str, typer.Option("--kind", help="iso или morita")] = "iso",
    output: OutputOpt = OutputMode.json,
):
    """Орбита точки дескриптора: не более 54 точек."""
    emit(algebra_service.curve_orbit(descriptor, kind), output)
