from typing import Optional

import click

from app.cli.deps import CliContext, build_report, emit, existing_file, hull_verdict_schema, k_option, pass_cli
from app.models import IntervalHull
from app.schemas.matrix import MatrixFile
from app.schemas.report import InputsSchema
from app.services.interval import hull_is_tn_k, hull_is_tp_k
from app.utils.matrix_io import load_matrix


def _load_hull(cli: CliContext, path_a: str, path_b: str):
    A = load_matrix(path_a, cli.field)
    B = load_matrix(path_b, cli.field)
    inputs = InputsSchema(hull_a=MatrixFile.from_matrix(A), hull_b=MatrixFile.from_matrix(B))
    return IntervalHull(A, B), inputs


@click.command("hull-tp")
@click.argument("path_a", type=existing_file)
@click.argument("path_b", type=existing_file)
@k_option
@pass_cli
def hull_tp(cli: CliContext, path_a: str, path_b: str, k: int) -> int:
    """구간 헐 전체가 TP_k 인지 (C+, C- 검사)"""
    h, inputs = _load_hull(cli, path_a, path_b)
    verdict = hull_verdict_schema(f"hull TP_{k}", hull_is_tp_k(h, k), cli.field)
    return emit(build_report(cli, inputs, [verdict]))


@click.command("hull-tn")
@click.argument("path_a", type=existing_file)
@click.argument("path_b", type=existing_file)
@k_option
@click.option("--budget", type=int, default=None, help="I_{z,z'} 개수 한도 (기본: HULL_FAMILY_BUDGET)")
@click.option("--override", is_flag=True, help="한도를 넘어도 열거")
@pass_cli
def hull_tn(cli: CliContext, path_a: str, path_b: str, k: int, budget: Optional[int], override: bool) -> int:
    """구간 헐 전체가 TN_k 인지 (I_{z,z'} 전체 검사)"""
    h, inputs = _load_hull(cli, path_a, path_b)
    verdict = hull_verdict_schema(f"hull TN_{k}", hull_is_tn_k(h, k, budget, override), cli.field)
    return emit(build_report(cli, inputs, [verdict]))
