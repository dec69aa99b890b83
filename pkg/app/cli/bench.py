import click

from app.cli.deps import CliContext, build_report, emit, existing_file, k_option, pass_cli, verdict_schema
from app.schemas.matrix import MatrixFile
from app.schemas.report import BenchEntrySchema, InputsSchema
from app.services.minors import check_order, minor_count
from app.services.positivity import is_tp_k_bruteforce, is_tp_k_contiguous
from app.utils.matrix_io import load_matrix


def planned_counts(m: int, n: int, k: int):
    """(연속 창 수, 전체 소행렬 수), 크기 1..k 합"""
    contiguous = sum((m - r + 1) * (n - r + 1) for r in range(1, k + 1))
    brute = sum(minor_count(m, n, r) for r in range(1, k + 1))
    return contiguous, brute


@click.command("bench")
@click.argument("path", type=existing_file)
@k_option
@pass_cli
def bench(cli: CliContext, path: str, k: int) -> int:
    """연속 검사와 전수 검사의 행렬식 개수 및 실행 시간 비교"""
    A = load_matrix(path, cli.field)
    check_order(A, k, "k")
    planned_contiguous, planned_brute = planned_counts(A.rows, A.cols, k)
    contiguous = is_tp_k_contiguous(A, k)
    brute = is_tp_k_bruteforce(A, k)
    entries = [
        BenchEntrySchema(
            method="contiguous",
            planned=planned_contiguous,
            determinants=contiguous.stats.determinants,
            wall_time=round(contiguous.stats.elapsed, 6),
        ),
        BenchEntrySchema(
            method="brute",
            planned=planned_brute,
            determinants=brute.stats.determinants,
            wall_time=round(brute.stats.elapsed, 6),
        ),
    ]
    verdicts = [
        verdict_schema(f"TP_{k} (contiguous)", contiguous, cli.field),
        verdict_schema(f"TP_{k} (brute)", brute, cli.field),
    ]
    inputs = InputsSchema(matrix=MatrixFile.from_matrix(A))
    return emit(build_report(cli, inputs, verdicts, exit_code=0, bench=entries))
