import click

from app.cli.deps import (
    CliContext,
    build_report,
    emit,
    existing_file,
    k_option,
    pass_cli,
    seed_option,
    verdict_schema,
)
from app.schemas.matrix import MatrixFile
from app.schemas.report import InputsSchema
from app.services.positivity import (
    SnrMode,
    is_p_matrix,
    is_tn_k_bruteforce,
    is_tp_k_bruteforce,
    is_tp_k_contiguous,
    sampled_p_snr,
    sampled_snr_falsify,
    tn_certificate,
    tp_certificate,
)
from app.utils.matrix_io import load_matrix

TP_METHODS = {
    "brute": is_tp_k_bruteforce,
    "contiguous": is_tp_k_contiguous,
    "certificate": tp_certificate,
}


@click.command("check-tp")
@click.argument("path", type=existing_file)
@k_option
@click.option("--method", type=click.Choice(sorted(TP_METHODS)), default="certificate", show_default=True)
@pass_cli
def check_tp(cli: CliContext, path: str, k: int, method: str) -> int:
    """행렬이 TP_k 인지 판정"""
    A = load_matrix(path, cli.field)
    verdict = TP_METHODS[method](A, k)
    inputs = InputsSchema(matrix=MatrixFile.from_matrix(A))
    return emit(build_report(cli, inputs, [verdict_schema(f"TP_{k}", verdict, cli.field)]))


@click.command("check-tn")
@click.argument("path", type=existing_file)
@k_option
@click.option("--method", type=click.Choice(["brute", "certificate"]), default="certificate", show_default=True)
@click.option("--allow-large", is_flag=True, help="열거 한도(TN_ENUMERATION_CAP) 무시")
@pass_cli
def check_tn(cli: CliContext, path: str, k: int, method: str, allow_large: bool) -> int:
    """행렬이 TN_k 인지 판정"""
    A = load_matrix(path, cli.field)
    check = is_tn_k_bruteforce if method == "brute" else tn_certificate
    verdict = check(A, k, allow_large=allow_large)
    inputs = InputsSchema(matrix=MatrixFile.from_matrix(A))
    return emit(build_report(cli, inputs, [verdict_schema(f"TN_{k}", verdict, cli.field)]))


@click.command("p-matrix")
@click.argument("path", type=existing_file)
@click.option("--samples", type=int, default=0, help="Gale-Nikaido 샘플 수 (0 이면 생략)")
@click.option("--seed", type=int, default=None, help="--samples 사용 시 필수")
@pass_cli
def p_matrix(cli: CliContext, path: str, samples: int, seed: int) -> int:
    """모든 주소행렬식이 양수인지 판정"""
    if samples and seed is None:
        raise click.UsageError("--samples requires --seed")
    A = load_matrix(path, cli.field)
    verdicts = [verdict_schema("P-matrix", is_p_matrix(A), cli.field)]
    if samples:
        verdicts.append(verdict_schema("P-matrix sign non-reversal", sampled_p_snr(A, samples, seed), cli.field))
    inputs = InputsSchema(matrix=MatrixFile.from_matrix(A))
    return emit(build_report(cli, inputs, verdicts))


@click.command("sample-snr")
@click.argument("path", type=existing_file)
@k_option
@click.option("--mode", type=click.Choice([m.value for m in SnrMode]), default="strict", show_default=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@seed_option
@pass_cli
def sample_snr(cli: CliContext, path: str, k: int, mode: str, samples: int, seed: int) -> int:
    """교대 벡터 샘플링으로 부호 비역전 반례 탐색 (통과는 결론이 아님)"""
    A = load_matrix(path, cli.field)
    verdict = sampled_snr_falsify(A, k, mode, samples, seed)
    claim = f"{'TP' if mode == 'strict' else 'TN'}_{k} (sampled)"
    inputs = InputsSchema(matrix=MatrixFile.from_matrix(A))
    return emit(build_report(cli, inputs, [verdict_schema(claim, verdict, cli.field)]))
