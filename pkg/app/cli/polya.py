from typing import Optional

import click

from app.cli.deps import CliContext, build_report, emit, existing_file, k_option, pass_cli, verdict_schema
from app.schemas.report import InputsSchema
from app.schemas.sequence import SequenceFile
from app.services.polya import PfMode, is_pf_k_window, pf_snr_check
from app.utils.matrix_io import load_sequence


@click.command("pf-check")
@click.argument("path", type=existing_file)
@k_option
@click.option("--mode", type=click.Choice([m.value for m in PfMode]), default="pf", show_default=True)
@click.option("--snr-samples", type=int, default=0, help="Toeplitz 블록 SNR 샘플 수 (0 이면 생략)")
@click.option("--seed", type=int, default=None, help="--snr-samples 사용 시 필수")
@pass_cli
def pf_check(cli: CliContext, path: str, k: int, mode: str, snr_samples: int, seed: Optional[int]) -> int:
    """수열이 PF_k (또는 TP_k Pólya frequency) 인지 윈도우 안에서 점검"""
    if snr_samples and seed is None:
        raise click.UsageError("--snr-samples requires --seed")
    s = load_sequence(path, cli.field)
    claim = f"PF_{k}" if mode == PfMode.PF.value else f"TP_{k}-PF"
    verdicts = [verdict_schema(claim, is_pf_k_window(s, k, mode), cli.field)]
    if snr_samples:
        verdicts.append(verdict_schema(f"TP_{k}-PF (sampled)", pf_snr_check(s, k, snr_samples, seed), cli.field))
    inputs = InputsSchema(sequence=SequenceFile.from_window(s))
    return emit(build_report(cli, inputs, verdicts))
