from dataclasses import asdict, dataclass, field as dc_field
from typing import List, Optional, Sequence

import click

from app.core.config import settings
from app.models import CostStats, HullVerdict, ScalarField, Verdict
from app.schemas.matrix import MatrixFile
from app.schemas.report import (
    BenchEntrySchema,
    ExtentSchema,
    HullFailureSchema,
    InputsSchema,
    ModeSchema,
    Report,
    StatsSchema,
    VerdictSchema,
    certificate_to_schema,
)
from app.utils.matrix_io import digest


@dataclass
class CliContext:
    """명령 간 공유 상태 (스칼라 필드, 원래 argv)"""
    argv: List[str] = dc_field(default_factory=list)
    field: ScalarField = dc_field(default_factory=ScalarField)


pass_cli = click.make_pass_decorator(CliContext, ensure=True)

# 공통 옵션
k_option = click.option("-k", "k", type=int, required=True, help="검사할 최대 소행렬 크기")
seed_option = click.option("--seed", type=int, required=True, help="난수 시드 (필수)")
existing_file = click.Path(exists=True, dir_okay=False)


def verdict_schema(claim: str, verdict: Verdict, field: ScalarField) -> VerdictSchema:
    return VerdictSchema(
        claim=claim,
        holds=verdict.holds,
        conclusive=verdict.conclusive,
        numerical=verdict.numerical,
        certificate=certificate_to_schema(verdict.certificate, field),
        extent=ExtentSchema(**asdict(verdict.extent)) if verdict.extent else None,
        stats=StatsSchema.from_stats(verdict.stats),
    )


def hull_verdict_schema(claim: str, verdict: HullVerdict, field: ScalarField) -> VerdictSchema:
    failing = None
    if verdict.failing is not None:
        failing = HullFailureSchema(
            label=verdict.failing.label,
            z=list(verdict.failing.z),
            z_prime=list(verdict.failing.z_prime),
            matrix=MatrixFile.from_matrix(verdict.failing_matrix),
            is_member=bool(verdict.failing_is_member),
        )
    return VerdictSchema(
        claim=claim,
        holds=verdict.holds,
        numerical=verdict.numerical,
        certificate=certificate_to_schema(verdict.certificate, field),
        failing=failing,
        tested=verdict.tested,
        distinct=verdict.distinct,
        stats=StatsSchema.from_stats(verdict.stats),
    )


def total_stats(verdicts: Sequence[VerdictSchema]) -> StatsSchema:
    stats = CostStats()
    for v in verdicts:
        stats.merge(CostStats(v.stats.determinants, v.stats.submatrices, v.stats.skipped, v.stats.wall_time))
    return StatsSchema.from_stats(stats)


def exit_code_for(verdicts: Sequence[VerdictSchema]) -> int:
    """0: 모두 성립, 1: 하나라도 반증"""
    return 0 if all(v.holds for v in verdicts) else 1


def build_report(
    cli: CliContext,
    inputs: InputsSchema,
    verdicts: List[VerdictSchema],
    exit_code: Optional[int] = None,
    bench: Optional[List[BenchEntrySchema]] = None,
) -> Report:
    return Report(
        app=settings.APP_NAME,
        version=settings.APP_VERSION,
        command=list(cli.argv),
        input_digest=digest(inputs),
        mode=ModeSchema.from_field(cli.field),
        verdicts=verdicts,
        inputs=inputs,
        stats=total_stats(verdicts),
        bench=bench,
        exit_code=exit_code_for(verdicts) if exit_code is None else exit_code,
    )


def emit(report: Report) -> int:
    """리포트를 stdout 에 한 번에 쓰고 종료 코드를 돌려준다"""
    click.echo(report.model_dump_json(indent=2, exclude_none=True))
    return report.exit_code
