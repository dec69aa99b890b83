import json
import sys
from typing import List, Optional, Sequence

import click

from app.cli.bench import bench
from app.cli.check import check_tn, check_tp, p_matrix, sample_snr
from app.cli.deps import CliContext, pass_cli
from app.cli.generate import build_corpus_cmd, generate_cmd
from app.cli.hull import hull_tn, hull_tp
from app.cli.polya import pf_check
from app.cli.verify import verify_cert
from app.core.config import settings
from app.core.exceptions import TPCertError
from app.core.logging import setup_logging
from app.models import ScalarField, ScalarMode
from app.schemas.common import ErrorResponse

USAGE_EXIT_CODE = 2


@click.group()
@click.option(
    "--scalar-mode",
    type=click.Choice([m.value for m in ScalarMode]),
    default=lambda: settings.SCALAR_MODE,
    help="exact: 유리수, float: 허용오차 비교 (numerical)",
)
@click.option("--tolerance", type=float, default=lambda: settings.FLOAT_TOLERANCE, help="float 모드 부호 판정 허용오차")
@click.option("--log-level", default=None, help="stderr 로그 레벨 (기본: LOG_LEVEL)")
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
@pass_cli
def cli(cli_ctx: CliContext, scalar_mode: str, tolerance: float, log_level: Optional[str]):
    """TP_k / TN_k 판정 및 인증서 도구"""
    setup_logging(log_level)
    cli_ctx.field = ScalarField(ScalarMode(scalar_mode), tolerance)


# 판정
cli.add_command(check_tp)
cli.add_command(check_tn)
cli.add_command(p_matrix)
cli.add_command(sample_snr)

# 구간 헐
cli.add_command(hull_tp)
cli.add_command(hull_tn)

# 수열
cli.add_command(pf_check)

# 생성 / 벤치마크 / 재검증
cli.add_command(generate_cmd)
cli.add_command(build_corpus_cmd)
cli.add_command(bench)
cli.add_command(verify_cert)


def _print_error(error: ErrorResponse) -> None:
    click.echo(json.dumps(error.model_dump(), ensure_ascii=False, default=str), err=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 진입점. 종료 코드: 0 성립, 1 반증(인증서 출력), 2 사용법/입력 오류, 3 한도 초과
    """
    args: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name="tpcert", standalone_mode=False, obj=CliContext(argv=args))
    except click.ClickException as e:
        e.show()
        return USAGE_EXIT_CODE
    except click.Abort:
        return USAGE_EXIT_CODE
    except TPCertError as e:
        _print_error(ErrorResponse.create(e.code, e.message, e.details))
        return e.exit_code
    return result if isinstance(result, int) else 0
