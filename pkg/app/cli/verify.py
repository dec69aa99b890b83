import logging

import click

from app.cli.deps import CliContext, existing_file, pass_cli
from app.core.exceptions import CertificateError, InputFormatError
from app.models import IntervalHull, Matrix, ScalarField
from app.schemas.report import Report, VerdictSchema, certificate_from_schema
from app.services.certificates import require_valid
from app.services.interval import hull_contains
from app.utils.matrix_io import digest, load_report

logger = logging.getLogger(__name__)


def _hull_failure_source(report: Report, verdict: VerdictSchema, field: ScalarField) -> Matrix:
    """실패한 시험 행렬이 입력 헐에서 다시 만들어지는지 확인한 뒤 반환"""
    inputs = report.inputs
    if inputs.hull_a is None or inputs.hull_b is None:
        raise InputFormatError("Hull verdict without embedded hull endpoints")
    h = IntervalHull(inputs.hull_a.to_matrix(field), inputs.hull_b.to_matrix(field))
    failing = verdict.failing
    matrix = failing.matrix.to_matrix(field)
    if matrix != h.test_matrix(failing.z, failing.z_prime):
        raise CertificateError(f"Reported {failing.label} matrix does not match the hull endpoints")
    if hull_contains(h, matrix) != failing.is_member:
        raise CertificateError(f"Reported hull membership of {failing.label} is wrong")
    return matrix


def revalidate_report(report: Report) -> int:
    """리포트의 인증서를 입력만으로 재검증, 검증한 인증서 수를 돌려준다"""
    field = report.mode.to_field()
    if digest(report.inputs) != report.input_digest:
        raise CertificateError("Embedded inputs do not match the report digest")

    checked = 0
    for verdict in report.verdicts:
        certificate = certificate_from_schema(verdict.certificate, field)
        if verdict.holds != (verdict.certificate.kind == "pass"):
            raise CertificateError(f"Verdict {verdict.claim!r} disagrees with its certificate")
        if verdict.holds:
            continue
        if verdict.failing is not None:
            source = _hull_failure_source(report, verdict, field)
        elif report.inputs.sequence is not None:
            source = report.inputs.sequence.to_window(field)
        elif report.inputs.matrix is not None:
            source = report.inputs.matrix.to_matrix(field)
        else:
            raise InputFormatError("Report embeds no input to re-validate against")
        require_valid(certificate, source)
        checked += 1
        logger.info("Certificate for %s re-validated (%s)", verdict.claim, certificate.kind)
    return checked


@click.command("verify-cert")
@click.argument("report_path", type=existing_file)
@pass_cli
def verify_cert(cli: CliContext, report_path: str) -> int:
    """JSON 리포트의 인증서를 전체 판정 없이 재검증"""
    report = load_report(report_path)
    checked = revalidate_report(report)
    click.echo(report.model_dump_json(indent=2, exclude_none=True))
    logger.info("%d certificate(s) re-validated", checked)
    return 0
