"""인증서 재검증: 판정 과정을 믿지 않고 인증서만으로 결론을 다시 확인한다."""
import logging
from typing import Union

from app.core.exceptions import CertificateError
from app.models import (
    UNKNOWN,
    Certificate,
    FailingMinor,
    KernelWitness,
    Matrix,
    Pass,
    SeqWindow,
    SignReversalWitness,
    SnrViolation,
    ToeplitzBlock,
    ToeplitzMinor,
    is_alternating,
    submatrix,
)
from app.services.minors import det

logger = logging.getLogger(__name__)

Source = Union[Matrix, SeqWindow]


def resolve_block(source: Source, location) -> Matrix:
    """인증서가 가리키는 정사각 블록을 원본에서 다시 꺼낸다"""
    if isinstance(location, ToeplitzBlock):
        if not isinstance(source, SeqWindow):
            raise CertificateError("Toeplitz block certificates need a sequence source")
        block = source.block(location.l, location.size)
        if block is UNKNOWN:
            raise CertificateError(f"{location} touches undetermined sequence terms")
        return block
    if not isinstance(source, Matrix):
        raise CertificateError("Matrix certificates need a matrix source")
    return submatrix(source, location)


def _same(field, a, b) -> bool:
    return field.is_zero(field.coerce(a) - field.coerce(b))


def _products_match(B: Matrix, vector, products) -> bool:
    if len(vector) != B.rows or len(products) != B.rows:
        return False
    image = B.apply(vector)
    field = B.field
    return all(_same(field, field.coerce(x) * y, p) for x, y, p in zip(vector, image, products))


def revalidate(certificate: Certificate, source: Source) -> bool:
    """인증서가 주장하는 위반(또는 통과)을 재계산으로 확인"""
    if isinstance(certificate, Pass):
        return True

    if isinstance(certificate, ToeplitzMinor):
        if not isinstance(source, SeqWindow):
            return False
        M = source.minor_matrix(certificate.rows, certificate.cols)
        if M is UNKNOWN:
            return False
        value = det(M)
        return _same(M.field, value, certificate.value) and certificate.requirement.violated_by(M.field.sign(value))

    B = resolve_block(source, certificate.location)
    field = B.field

    if isinstance(certificate, FailingMinor):
        value = det(B)
        return _same(field, value, certificate.value) and certificate.requirement.violated_by(field.sign(value))

    if isinstance(certificate, SignReversalWitness):
        return (
            is_alternating(certificate.vector, field)
            and _products_match(B, certificate.vector, certificate.products)
            and all(field.sign(p) < 0 for p in certificate.products)
        )

    if isinstance(certificate, KernelWitness):
        return (
            len(certificate.vector) == B.cols
            and is_alternating(certificate.vector, field)
            and all(field.is_zero(v) for v in B.apply(certificate.vector))
        )

    if isinstance(certificate, SnrViolation):
        if not _products_match(B, certificate.vector, certificate.products):
            return False
        if all(field.is_zero(field.coerce(v)) for v in certificate.vector):
            return False
        if certificate.strict:
            return all(field.sign(p) <= 0 for p in certificate.products)
        return all(
            field.sign(p) < 0
            for v, p in zip(certificate.vector, certificate.products)
            if not field.is_zero(field.coerce(v))
        )

    raise CertificateError(f"Unknown certificate kind {type(certificate).__name__}")


def require_valid(certificate: Certificate, source: Source) -> None:
    """재검증 실패 시 CertificateError"""
    if not revalidate(certificate, source):
        logger.error("Certificate %s failed re-validation", certificate.kind)
        raise CertificateError(
            f"Certificate of kind {certificate.kind!r} does not re-validate against its source",
            {"kind": certificate.kind},
        )
