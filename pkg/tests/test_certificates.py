from fractions import Fraction

import pytest

from app.core.exceptions import CertificateError
from app.models import (
    EXACT,
    PASS,
    FailingMinor,
    IndexPair,
    KernelWitness,
    Requirement,
    SeqWindow,
    SignReversalWitness,
    SnrViolation,
    ToeplitzBlock,
    ToeplitzMinor,
    Window,
)
from app.services.certificates import require_valid, resolve_block, revalidate
from tests.conftest import mat

F = Fraction


@pytest.fixture
def reversed_block():
    return mat([[1, 2], [3, 4]])


@pytest.fixture
def geometric():
    return SeqWindow(-3, [F(2) ** n for n in range(-3, 4)], field=EXACT)


class TestRevalidate:
    def test_pass_needs_no_witness(self, vdm3):
        assert revalidate(PASS, vdm3)

    def test_failing_minor(self, identity3):
        assert revalidate(FailingMinor(IndexPair((1,), (2,)), F(0)), identity3)
        # 값이 틀림
        assert not revalidate(FailingMinor(IndexPair((1,), (2,)), F(1)), identity3)
        # 값은 맞지만 위반이 아님
        assert not revalidate(FailingMinor(IndexPair((1,), (1,)), F(1)), identity3)

    def test_zero_minor_is_not_a_tn_violation(self, identity3):
        minor = FailingMinor(IndexPair((1,), (2,)), F(0), Requirement.NONNEGATIVE)
        assert not revalidate(minor, identity3)

    def test_sign_reversal(self, reversed_block):
        good = SignReversalWitness(Window(1, 1, 2), (F(-12), F(8)), (F(-48), F(-32)))
        assert revalidate(good, reversed_block)

    @pytest.mark.parametrize(
        "vector, products",
        [
            ((F(-12), F(8)), (F(-48), F(-31))),
            ((F(-12), F(-8)), (F(-48), F(-32))),
            ((F(1), F(-1)), (F(-1), F(1))),
        ],
    )
    def test_tampered_reversal_rejected(self, reversed_block, vector, products):
        assert not revalidate(SignReversalWitness(Window(1, 1, 2), vector, products), reversed_block)

    def test_kernel(self):
        ones = mat([[1, 1], [1, 1]])
        assert revalidate(KernelWitness(Window(1, 1, 2), (F(1), F(-1))), ones)
        assert not revalidate(KernelWitness(Window(1, 1, 2), (F(1), F(-2))), ones)
        assert not revalidate(KernelWitness(Window(1, 1, 2), (F(1),)), ones)

    def test_snr_violation_strict_and_nonstrict(self):
        B = mat([[0, 0], [1, 0]])
        strict = SnrViolation(Window(1, 1, 2), (F(1), F(-1)), (F(0), F(-1)), strict=True)
        nonstrict = SnrViolation(Window(1, 1, 2), (F(1), F(-1)), (F(0), F(-1)), strict=False)
        assert revalidate(strict, B)
        assert not revalidate(nonstrict, B)

    def test_toeplitz_block_location(self, geometric):
        # 등비수열의 2×2 블록은 특이
        block = resolve_block(geometric, ToeplitzBlock(0, 2))
        assert block == mat([[1, F(1, 2)], [2, 1]])
        assert revalidate(KernelWitness(ToeplitzBlock(0, 2), (F(1), F(-2))), geometric)

    def test_toeplitz_minor(self, geometric):
        assert revalidate(ToeplitzMinor((0, 1), (0, 1), F(0)), geometric)
        assert not revalidate(ToeplitzMinor((0, 1), (0, 1), F(0), Requirement.NONNEGATIVE), geometric)
        # 윈도우 밖 항
        assert not revalidate(ToeplitzMinor((0, 10), (0, 1), F(0)), geometric)

    def test_source_kind_mismatch(self, geometric, vdm3):
        with pytest.raises(CertificateError):
            revalidate(KernelWitness(ToeplitzBlock(0, 2), (F(1), F(-2))), vdm3)
        with pytest.raises(CertificateError):
            revalidate(KernelWitness(Window(1, 1, 2), (F(1), F(-1))), geometric)
        assert not revalidate(ToeplitzMinor((0,), (0,), F(1)), vdm3)

    def test_undetermined_block(self, geometric):
        with pytest.raises(CertificateError):
            resolve_block(geometric, ToeplitzBlock(3, 2))


def test_require_valid(reversed_block):
    require_valid(SignReversalWitness(Window(1, 1, 2), (F(-12), F(8)), (F(-48), F(-32))), reversed_block)
    with pytest.raises(CertificateError) as exc:
        require_valid(FailingMinor(IndexPair((1,), (1,)), F(1)), reversed_block)
    assert exc.value.details == {"kind": "failing_minor"}
