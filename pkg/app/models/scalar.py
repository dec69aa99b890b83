from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

import numpy as np

from app.core.config import settings
from app.core.exceptions import InputFormatError, InvalidDimensionError

Scalar = Union[Fraction, float]


class ScalarMode(str, Enum):
    """스칼라 모드"""
    EXACT = "exact"
    FLOAT = "float"


def parse_rational(text: str) -> Fraction:
    """'p/q', 정수, 소수('1.25', '1e-3') 문자열을 정확한 유리수로 변환"""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError(f"Invalid rational literal {text!r}: {e}")


@dataclass(frozen=True)
class ScalarField:
    """
    한 계산 세션의 스칼라 규약.
    - exact: Fraction, 부호 판정 오차 0
    - float: float64, |v| <= tolerance 이면 부호 0
    """
    mode: ScalarMode = ScalarMode.EXACT
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.tolerance < 0:
            raise InvalidDimensionError("Float tolerance must be non-negative")

    @property
    def exact(self) -> bool:
        return self.mode == ScalarMode.EXACT

    @property
    def dtype(self) -> Any:
        return object if self.exact else np.float64

    @property
    def label(self) -> str:
        """리포트용 모드 표기"""
        if self.exact:
            return "exact"
        return f"numerical(eps={self.tolerance:g})"

    def coerce(self, value: Any) -> Scalar:
        if self.exact:
            if isinstance(value, str):
                return parse_rational(value)
            if isinstance(value, (Rational, int)):
                return Fraction(value)
            # 소수는 십진 표기 그대로 유리수화 (이진 근사값 사용 안 함)
            return Fraction(repr(float(value)))
        if isinstance(value, str):
            return float(parse_rational(value))
        return float(value)

    def sign(self, value: Scalar) -> int:
        if self.exact:
            return (value > 0) - (value < 0)
        if abs(value) <= self.tolerance:
            return 0
        return 1 if value > 0 else -1

    def is_zero(self, value: Scalar) -> bool:
        return self.sign(value) == 0

    def zero(self) -> Scalar:
        return Fraction(0) if self.exact else 0.0

    def one(self) -> Scalar:
        return Fraction(1) if self.exact else 1.0

    def render(self, value: Scalar) -> str:
        if self.exact:
            return str(Fraction(value))
        return repr(float(value))


EXACT = ScalarField()


def default_field() -> ScalarField:
    """Settings 기준 기본 스칼라 필드"""
    return ScalarField(ScalarMode(settings.SCALAR_MODE), settings.FLOAT_TOLERANCE)
