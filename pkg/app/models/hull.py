from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import InvalidDimensionError, InvalidVectorError, ScalarModeMismatchError
from app.models.certificate import PASS, Certificate, CostStats
from app.models.matrix import Matrix


def _check_signs(z: Sequence[int], length: int, label: str) -> Tuple[int, ...]:
    z = tuple(int(v) if v in (1, -1) else v for v in z)
    if len(z) != length:
        raise InvalidVectorError(f"{label} has length {len(z)}, expected {length}")
    for i, v in enumerate(z):
        if v not in (1, -1):
            raise InvalidVectorError(f"{label} entry {i + 1} is {v!r}, expected +1 or -1")
    return z


@dataclass(frozen=True)
class IntervalHull:
    """
    구간 헐 I(A, B): 성분별로 a_ij 와 b_ij 사이에 있는 모든 행렬.
    lower/upper/center/radius 는 처음 접근할 때 계산해 캐시한다.
    """
    A: Matrix
    B: Matrix

    def __post_init__(self):
        if self.A.field != self.B.field:
            raise ScalarModeMismatchError("Hull endpoints must share one scalar mode")
        if self.A.shape != self.B.shape:
            raise InvalidDimensionError(f"Hull endpoints differ in shape: {self.A.shape} vs {self.B.shape}")

    @property
    def field(self):
        return self.A.field

    @property
    def shape(self) -> Tuple[int, int]:
        return self.A.shape

    @cached_property
    def lower(self) -> Matrix:
        """I_l = min(a_ij, b_ij)"""
        a, b = self.A.array, self.B.array
        return Matrix._wrap(np.where(a <= b, a, b), self.field)

    @cached_property
    def upper(self) -> Matrix:
        """I_u = max(a_ij, b_ij)"""
        a, b = self.A.array, self.B.array
        return Matrix._wrap(np.where(a >= b, a, b), self.field)

    @cached_property
    def center(self) -> Matrix:
        """I_c = (A + B) / 2"""
        return (self.A + self.B).scale(self.field.coerce("1/2"))

    @cached_property
    def radius(self) -> Matrix:
        """Δ = |A - B| / 2"""
        return (self.A - self.B).abs().scale(self.field.coerce("1/2"))

    def test_matrix(self, z: Sequence[int], z_prime: Sequence[int]) -> Matrix:
        """I_{z,z'} = I_c - D_z Δ D_{z'}"""
        m, n = self.shape
        z = _check_signs(z, m, "z")
        z_prime = _check_signs(z_prime, n, "z'")
        signs = np.outer(np.array(z, dtype=object), np.array(z_prime, dtype=object))
        data = (self.center.array - signs * self.radius.array).astype(self.field.dtype)
        return Matrix._wrap(data, self.field)


@dataclass(frozen=True)
class TestMatrixId:
    """헐 판정에 사용한 시험 행렬 식별자 (C+, C-, 또는 I_{z,z'})"""
    label: str
    z: Tuple[int, ...]
    z_prime: Tuple[int, ...]

    # pytest 수집 대상 아님
    __test__ = False


@dataclass
class HullVerdict:
    """헐 전체 판정 결과"""
    holds: bool
    certificate: Certificate = PASS
    failing: Optional[TestMatrixId] = None
    failing_matrix: Optional[Matrix] = None
    # 실패한 시험 행렬의 헐 포함 여부 (항상 계산해서 보고)
    failing_is_member: Optional[bool] = None
    tested: int = 0
    distinct: int = 0
    stats: CostStats = field(default_factory=CostStats)
    numerical: bool = False
