from dataclasses import dataclass
from typing import Any, Optional, Sequence, Tuple

from app.core.exceptions import InvalidDimensionError, InvalidVectorError
from app.models.index import Location
from app.models.matrix import Matrix
from app.models.scalar import EXACT, Scalar, ScalarField, default_field


def _signs(x: Sequence[Any], field: ScalarField) -> Tuple[int, ...]:
    return tuple(field.sign(v) for v in x)


def is_alternating(x: Sequence[Any], field: ScalarField = EXACT) -> bool:
    """모든 성분이 0이 아니고 부호가 교대하는지"""
    signs = _signs(x, field)
    if not signs or 0 in signs:
        return False
    return all(a == -b for a, b in zip(signs, signs[1:]))


@dataclass(frozen=True)
class AltVector:
    """alt(r) 의 원소: 0 이 없는 교대 부호 벡터"""
    entries: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not is_alternating(self.entries):
            raise InvalidVectorError(f"Not an alternating vector: {self.entries}")

    @property
    def leading_positive(self) -> bool:
        return self.entries[0] > 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __neg__(self) -> "AltVector":
        return AltVector(tuple(-v for v in self.entries))


def alt_vector(r: int, leading_positive: bool = True) -> AltVector:
    """d_r = (1, -1, ..., (-1)^(r-1)) 또는 그 부호 반전"""
    if r < 1:
        raise InvalidDimensionError(f"Alternating vector length must be >= 1, got {r}")
    lead = 1 if leading_positive else -1
    return AltVector(tuple(lead * (-1) ** i for i in range(r)))


def sign_diag(z: Sequence[int], field: Optional[ScalarField] = None) -> Matrix:
    """D_z: 대각 성분이 z_i 인 대각행렬"""
    z = list(z)
    if not z:
        raise InvalidDimensionError("Sign vector must be non-empty")
    for i, v in enumerate(z):
        if v not in (1, -1):
            raise InvalidVectorError(f"Sign vector entry {i + 1} is {v!r}, expected +1 or -1")
    return Matrix.diagonal(z, field or default_field())


def count_sign_changes(x: Sequence[Any], field: ScalarField = EXACT) -> int:
    """S^-(x): 0 성분을 지운 뒤의 부호 변화 횟수"""
    signs = [s for s in _signs(x, field) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True)
class ZVector:
    """z^B = det(B) adj(B) d_r 와 그 출처"""
    values: Tuple[Scalar, ...]
    determinant: Scalar
    source: Optional[Location] = None

    @property
    def size(self) -> int:
        return len(self.values)

    def is_zero(self, field: ScalarField = EXACT) -> bool:
        return all(field.is_zero(v) for v in self.values)
