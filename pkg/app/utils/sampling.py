from fractions import Fraction
from typing import Tuple, Union

import numpy as np

from app.core.config import settings
from app.models import Scalar, ScalarField

Seed = Union[int, np.random.Generator]


def make_rng(seed: Seed) -> np.random.Generator:
    """시드(또는 기존 Generator)로부터 결정적 난수 생성기"""
    return np.random.default_rng(seed)


def grid_uniform(rng: np.random.Generator, low: Scalar, high: Scalar, field: ScalarField, grid: int) -> Scalar:
    """
    [low, high] 균등 샘플.
    exact 모드는 간격 (high-low)/grid 의 유리수 격자 위에서 뽑는다.
    """
    if field.exact:
        step = rng.integers(0, grid + 1)
        return Fraction(low) + (Fraction(high) - Fraction(low)) * Fraction(int(step), grid)
    return float(rng.uniform(float(low), float(high)))


def random_alternating(
    rng: np.random.Generator, r: int, leading_positive: bool, field: ScalarField, grid: int = 0
) -> Tuple[Scalar, ...]:
    """크기가 [1, 2] 에서 균등한 교대 부호 벡터"""
    grid = grid or settings.ALT_SAMPLE_GRID
    lead = 1 if leading_positive else -1
    return tuple(
        lead * (-1) ** i * grid_uniform(rng, 1, 2, field, grid) for i in range(r)
    )


def random_nonzero(rng: np.random.Generator, n: int, field: ScalarField, grid: int = 0) -> Tuple[Scalar, ...]:
    """[-2, 2]^n 의 영이 아닌 벡터 (영벡터가 나오면 다시 뽑음)"""
    grid = grid or settings.ALT_SAMPLE_GRID
    while True:
        x = tuple(grid_uniform(rng, -2, 2, field, grid) for _ in range(n))
        if any(not field.is_zero(v) for v in x):
            return x
