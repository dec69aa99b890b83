"""
구간 헐 𝕀(A, B) 판정.

- TP_k: C+ = I_{d_m, d_n}, C- = I_{d_m, -d_n} 두 행렬만 검사하면 충분
- TN_k: I_{z,z'} 전체(2^{m+n-1} 개, I_{-z,-z'} = I_{z,z'} 로 중복 제거)를 검사
"""
import logging
from itertools import product
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.exceptions import (
    BudgetExceededError,
    HullMembershipError,
    InvalidDimensionError,
    InvalidVectorError,
    ScalarModeMismatchError,
)
from app.models import (
    PASS,
    CostStats,
    HullVerdict,
    IntervalHull,
    Matrix,
    Scalar,
    TestMatrixId,
    alt_vector,
)
from app.services.minors import check_order
from app.services.positivity import tn_certificate, tp_certificate
from app.utils.sampling import Seed, grid_uniform, make_rng

logger = logging.getLogger(__name__)


class RohnCheck(NamedTuple):
    """x_i (Cx)_i >= x_i (I_{z,z} x)_i 점검 결과"""
    holds: bool
    margins: Tuple[Scalar, ...]
    z: Tuple[int, ...]


def i_zz(A: Matrix, B: Matrix, z: Sequence[int], z_prime: Sequence[int]) -> Matrix:
    """I_{z,z'}(A, B) = (A+B)/2 - D_z |A-B|/2 D_{z'}"""
    return IntervalHull(A, B).test_matrix(z, z_prime)


def _corners(h: IntervalHull) -> List[Tuple[TestMatrixId, Matrix]]:
    m, n = h.shape
    d_m, d_n = tuple(alt_vector(m)), tuple(alt_vector(n))
    minus_d_n = tuple(-v for v in d_n)
    return [
        (TestMatrixId("C+", d_m, d_n), h.test_matrix(d_m, d_n)),
        (TestMatrixId("C-", d_m, minus_d_n), h.test_matrix(d_m, minus_d_n)),
    ]


def c_pm(A: Matrix, B: Matrix) -> Tuple[Matrix, Matrix]:
    """(C+, C-) = (I_{d_m, d_n}, I_{d_m, -d_n})"""
    (_, plus), (_, minus) = _corners(IntervalHull(A, B))
    return plus, minus


def _check_compatible(h: IntervalHull, C: Matrix) -> None:
    if C.field != h.field:
        raise ScalarModeMismatchError("Matrix and hull use different scalar modes")
    if C.shape != h.shape:
        raise InvalidDimensionError(f"Matrix shape {C.shape} does not match hull shape {h.shape}")


def hull_contains(h: IntervalHull, C: Matrix) -> bool:
    """I_l <= C <= I_u (성분별)"""
    _check_compatible(h, C)
    sign = h.field.sign
    lower, upper = h.lower.array, h.upper.array
    return all(
        sign(c - lo) >= 0 and sign(up - c) >= 0
        for c, lo, up in zip(C.array.flat, lower.flat, upper.flat)
    )


def _failure(
    h: IntervalHull, test_id: TestMatrixId, matrix: Matrix, verdict, stats: CostStats, tested: int, distinct: int
) -> HullVerdict:
    member = hull_contains(h, matrix)
    logger.info("Hull test matrix %s fails (%s), hull member: %s", test_id.label, verdict.certificate.kind, member)
    return HullVerdict(
        holds=False,
        certificate=verdict.certificate,
        failing=test_id,
        failing_matrix=matrix,
        failing_is_member=member,
        tested=tested,
        distinct=distinct,
        stats=stats,
        numerical=not h.field.exact,
    )


def hull_is_tp_k(h: IntervalHull, k: int) -> HullVerdict:
    """헐 전체가 TP_k 인지: C+, C- 의 tp_certificate 로 판정"""
    check_order(h.A, k, "k")
    stats = CostStats()
    for tested, (test_id, matrix) in enumerate(_corners(h), start=1):
        verdict = tp_certificate(matrix, k)
        stats.merge(verdict.stats)
        if not verdict.holds:
            return _failure(h, test_id, matrix, verdict, stats, tested, tested)
    return HullVerdict(True, PASS, tested=2, distinct=2, stats=stats, numerical=not h.field.exact)


def sign_family(m: int, n: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """z_1 = +1 로 고정한 (z, z') 쌍, z' 는 이진 카운터 순서"""
    for tail in product((1, -1), repeat=m - 1):
        z = (1,) + tail
        for z_prime in product((1, -1), repeat=n):
            yield z, z_prime


def hull_is_tn_k(
    h: IntervalHull, k: int, budget: Optional[int] = None, override: bool = False
) -> HullVerdict:
    """
    헐 전체가 TN_k 인지: 2^{m+n-1} 개의 I_{z,z'} 를 tn_certificate 로 검사.
    같은 행렬이 되는 (z, z') 는 한 번만 계산하고, 서로 다른 행렬 수를 distinct 로 보고한다.
    """
    check_order(h.A, k, "k")
    m, n = h.shape
    family = 2 ** (m + n - 1)
    budget = budget if budget is not None else settings.HULL_FAMILY_BUDGET
    if family > budget and not override:
        logger.warning("Hull family of %d matrices exceeds budget %d", family, budget)
        raise BudgetExceededError(
            f"Hull TN test family has {family} matrices, over the budget {budget}",
            {"family": family, "budget": budget},
        )

    stats = CostStats()
    seen: Dict[tuple, bool] = {}
    tested = 0
    for z, z_prime in sign_family(m, n):
        tested += 1
        matrix = h.test_matrix(z, z_prime)
        key = matrix.key()
        if key in seen:
            continue
        verdict = tn_certificate(matrix, k, allow_large=override)
        stats.merge(verdict.stats)
        seen[key] = verdict.holds
        if not verdict.holds:
            test_id = TestMatrixId("I_zz", z, z_prime)
            return _failure(h, test_id, matrix, verdict, stats, tested, len(seen))
    logger.debug("Hull TN family: %d pairs, %d distinct matrices", tested, len(seen))
    return HullVerdict(True, PASS, tested=tested, distinct=len(seen), stats=stats, numerical=not h.field.exact)


def rohn_bound_check(h: IntervalHull, C: Matrix, x: Sequence[Scalar]) -> RohnCheck:
    """
    헐의 원소 C 와 0 이 아닌 x 에 대해 x_i (Cx)_i >= x_i (I_{z,z} x)_i.
    z_i = 1 (x_i >= 0), -1 (x_i < 0).
    """
    m, n = h.shape
    if m != n:
        raise InvalidDimensionError(f"Rohn-type bound needs a square hull, got {m}x{n}")
    _check_compatible(h, C)
    if len(x) != n:
        raise InvalidDimensionError(f"Vector of length {len(x)} does not match size {n}")
    field = h.field
    x = tuple(field.coerce(v) for v in x)
    if all(field.is_zero(v) for v in x):
        raise InvalidVectorError("Rohn-type bound needs a nonzero vector")
    if not hull_contains(h, C):
        raise HullMembershipError("Matrix is not a member of the interval hull")

    z = tuple(1 if field.sign(v) >= 0 else -1 for v in x)
    lower = h.test_matrix(z, z)
    cx, lx = C.apply(x), lower.apply(x)
    margins = tuple(v * (a - b) for v, a, b in zip(x, cx, lx))
    holds = all(field.sign(g) >= 0 for g in margins)
    if not holds:
        logger.info("Rohn-type bound fails for z=%s", z)
    return RohnCheck(holds, margins, z)


def sample_hull(h: IntervalHull, seed: Seed, grid: int = 0) -> Matrix:
    """C = T∘A + (1-T)∘B, t_ij 는 [0, 1] 의 유리수 격자 위에서 균등"""
    grid = grid or settings.HULL_SAMPLE_GRID
    rng = make_rng(seed)
    field = h.field
    m, n = h.shape
    a, b = h.A.array, h.B.array
    data = np.empty((m, n), dtype=field.dtype)
    for i in range(m):
        for j in range(n):
            t = grid_uniform(rng, 0, 1, field, grid)
            data[i, j] = t * a[i, j] + (1 - t) * b[i, j]
    return Matrix._wrap(data, field)


# 체커보드 순서

def checkerboard_leq(X: Matrix, Y: Matrix) -> bool:
    """X <=* Y  <=>  D_{d_m} (Y - X) D_{d_n} >= 0"""
    if X.shape != Y.shape:
        raise InvalidDimensionError(f"Cannot compare shapes {X.shape} and {Y.shape}")
    diff = Y - X
    sign = X.field.sign
    return all(
        sign(diff[i, j]) * (-1) ** (i + j) >= 0 for i in range(X.rows) for j in range(X.cols)
    )


def hull_vertices(h: IntervalHull) -> Iterator[Matrix]:
    """모든 꼭짓점 행렬 (각 성분이 a_ij 또는 b_ij), 2^{mn} 개"""
    m, n = h.shape
    a, b = h.A.array, h.B.array
    for choice in product((False, True), repeat=m * n):
        data = np.where(np.array(choice, dtype=bool).reshape(m, n), b, a)
        yield Matrix._wrap(data.astype(h.field.dtype), h.field)


def _enlarged_sample(h: IntervalHull, rng: np.random.Generator) -> Matrix:
    """t_ij 를 [-1/2, 3/2] 에서 뽑아 헐 밖의 행렬도 섞는다"""
    field = h.field
    m, n = h.shape
    a, b = h.A.array, h.B.array
    low, high = field.coerce("-1/2"), field.coerce("3/2")
    data = np.empty((m, n), dtype=field.dtype)
    for i in range(m):
        for j in range(n):
            t = grid_uniform(rng, low, high, field, 2 * settings.HULL_SAMPLE_GRID)
            data[i, j] = t * a[i, j] + (1 - t) * b[i, j]
    return Matrix._wrap(data, field)


def checkerboard_equiv(h: IntervalHull, samples: int = 200, seed: Seed = 0) -> bool:
    """
    성분별 순서와 체커보드 순서가 같은 헐을 정의하는지 표본으로 확인:
    I_l <= C <= I_u  <=>  C+ <=* C <=* C-.
    m·n 이 작으면 모든 꼭짓점도 확인한다.
    """
    plus, minus = (matrix for _, matrix in _corners(h))
    rng = make_rng(seed)

    def agrees(C: Matrix) -> bool:
        return hull_contains(h, C) == (checkerboard_leq(plus, C) and checkerboard_leq(C, minus))

    candidates: List[Matrix] = [_enlarged_sample(h, rng) for _ in range(samples)]
    m, n = h.shape
    if m * n <= settings.VERTEX_CHECK_LIMIT:
        candidates.extend(hull_vertices(h))
    for C in candidates:
        if not agrees(C):
            logger.info("Checkerboard and entrywise orderings disagree on %r", C)
            return False
    return True
