"""
행렬식, 여인수 행렬(adjugate), 소행렬 열거, z^B 벡터.

exact 모드의 행렬식은 공통분모로 정수화한 뒤 분수 없는(Bareiss) 소거로
계산한다. 여인수 전개는 독립적인 검산용 오라클로 남겨 둔다.
"""
import logging
import math
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import InvalidDimensionError
from app.models import (
    CostStats,
    IndexPair,
    Location,
    Matrix,
    Scalar,
    ScalarField,
    ZVector,
    alt_vector,
)

logger = logging.getLogger(__name__)


def _require_square(B: Matrix) -> int:
    if not B.is_square:
        raise InvalidDimensionError(f"Expected a square matrix, got {B.rows}x{B.cols}")
    return B.rows


def check_order(A: Matrix, r: int, label: str = "r") -> None:
    if r < 1 or r > min(A.rows, A.cols):
        raise InvalidDimensionError(
            f"{label}={r} out of range for a {A.rows}x{A.cols} matrix (1 <= {label} <= {min(A.rows, A.cols)})",
            {label: r, "m": A.rows, "n": A.cols},
        )


def _integerize(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], int]:
    """공통분모 L 을 곱해 정수 행렬로 (det 는 L^r 로 나눠 복원)"""
    denom = math.lcm(*(v.denominator for row in rows for v in row))
    return [[v.numerator * (denom // v.denominator) for v in row] for row in rows], denom


def _bareiss_int(a: List[List[int]]) -> int:
    """정수 행렬의 Bareiss 소거 (0 피벗은 행 교환, a 를 변경함)"""
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


class MinorEvaluator:
    """한 행렬의 소행렬 값을 반복 계산 (exact 모드는 한 번만 정수화)"""

    def __init__(self, A: Matrix, stats: Optional[CostStats] = None):
        self.field: ScalarField = A.field
        self.stats = stats
        if self.field.exact:
            self._ints, self._denom = _integerize(A.to_rows())
        else:
            self._floats = np.asarray(A.array, dtype=np.float64)

    def __call__(self, rows: Sequence[int], cols: Sequence[int]) -> Scalar:
        """0-based 행/열 인덱스의 소행렬식"""
        if self.stats is not None:
            self.stats.determinants += 1
        r = len(rows)
        if r == 0:
            return self.field.one()
        if self.field.exact:
            ints = self._ints
            value = _bareiss_int([[ints[i][j] for j in cols] for i in rows])
            return Fraction(value, self._denom ** r)
        if r == 1:
            return float(self._floats[rows[0], cols[0]])
        return float(np.linalg.det(self._floats[np.ix_(list(rows), list(cols))]))


def det(B: Matrix, stats: Optional[CostStats] = None) -> Scalar:
    """정사각 행렬의 행렬식 (exact: 오차 없음, float: LU)"""
    r = _require_square(B)
    return MinorEvaluator(B, stats)(range(r), range(r))


def det_by_cofactors(B: Matrix) -> Scalar:
    """첫 행 여인수 전개 (검산용 오라클, 작은 크기 전용)"""
    _require_square(B)

    def expand(rows: List[List[Scalar]]) -> Scalar:
        if len(rows) == 1:
            return rows[0][0]
        total = B.field.zero()
        for j, lead in enumerate(rows[0]):
            if lead == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = lead * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return expand(B.to_rows())


def adjugate(B: Matrix, stats: Optional[CostStats] = None) -> Matrix:
    """adj(B): 여인수 행렬의 전치, B adj(B) = det(B) I"""
    r = _require_square(B)
    field = B.field
    if r == 1:
        return Matrix._wrap(np.array([[field.one()]], dtype=field.dtype), field)

    if not field.exact:
        d = det(B, stats)
        if not field.is_zero(d):
            return Matrix._wrap(d * np.linalg.inv(np.asarray(B.array, dtype=np.float64)), field)

    # exact 모드는 가역성을 가정하지 않고 소행렬에서 직접 계산
    evaluate = MinorEvaluator(B, stats)
    idx = list(range(r))
    adj = np.empty((r, r), dtype=field.dtype)
    for i in idx:
        keep_rows = idx[:i] + idx[i + 1:]
        for j in idx:
            cofactor = evaluate(keep_rows, idx[:j] + idx[j + 1:])
            adj[j, i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return Matrix._wrap(adj, field)


def minor_count(m: int, n: int, r: int) -> int:
    return math.comb(m, r) * math.comb(n, r)


def iter_minor_values(
    evaluate: MinorEvaluator, m: int, n: int, r: int
) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Scalar]]:
    """크기 r 소행렬을 (행 집합, 열 집합) 사전순으로, 0-based 인덱스와 함께"""
    col_sets = list(combinations(range(n), r))
    for rows in combinations(range(m), r):
        for cols in col_sets:
            yield rows, cols, evaluate(rows, cols)


def all_minors(
    A: Matrix, r: int, stats: Optional[CostStats] = None
) -> Iterator[Tuple[IndexPair, Scalar]]:
    """모든 r×r 소행렬 (MinorId, 값), C(m,r)·C(n,r) 개"""
    check_order(A, r)
    evaluate = MinorEvaluator(A, stats)
    for rows, cols, value in iter_minor_values(evaluate, A.rows, A.cols, r):
        yield IndexPair(tuple(i + 1 for i in rows), tuple(j + 1 for j in cols)), value


def z_vector(
    B: Matrix, source: Optional[Location] = None, stats: Optional[CostStats] = None
) -> ZVector:
    """z^B = det(B) adj(B) d_r (det(B) = 0 이면 영벡터)"""
    r = _require_square(B)
    field = B.field
    d = det(B, stats)
    if field.is_zero(d):
        return ZVector(tuple(field.zero() for _ in range(r)), d, source)
    image = adjugate(B, stats).apply(alt_vector(r))
    return ZVector(tuple(d * v for v in image), d, source)


def cofactor_sum_z_vector(B: Matrix) -> Tuple[Scalar, ...]:
    """
    z^B_i = (-1)^{i-1} det(B) Σ_j det B_{(<r>\\{j}) × (<r>\\{i})}
    adjugate 를 거치지 않는 독립 계산 (자기검증용)
    """
    r = _require_square(B)
    evaluate = MinorEvaluator(B)
    idx = list(range(r))
    d = evaluate(idx, idx)
    values = []
    for i in idx:
        cols = idx[:i] + idx[i + 1:]
        total = sum((evaluate(idx[:j] + idx[j + 1:], cols) for j in idx), B.field.zero())
        values.append(d * total if i % 2 == 0 else -(d * total))
    return tuple(values)


def z_vector_identity_holds(B: Matrix) -> bool:
    """z_vector 와 여인수 합 공식의 좌표별 일치 여부"""
    field = B.field
    return all(
        field.is_zero(a - b) for a, b in zip(z_vector(B).values, cofactor_sum_z_vector(B))
    )
