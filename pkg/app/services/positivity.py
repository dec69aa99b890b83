"""
TP_k / TN_k 판정과 인증서.

- 전수 검사(brute force): 크기 <= k 인 모든 소행렬
- 연속 검사(Fekete-Schoenberg): 크기 <= k 인 연속 창만
- 인증서 검사: 가장 작은 실패 창에서 z^B 또는 교대 커널 벡터를 증거로 제시
- 부호 비역전(SNR) 점검, P-행렬, 변동 감소 성질 점검
"""
import logging
from enum import Enum
from itertools import chain, combinations
from typing import Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import (
    BudgetExceededError,
    InvalidDimensionError,
    InvalidModeError,
    InvalidVectorError,
)
from app.models import (
    PASS,
    Certificate,
    CostStats,
    FailingMinor,
    IndexPair,
    KernelWitness,
    Location,
    Matrix,
    Pass,
    Requirement,
    Scalar,
    SignReversalWitness,
    SnrViolation,
    Verdict,
    Window,
    contiguous_windows,
    count_sign_changes,
    is_alternating,
    submatrix,
)
from app.services.minors import (
    MinorEvaluator,
    check_order,
    adjugate,
    iter_minor_values,
    minor_count,
    z_vector,
)
from app.utils.sampling import Seed, make_rng, random_alternating, random_nonzero

logger = logging.getLogger(__name__)


class SnrMode(str, Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"


class SnrCheck(NamedTuple):
    """부호 비역전 점검 결과 (index 는 1-based)"""
    holds: bool
    index: Optional[int]
    products: Tuple[Scalar, ...]


class VariationCheck(NamedTuple):
    holds: bool
    changes_before: int
    changes_after: int
    detail: str


class EmbeddedCheck(NamedTuple):
    holds: bool
    failing_row: Optional[int]


def _to_index_pair(rows: Sequence[int], cols: Sequence[int]) -> IndexPair:
    return IndexPair(tuple(i + 1 for i in rows), tuple(j + 1 for j in cols))


def _verdict(A: Matrix, certificate: Certificate, stats: CostStats, conclusive: bool = True) -> Verdict:
    holds = isinstance(certificate, Pass)
    return Verdict(holds, certificate, stats, numerical=not A.field.exact, conclusive=conclusive)


# 전수 검사 / 연속 검사

def _bruteforce(A: Matrix, k: int, requirement: Requirement, cap: Optional[int]) -> Verdict:
    check_order(A, k, "k")
    stats = CostStats()
    evaluate = MinorEvaluator(A, stats)
    sign = A.field.sign
    with stats.timer():
        for r in range(1, k + 1):
            count = minor_count(A.rows, A.cols, r)
            if cap is not None and count > cap:
                logger.warning("Refusing to enumerate %d minors of size %d (cap %d)", count, r, cap)
                raise BudgetExceededError(
                    f"{count} minors of size {r} exceed the enumeration cap {cap}",
                    {"r": r, "count": count, "cap": cap},
                )
            for rows, cols, value in iter_minor_values(evaluate, A.rows, A.cols, r):
                stats.submatrices += 1
                if requirement.violated_by(sign(value)):
                    minor = _to_index_pair(rows, cols)
                    logger.info("Minor %s = %s violates %s", minor, value, requirement.value)
                    return _verdict(A, FailingMinor(minor, value, requirement), stats)
    logger.debug("Brute force visited %d minors", stats.submatrices)
    return _verdict(A, PASS, stats)


def is_tp_k_bruteforce(A: Matrix, k: int) -> Verdict:
    """크기 <= k 인 모든 소행렬이 양수인지 (크기 오름차순, 사전순 첫 실패를 인증)"""
    return _bruteforce(A, k, Requirement.POSITIVE, None)


def is_tn_k_bruteforce(A: Matrix, k: int, allow_large: bool = False) -> Verdict:
    """크기 <= k 인 모든 소행렬이 음이 아닌지"""
    cap = None if allow_large else settings.TN_ENUMERATION_CAP
    return _bruteforce(A, k, Requirement.NONNEGATIVE, cap)


def _iter_windows(A: Matrix, k: int) -> Iterator[Tuple[int, Window]]:
    for r in range(1, k + 1):
        for window in contiguous_windows(A.rows, A.cols, r):
            yield r, window


def is_tp_k_contiguous(A: Matrix, k: int) -> Verdict:
    """Fekete-Schoenberg: 크기 <= k 인 연속 창의 행렬식만 검사"""
    check_order(A, k, "k")
    stats = CostStats()
    evaluate = MinorEvaluator(A, stats)
    with stats.timer():
        for r, window in _iter_windows(A, k):
            stats.submatrices += 1
            rows = range(window.row_start - 1, window.row_start - 1 + r)
            cols = range(window.col_start - 1, window.col_start - 1 + r)
            value = evaluate(rows, cols)
            if A.field.sign(value) <= 0:
                logger.info("Contiguous %s has determinant %s", window, value)
                return _verdict(A, FailingMinor(window.as_index_pair(), value), stats)
    return _verdict(A, PASS, stats)


# 부호 비역전

def snr_products(B: Matrix, x: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    """x_i (Bx)_i"""
    if not B.is_square:
        raise InvalidDimensionError(f"Expected a square matrix, got {B.rows}x{B.cols}")
    if len(x) != B.rows:
        raise InvalidDimensionError(f"Vector of length {len(x)} does not match size {B.rows}")
    vec = [B.field.coerce(v) for v in x]
    if all(B.field.is_zero(v) for v in vec):
        raise InvalidVectorError("Sign non-reversal is only defined for nonzero vectors")
    image = B.apply(vec)
    return tuple(a * b for a, b in zip(vec, image))


def snr_strict_at(B: Matrix, x: Sequence[Scalar]) -> SnrCheck:
    """어떤 i 에 대해 x_i (Bx)_i > 0 인가 (가장 작은 i 반환)"""
    products = snr_products(B, x)
    for i, p in enumerate(products):
        if B.field.sign(p) > 0:
            return SnrCheck(True, i + 1, products)
    return SnrCheck(False, None, products)


def snr_nonstrict_at(B: Matrix, x: Sequence[Scalar]) -> SnrCheck:
    """어떤 i 에 대해 x_i != 0 이고 x_i (Bx)_i >= 0 인가"""
    products = snr_products(B, x)
    for i, (v, p) in enumerate(zip(x, products)):
        if not B.field.is_zero(B.field.coerce(v)) and B.field.sign(p) >= 0:
            return SnrCheck(True, i + 1, products)
    return SnrCheck(False, None, products)


def kernel_witness_vector(B: Matrix, stats: Optional[CostStats] = None) -> Optional[Tuple[Scalar, ...]]:
    """
    특이 행렬 B 의 0 이 아닌 adj(B) 열 중 첫 번째 (첫 성분 양수로 정규화).
    교대 부호가 아니면 None.
    """
    field = B.field
    adj = adjugate(B, stats)
    for j in range(B.cols):
        column = tuple(adj[i, j] for i in range(B.rows))
        if all(field.is_zero(v) for v in column):
            continue
        if not is_alternating(column, field):
            return None
        if field.sign(column[0]) < 0:
            column = tuple(-v for v in column)
        return column
    return None


def reversal_certificate(
    location: Location, x: Sequence[Scalar], products: Sequence[Scalar], B: Matrix
) -> Optional[SignReversalWitness]:
    """모든 곱이 음수이고 x 가 교대 부호이면 전면 역전 증거"""
    field = B.field
    if is_alternating(x, field) and all(field.sign(p) < 0 for p in products):
        return SignReversalWitness(location, tuple(x), tuple(products))
    return None


def _window_failure(A: Matrix, window: Location, B: Matrix, value: Scalar, stats: CostStats) -> Certificate:
    """최소 실패 창의 인증서: det < 0 이면 z^B 역전, det = 0 이면 교대 커널 벡터"""
    field = A.field
    fallback = FailingMinor(window.as_index_pair(), value)
    if field.sign(value) < 0:
        z = z_vector(B, window, stats)
        products = snr_products(B, z.values)
        return reversal_certificate(window, z.values, products, B) or fallback
    kernel = kernel_witness_vector(B, stats)
    if kernel is None or not all(field.is_zero(v) for v in B.apply(kernel)):
        return fallback
    return KernelWitness(window, kernel)


def tp_certificate(A: Matrix, k: int) -> Verdict:
    """
    크기 오름차순으로 연속 창을 훑어 첫 번째 det(B) <= 0 창에서 멈춘다.
    그 아래 크기의 연속 소행렬은 모두 양수이므로 z^B 는 교대 벡터이고,
    det < 0 이면 모든 z_i (B z)_i < 0, det = 0 이면 adj(B) 열이 교대 커널 벡터다.
    """
    check_order(A, k, "k")
    stats = CostStats()
    evaluate = MinorEvaluator(A, stats)
    with stats.timer():
        for r, window in _iter_windows(A, k):
            stats.submatrices += 1
            rows = range(window.row_start - 1, window.row_start - 1 + r)
            cols = range(window.col_start - 1, window.col_start - 1 + r)
            value = evaluate(rows, cols)
            if A.field.sign(value) > 0:
                continue
            B = submatrix(A, window)
            certificate = _window_failure(A, window, B, value, stats)
            logger.info("TP_%d refuted at %s by %s", k, window, certificate.kind)
            return _verdict(A, certificate, stats)
    return _verdict(A, PASS, stats)


def tn_certificate(A: Matrix, k: int, allow_large: bool = False) -> Verdict:
    """
    모든 r×r 부분행렬을 크기 오름차순으로 훑는다 (연속 창만으로 줄일 수 없음).
    최소 실패 B 에서 z^B 가 0 이 아니고 전면 역전이면 SignReversalWitness,
    아니면 FailingMinor.
    """
    check_order(A, k, "k")
    cap = None if allow_large else settings.TN_ENUMERATION_CAP
    stats = CostStats()
    evaluate = MinorEvaluator(A, stats)
    with stats.timer():
        for r in range(1, k + 1):
            count = minor_count(A.rows, A.cols, r)
            if cap is not None and count > cap:
                raise BudgetExceededError(
                    f"{count} submatrices of size {r} exceed the enumeration cap {cap}",
                    {"r": r, "count": count, "cap": cap},
                )
            for rows, cols, value in iter_minor_values(evaluate, A.rows, A.cols, r):
                stats.submatrices += 1
                if A.field.sign(value) >= 0:
                    continue
                location = _to_index_pair(rows, cols)
                B = A.take(rows, cols)
                z = z_vector(B, location, stats)
                certificate: Certificate = FailingMinor(location, value, Requirement.NONNEGATIVE)
                if not z.is_zero(A.field):
                    products = snr_products(B, z.values)
                    certificate = reversal_certificate(location, z.values, products, B) or certificate
                logger.info("TN_%d refuted at %s by %s", k, location, certificate.kind)
                return _verdict(A, certificate, stats)
    return _verdict(A, PASS, stats)


def is_p_matrix(A: Matrix) -> Verdict:
    """Gale-Nikaido: 모든 주소행렬식이 양수인지 (크기 오름차순, 사전순)"""
    if not A.is_square:
        raise InvalidDimensionError(f"P-matrix test needs a square matrix, got {A.rows}x{A.cols}")
    stats = CostStats()
    evaluate = MinorEvaluator(A, stats)
    with stats.timer():
        for size in range(1, A.rows + 1):
            for idx in combinations(range(A.rows), size):
                stats.submatrices += 1
                value = evaluate(idx, idx)
                if A.field.sign(value) <= 0:
                    return _verdict(A, FailingMinor(_to_index_pair(idx, idx), value), stats)
    return _verdict(A, PASS, stats)


# 샘플링 기반 반증

def _sample_locations(A: Matrix, k: int, mode: SnrMode, cap: int, stats: CostStats) -> Iterator[Location]:
    if mode is SnrMode.STRICT:
        for _, window in _iter_windows(A, k):
            yield window
        return
    visited = 0
    for r in range(1, k + 1):
        for rows in combinations(range(A.rows), r):
            for cols in combinations(range(A.cols), r):
                if visited >= cap:
                    stats.skipped += 1
                    continue
                visited += 1
                yield _to_index_pair(rows, cols)


def probe_vectors(B: Matrix, location: Location, mode: SnrMode, stats: CostStats) -> List[Tuple[Scalar, ...]]:
    """결정적 시험 벡터: det != 0 이면 z^B, 특이이면(strict) 교대 커널 벡터"""
    field = B.field
    z = z_vector(B, location, stats)
    if not z.is_zero(field):
        return [z.values]
    if mode is SnrMode.STRICT:
        kernel = kernel_witness_vector(B, stats)
        if kernel is not None:
            return [kernel]
    return []


def sampled_snr_falsify(
    A: Matrix,
    k: int,
    mode: str = SnrMode.STRICT,
    samples: int = 1000,
    seed: Seed = 0,
    cap: Optional[int] = None,
) -> Verdict:
    """
    교대 벡터를 샘플링해 SNR 위반을 찾는다.
    strict: 크기 <= k 인 모든 연속 창, nonstrict: 크기 <= k 인 부분행렬 (cap 개까지).
    반례는 TP_k/TN_k 의 건전한 반증이지만, 통과는 증명이 아니다 (conclusive=False).
    """
    try:
        mode = SnrMode(mode)
    except ValueError:
        raise InvalidModeError(f"Unknown sign non-reversal mode {mode!r}", {"allowed": [m.value for m in SnrMode]})
    if samples < 1:
        raise InvalidDimensionError(f"samples must be >= 1, got {samples}")
    check_order(A, k, "k")
    if cap is None:
        cap = settings.SNR_SUBMATRIX_CAP
    if cap < 1:
        raise InvalidDimensionError(f"cap must be >= 1, got {cap}")
    check = snr_strict_at if mode is SnrMode.STRICT else snr_nonstrict_at
    rng = make_rng(seed)
    stats = CostStats()
    with stats.timer():
        for location in _sample_locations(A, k, mode, cap, stats):
            stats.submatrices += 1
            B = submatrix(A, location)
            r = B.rows
            randoms = (
                random_alternating(rng, r, s % 2 == 0, A.field) for s in range(samples)
            )
            for x in chain(probe_vectors(B, location, mode, stats), randoms):
                result = check(B, x)
                if result.holds:
                    continue
                certificate = reversal_certificate(location, x, result.products, B) or SnrViolation(
                    location, tuple(x), result.products, strict=mode is SnrMode.STRICT
                )
                logger.info("Sampled %s sign non-reversal fails at %s", mode.value, location)
                return _verdict(A, certificate, stats)
    return _verdict(A, PASS, stats, conclusive=False)


def sampled_p_snr(A: Matrix, samples: int, seed: Seed) -> Verdict:
    """Gale-Nikaido 방향: 임의의 0 이 아닌 x 에 대해 x_i (Ax)_i > 0 인 i 가 있는지 샘플링"""
    if not A.is_square:
        raise InvalidDimensionError(f"Expected a square matrix, got {A.rows}x{A.cols}")
    rng = make_rng(seed)
    stats = CostStats()
    location = IndexPair(tuple(range(1, A.rows + 1)), tuple(range(1, A.cols + 1)))
    with stats.timer():
        for _ in range(samples):
            x = random_nonzero(rng, A.rows, A.field)
            result = snr_strict_at(A, x)
            if not result.holds:
                return _verdict(A, SnrViolation(location, x, result.products, strict=True), stats)
    return _verdict(A, PASS, stats, conclusive=False)


def embedded_snr_at(A: Matrix, col_offset: int, x: Sequence[Scalar]) -> EmbeddedCheck:
    """
    y = (0_l, x, 0_s) 로 끼워 넣었을 때, 모든 j 에 대해
    y_{l+i} (Ay)_{i+j-1} > 0 인 i 가 있는지. 실패한 첫 j (1-based) 를 돌려준다.
    """
    r = len(x)
    if r < 1 or r > A.rows or col_offset < 0 or col_offset + r > A.cols:
        raise InvalidDimensionError(
            f"Cannot embed a vector of length {r} at column offset {col_offset} in a {A.rows}x{A.cols} matrix"
        )
    if not is_alternating(x, A.field):
        raise InvalidVectorError("Embedded test vector must be alternating")
    y = [A.field.zero()] * A.cols
    y[col_offset:col_offset + r] = [A.field.coerce(v) for v in x]
    image = A.apply(y)
    for j in range(A.rows - r + 1):
        if not any(A.field.sign(y[col_offset + i] * image[i + j]) > 0 for i in range(r)):
            return EmbeddedCheck(False, j + 1)
    return EmbeddedCheck(True, None)


# 변동 감소 성질 (판정 절차가 아닌 성질 점검용)

def _first_last_sign(x: Iterable[Scalar], field) -> Tuple[int, int]:
    signs = [s for s in (field.sign(v) for v in x) if s != 0]
    return signs[0], signs[-1]


def variation_check(A: Matrix, x: Sequence[Scalar]) -> VariationCheck:
    """S^-(Ax) <= S^-(x), 같으면 Ax 의 처음/마지막 0 아닌 부호가 x 와 일치해야 함"""
    field = A.field
    image = A.apply(x)
    before = count_sign_changes(x, field)
    after = count_sign_changes(image, field)
    if after > before:
        return VariationCheck(False, before, after, f"S-(Ax)={after} exceeds S-(x)={before}")
    image_zero = all(field.is_zero(v) for v in image)
    if after == before and not image_zero:
        x_first, x_last = _first_last_sign(x, field)
        y_first, y_last = _first_last_sign(image, field)
        if x_first != y_first:
            return VariationCheck(False, before, after, "first nonzero signs differ")
        if x_last != y_last:
            return VariationCheck(False, before, after, "last nonzero signs differ")
        return VariationCheck(True, before, after, "equality case, end signs agree")
    return VariationCheck(True, before, after, "variation diminished")
