"""
유한하게 주어진 양방향 수열의 Pólya frequency (PF_k / TP_k-PF) 점검.

소행렬 det(c_{m_i - n_j}) 는 (m, n) 을 같은 정수만큼 평행이동해도 변하지 않으므로
n_1 = 0 으로 고정하고 열거한다. 결정되지 않은 항(또는 finite support 의 잘린 범위 밖 항)을
건드리는 소행렬은 건너뛰고 stats.skipped 로 보고한다.
"""
import logging
from enum import Enum
from itertools import chain, combinations
from typing import Iterator, Tuple, Union

from app.core.exceptions import InvalidDimensionError, InvalidModeError
from app.models import (
    PASS,
    UNKNOWN,
    CostStats,
    Matrix,
    Requirement,
    SeqWindow,
    SnrViolation,
    ToeplitzBlock,
    ToeplitzMinor,
    Unknown,
    Verdict,
)
from app.services.minors import det
from app.services.positivity import SnrMode, probe_vectors, reversal_certificate, snr_strict_at
from app.utils.sampling import Seed, make_rng, random_alternating

logger = logging.getLogger(__name__)


class PfMode(str, Enum):
    PF = "pf"
    TP = "tp"

    @property
    def requirement(self) -> Requirement:
        return Requirement.NONNEGATIVE if self is PfMode.PF else Requirement.POSITIVE


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidDimensionError(f"k must be >= 1, got {k}")


def toeplitz_block(s: SeqWindow, l: int, r: int) -> Union[Matrix, Unknown]:
    """(c_{l+i-j})_{i,j=1}^r 또는 UNKNOWN"""
    return s.block(l, r)


def _index_tuples(s: SeqWindow, r: int, k: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    a, b = s.index_range(k)
    width = b - a + 1
    col_tails = list(combinations(range(1, width), r - 1))
    for rows in combinations(range(a, b + 1), r):
        for tail in col_tails:
            yield rows, (0,) + tail


def is_pf_k_window(s: SeqWindow, k: int, mode: str = PfMode.PF) -> Verdict:
    """
    크기 <= k 인 결정된 소행렬 det(c_{m_i - n_j}) 전부를 검사.
    pf: >= 0, tp: > 0. 첫 위반(크기 오름차순, m 다음 n 사전순)을 ToeplitzMinor 로 인증.
    """
    try:
        mode = PfMode(mode)
    except ValueError:
        raise InvalidModeError(f"Unknown Pólya frequency mode {mode!r}", {"allowed": [m.value for m in PfMode]})
    _check_k(k)
    extent = s.extent(k)
    a, b = extent.start, extent.end
    requirement = mode.requirement
    sign = s.field.sign
    stats = CostStats()
    with stats.timer():
        for r in range(1, k + 1):
            for rows, cols in _index_tuples(s, r, k):
                if any(not a <= m - n <= b for m in rows for n in cols):
                    stats.skipped += 1
                    continue
                M = s.minor_matrix(rows, cols)
                if M is UNKNOWN:
                    stats.skipped += 1
                    continue
                stats.submatrices += 1
                value = det(M, stats)
                if requirement.violated_by(sign(value)):
                    logger.info("Sequence minor rows=%s cols=%s = %s violates %s", rows, cols, value, mode.value)
                    certificate = ToeplitzMinor(rows, cols, value, requirement)
                    return Verdict(False, certificate, stats, numerical=not s.field.exact, extent=extent)
    logger.debug("Checked %d sequence minors, skipped %d", stats.submatrices, stats.skipped)
    # 윈도우 밖을 알 수 없는 수열에서 통과는 "윈도우 안에 위반 없음"일 뿐
    return Verdict(True, PASS, stats, numerical=not s.field.exact, conclusive=s.finite_support, extent=extent)


def pf_snr_check(s: SeqWindow, k: int, samples: int, seed: Seed) -> Verdict:
    """
    결정된 Toeplitz 블록마다 z^B (특이하면 교대 커널 벡터) 와 교대 벡터 샘플로
    strict 부호 비역전을 점검. 위반은 TP_k-PF 의 반증이다.
    """
    _check_k(k)
    if samples < 1:
        raise InvalidDimensionError(f"samples must be >= 1, got {samples}")
    extent = s.extent(k)
    a, b = extent.start, extent.end
    rng = make_rng(seed)
    stats = CostStats()
    with stats.timer():
        for r in range(1, k + 1):
            for l in range(a + r - 1, b - r + 2):
                B = toeplitz_block(s, l, r)
                if B is UNKNOWN:
                    stats.skipped += 1
                    continue
                stats.submatrices += 1
                location = ToeplitzBlock(l, r)
                randoms = (random_alternating(rng, r, i % 2 == 0, s.field) for i in range(samples))
                for x in chain(probe_vectors(B, location, SnrMode.STRICT, stats), randoms):
                    result = snr_strict_at(B, x)
                    if result.holds:
                        continue
                    certificate = reversal_certificate(location, x, result.products, B) or SnrViolation(
                        location, tuple(x), result.products, strict=True
                    )
                    logger.info("Toeplitz %s reverses signs (%s)", location, certificate.kind)
                    return Verdict(False, certificate, stats, numerical=not s.field.exact, extent=extent)
    return Verdict(True, PASS, stats, numerical=not s.field.exact, conclusive=False, extent=extent)
