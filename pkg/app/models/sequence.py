from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence, Tuple, Union

from app.core.exceptions import InvalidDimensionError
from app.models.matrix import Matrix
from app.models.scalar import Scalar, ScalarField, default_field


class Unknown(Enum):
    """윈도우 밖의 미확정 항 (오류가 아닌 값)"""
    TOKEN = "unknown"

    def __repr__(self) -> str:
        return "UNKNOWN"


UNKNOWN = Unknown.TOKEN


@dataclass(frozen=True)
class ToeplitzBlock:
    """수열의 r×r Toeplitz 블록 (c_{l+i-j}) 위치"""
    l: int
    size: int

    def __str__(self) -> str:
        return f"toeplitz(l={self.l}, r={self.size})"


@dataclass(frozen=True)
class SeqExtent:
    """검사한 인덱스 범위. finite_support 가 아니면 관측 구간을 벗어나는 블록은 건너뜀"""
    start: int
    end: int
    finite_support: bool


class SeqWindow:
    """
    양방향 무한 수열 (c_n) 의 유한 관측 구간.
    finite_support 가 설정되면 구간 밖 항은 정확히 0, 아니면 UNKNOWN.
    """

    def __init__(
        self,
        offset: int,
        values: Sequence[Any],
        finite_support: bool = False,
        field: Optional[ScalarField] = None,
    ):
        if not values:
            raise InvalidDimensionError("Sequence window needs at least one term")
        self.field = field or default_field()
        self.offset = int(offset)
        self.values: Tuple[Scalar, ...] = tuple(self.field.coerce(v) for v in values)
        self.finite_support = bool(finite_support)

    @property
    def start(self) -> int:
        return self.offset

    @property
    def end(self) -> int:
        return self.offset + len(self.values) - 1

    def term(self, n: int) -> Union[Scalar, Unknown]:
        if self.start <= n <= self.end:
            return self.values[n - self.offset]
        if self.finite_support:
            return self.field.zero()
        return UNKNOWN

    def is_determined(self, n: int) -> bool:
        return self.finite_support or self.start <= n <= self.end

    def index_range(self, k: int) -> Tuple[int, int]:
        """열거 대상 인덱스 범위 (finite support 는 [start-k, end+k] 로 자름)"""
        if self.finite_support:
            return self.start - k, self.end + k
        return self.start, self.end

    def extent(self, k: int) -> SeqExtent:
        return SeqExtent(*self.index_range(k), self.finite_support)

    def block(self, l: int, r: int) -> Union[Matrix, Unknown]:
        """(c_{l+i-j})_{i,j=1}^r, 필요한 항이 하나라도 미확정이면 UNKNOWN"""
        if r < 1:
            raise InvalidDimensionError(f"Block size must be >= 1, got {r}")
        if not (self.is_determined(l - r + 1) and self.is_determined(l + r - 1)):
            return UNKNOWN
        return Matrix(
            [[self.term(l + i - j) for j in range(r)] for i in range(r)],
            self.field,
        )

    def minor_matrix(self, rows: Sequence[int], cols: Sequence[int]) -> Union[Matrix, Unknown]:
        """(c_{m_i - n_j}) 행렬, 미확정 항이 있으면 UNKNOWN"""
        if len(rows) != len(cols) or not rows:
            raise InvalidDimensionError("Row and column index tuples must be non-empty and of equal length")
        terms = [[self.term(m - n) for n in cols] for m in rows]
        if any(t is UNKNOWN for row in terms for t in row):
            return UNKNOWN
        return Matrix(terms, self.field)

    def __repr__(self) -> str:
        support = "finite" if self.finite_support else "window"
        return f"SeqWindow(offset={self.offset}, len={len(self.values)}, {support})"
