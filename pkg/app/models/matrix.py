from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.core.exceptions import InvalidDimensionError, ScalarModeMismatchError
from app.models.index import Location
from app.models.scalar import Scalar, ScalarField, default_field


class Matrix:
    """
    불변 m×n 행렬.
    - 내부 표현은 읽기 전용 numpy 배열 (exact: object 배열의 Fraction, float: float64)
    - 인덱스는 내부적으로 0-based, 사용자 입출력(Window/IndexPair)은 1-based
    """

    __slots__ = ("_data", "_field")

    def __init__(self, entries: Union[Sequence[Sequence[Any]], np.ndarray], field: Optional[ScalarField] = None):
        field = field or default_field()
        rows = [list(row) for row in entries]
        if not rows or not rows[0]:
            raise InvalidDimensionError("Matrix needs at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise InvalidDimensionError(
                    f"Row {i + 1} has {len(row)} entries, expected {width}",
                    {"row": i + 1},
                )

        data = np.empty((len(rows), width), dtype=field.dtype)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                data[i, j] = field.coerce(value)
        data.flags.writeable = False
        self._data = data
        self._field = field

    @classmethod
    def _wrap(cls, data: np.ndarray, field: ScalarField) -> "Matrix":
        """이미 변환된 배열을 복사 없이 감싸기 (내부용)"""
        obj = object.__new__(cls)
        if data.ndim != 2 or 0 in data.shape:
            raise InvalidDimensionError(f"Invalid matrix shape {data.shape}")
        data = data.astype(field.dtype, copy=False)
        data.flags.writeable = False
        obj._data = data
        obj._field = field
        return obj

    # 생성 헬퍼
    @classmethod
    def identity(cls, n: int, field: Optional[ScalarField] = None) -> "Matrix":
        field = field or default_field()
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, m: int, n: int, field: Optional[ScalarField] = None) -> "Matrix":
        field = field or default_field()
        return cls([[0] * n for _ in range(m)], field)

    @classmethod
    def full(cls, m: int, n: int, value: Any, field: Optional[ScalarField] = None) -> "Matrix":
        field = field or default_field()
        return cls([[value] * n for _ in range(m)], field)

    @classmethod
    def diagonal(cls, values: Sequence[Any], field: Optional[ScalarField] = None) -> "Matrix":
        field = field or default_field()
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    # 기본 속성
    @property
    def field(self) -> ScalarField:
        return self._field

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def array(self) -> np.ndarray:
        """읽기 전용 배열 뷰"""
        return self._data

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        return self._data[key]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self._data]

    def render_rows(self) -> List[List[str]]:
        return [[self._field.render(v) for v in row] for row in self._data]

    def take(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        """0-based 행/열 인덱스로 부분행렬 추출"""
        return Matrix._wrap(self._data[np.ix_(list(rows), list(cols))].copy(), self._field)

    def with_entry(self, i: int, j: int, value: Any) -> "Matrix":
        data = self._data.copy()
        data[i, j] = self._field.coerce(value)
        return Matrix._wrap(data, self._field)

    # 산술
    def _check_peer(self, other: "Matrix") -> None:
        if self._field != other._field:
            raise ScalarModeMismatchError(
                f"Cannot combine {self._field.label} and {other._field.label} matrices"
            )
        if self.shape != other.shape:
            raise InvalidDimensionError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_peer(other)
        return Matrix._wrap(self._data + other._data, self._field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_peer(other)
        return Matrix._wrap(self._data - other._data, self._field)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(-self._data, self._field)

    def scale(self, factor: Any) -> "Matrix":
        return Matrix._wrap(self._data * self._field.coerce(factor), self._field)

    def abs(self) -> "Matrix":
        """성분별 절댓값 |A|"""
        return Matrix._wrap(np.abs(self._data), self._field)

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self._data.T.copy(), self._field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self._field != other._field:
            raise ScalarModeMismatchError("Cannot multiply matrices of different scalar modes")
        if self.cols != other.rows:
            raise InvalidDimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        return Matrix._wrap(self._data.dot(other._data), self._field)

    def apply(self, x: Iterable[Any]) -> Tuple[Scalar, ...]:
        """행렬-벡터 곱 Ax"""
        vec = [self._field.coerce(v) for v in x]
        if len(vec) != self.cols:
            raise InvalidDimensionError(f"Vector of length {len(vec)} does not match {self.cols} columns")
        return tuple(
            sum((a * b for a, b in zip(row, vec)), self._field.zero()) for row in self._data
        )

    # 비교
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._data.ravel().tolist())))

    def key(self) -> Tuple[Tuple[Scalar, ...], ...]:
        """딕셔너리 캐시 키"""
        return tuple(tuple(row) for row in self._data.tolist())

    def __repr__(self) -> str:
        body = "; ".join(", ".join(r) for r in self.render_rows())
        return f"Matrix({self.rows}x{self.cols}, [{body}], {self._field.label})"


def submatrix(A: Matrix, location: Location) -> Matrix:
    """Window/IndexPair 위치의 부분행렬 (1-based)"""
    if not location.fits(A.rows, A.cols):
        raise InvalidDimensionError(
            f"{location} lies outside a {A.rows}x{A.cols} matrix",
            {"rows": list(location.rows), "cols": list(location.cols)},
        )
    return A.take([i - 1 for i in location.rows], [j - 1 for j in location.cols])
