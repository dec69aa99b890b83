from dataclasses import dataclass
from typing import List, Tuple, Union

from app.core.exceptions import InvalidDimensionError


@dataclass(frozen=True)
class Window:
    """연속 r×r 부분행렬 (1-based 시작 위치)"""
    row_start: int
    col_start: int
    size: int

    def __post_init__(self):
        if self.size < 1 or self.row_start < 1 or self.col_start < 1:
            raise InvalidDimensionError(
                f"Invalid window at ({self.row_start}, {self.col_start}) of size {self.size}"
            )

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(range(self.row_start, self.row_start + self.size))

    @property
    def cols(self) -> Tuple[int, ...]:
        return tuple(range(self.col_start, self.col_start + self.size))

    def fits(self, m: int, n: int) -> bool:
        return self.row_start + self.size - 1 <= m and self.col_start + self.size - 1 <= n

    def as_index_pair(self) -> "IndexPair":
        return IndexPair(self.rows, self.cols)

    def __str__(self) -> str:
        return f"window(rows {self.rows[0]}..{self.rows[-1]}, cols {self.cols[0]}..{self.cols[-1]})"


@dataclass(frozen=True)
class IndexPair:
    """임의의 증가 행/열 인덱스 집합 (1-based, 같은 크기)"""
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if not self.rows or len(self.rows) != len(self.cols):
            raise InvalidDimensionError(
                f"Row and column index sets must be non-empty and of equal size: {self.rows} / {self.cols}"
            )
        for label, idx in (("row", self.rows), ("column", self.cols)):
            if idx[0] < 1 or any(a >= b for a, b in zip(idx, idx[1:])):
                raise InvalidDimensionError(f"{label} indices must be strictly increasing and >= 1: {idx}")

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def is_principal(self) -> bool:
        return self.rows == self.cols

    def fits(self, m: int, n: int) -> bool:
        return self.rows[-1] <= m and self.cols[-1] <= n

    def as_index_pair(self) -> "IndexPair":
        return self

    def __str__(self) -> str:
        return f"rows {set(self.rows)} x cols {set(self.cols)}"


# 소행렬 식별자는 IndexPair 와 동일
MinorId = IndexPair
Location = Union[Window, IndexPair]


def contiguous_windows(m: int, n: int, r: int) -> List[Window]:
    """크기 r 연속 창 전체 ((row_start, col_start) 순)"""
    if r < 1 or r > min(m, n):
        raise InvalidDimensionError(
            f"Window size {r} out of range for a {m}x{n} matrix",
            {"r": r, "m": m, "n": n},
        )
    return [
        Window(i, j, r)
        for i in range(1, m - r + 2)
        for j in range(1, n - r + 2)
    ]
