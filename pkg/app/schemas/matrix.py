from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from app.models import Matrix, ScalarField
from app.schemas.common import RationalStr


class MatrixFile(BaseModel):
    """행렬 파일 { "rows": m, "cols": n, "entries": [["3", "1/2", ...], ...] }"""
    rows: int = Field(..., ge=1, description="행 수")
    cols: int = Field(..., ge=1, description="열 수")
    entries: List[List[RationalStr]] = Field(..., description="행 우선 성분 (유리수 문자열)")

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixFile":
        if len(self.entries) != self.rows:
            raise ValueError(f"entries has {len(self.entries)} rows, header says {self.rows}")
        for i, row in enumerate(self.entries, start=1):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, header says {self.cols}")
        return self

    def to_matrix(self, field: Optional[ScalarField] = None) -> Matrix:
        return Matrix(self.entries, field)

    @classmethod
    def from_matrix(cls, A: Matrix) -> "MatrixFile":
        return cls(rows=A.rows, cols=A.cols, entries=A.render_rows())
