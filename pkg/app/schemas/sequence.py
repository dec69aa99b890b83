from typing import List, Optional

from pydantic import BaseModel, Field

from app.models import ScalarField, SeqWindow
from app.schemas.common import RationalStr


class SequenceFile(BaseModel):
    """수열 파일 { "offset": int, "values": [...], "finite_support": bool }"""
    offset: int = Field(..., description="첫 항의 인덱스")
    values: List[RationalStr] = Field(..., min_length=1, description="c_offset, c_offset+1, ...")
    finite_support: bool = Field(False, description="윈도우 밖 항을 0 으로 고정")

    def to_window(self, field: Optional[ScalarField] = None) -> SeqWindow:
        return SeqWindow(self.offset, self.values, self.finite_support, field)

    @classmethod
    def from_window(cls, s: SeqWindow) -> "SequenceFile":
        return cls(
            offset=s.offset,
            values=[s.field.render(v) for v in s.values],
            finite_support=s.finite_support,
        )
