from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.common import RationalStr


class LabelsSchema(BaseModel):
    """전수 검사로 얻은 최대 차수"""
    tp: int = Field(..., ge=0)
    tn: int = Field(..., ge=0)


class CorpusEntry(BaseModel):
    matrix: List[List[RationalStr]] = Field(..., min_length=1)
    labels: LabelsSchema
    origin: Optional[str] = Field(None, description="생성기 이름")


class CorpusListing(BaseModel):
    """generate 명령 출력"""
    app: str
    version: str
    command: List[str]
    entries: List[CorpusEntry]
    saved: Optional[List[str]] = Field(None, description="--out 으로 저장한 파일 경로")
