from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.common import RationalStr


class GeneratorKind(str, Enum):
    VANDERMONDE = "vandermonde"
    CAUCHY = "cauchy"
    ZERO_PADDED_TN = "zero-padded-tn"
    PERTURBED_HULL = "perturbed-hull"
    RANDOM_SIGNED = "random-signed"
    NEAR_TP = "near-tp"
    BIDIAGONAL = "bidiagonal"


class GeneratorSpec(BaseModel):
    """생성기 스펙 (YAML 또는 JSON)"""
    kind: GeneratorKind
    nodes: Optional[List[RationalStr]] = Field(None, description="vandermonde / perturbed-hull 노드")
    n_cols: Optional[int] = Field(None, ge=1)
    x: Optional[List[RationalStr]] = None
    y: Optional[List[RationalStr]] = None
    eps: Optional[RationalStr] = Field(None, description="perturbed-hull 섭동 크기")
    m: int = Field(3, ge=1)
    n: int = Field(4, ge=1)
    seed: Optional[int] = None
    low: int = -5
    high: int = 5
    r: int = Field(2, ge=2, le=3, description="near-tp 창 크기")
    row: int = Field(1, ge=1)
    col: int = Field(1, ge=1)
    singular: bool = False
    factors: int = Field(2, ge=1, description="bidiagonal 이중대각 쌍 개수")


class GeneratorFile(BaseModel):
    """스펙 파일: 단일 스펙 또는 generators 목록"""
    generators: List[GeneratorSpec] = Field(..., min_length=1)
