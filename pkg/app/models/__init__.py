# 도메인 타입들을 한 곳에서 임포트
from app.models.scalar import EXACT, Scalar, ScalarField, ScalarMode, default_field, parse_rational

# 인덱스 / 행렬 / 벡터
from app.models.index import IndexPair, Location, MinorId, Window, contiguous_windows
from app.models.matrix import Matrix, submatrix
from app.models.vector import (
    AltVector,
    ZVector,
    alt_vector,
    count_sign_changes,
    is_alternating,
    sign_diag,
)

# 수열
from app.models.sequence import UNKNOWN, SeqExtent, SeqWindow, ToeplitzBlock, Unknown

# 인증서 및 판정 결과
from app.models.certificate import (
    PASS,
    Certificate,
    CostStats,
    FailingMinor,
    KernelWitness,
    Pass,
    Requirement,
    SignReversalWitness,
    SnrViolation,
    ToeplitzMinor,
    Verdict,
)

# 구간 헐
from app.models.hull import HullVerdict, IntervalHull, TestMatrixId

__all__ = [
    "EXACT", "Scalar", "ScalarField", "ScalarMode", "default_field", "parse_rational",
    "IndexPair", "Location", "MinorId", "Window", "contiguous_windows",
    "Matrix", "submatrix",
    "AltVector", "ZVector", "alt_vector", "count_sign_changes", "is_alternating", "sign_diag",
    "UNKNOWN", "SeqExtent", "SeqWindow", "ToeplitzBlock", "Unknown",
    "PASS", "Certificate", "CostStats", "FailingMinor", "KernelWitness", "Pass", "Requirement",
    "SignReversalWitness", "SnrViolation", "ToeplitzMinor", "Verdict",
    "HullVerdict", "IntervalHull", "TestMatrixId",
]
