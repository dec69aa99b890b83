import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Iterator, Optional, Tuple, Union

from app.core.exceptions import TPCertError
from app.models.index import IndexPair, Location
from app.models.scalar import Scalar
from app.models.sequence import SeqExtent, ToeplitzBlock


class Requirement(str, Enum):
    """소행렬 부호 요구조건"""
    POSITIVE = "positive"
    NONNEGATIVE = "nonnegative"

    def violated_by(self, sign: int) -> bool:
        if self is Requirement.POSITIVE:
            return sign <= 0
        return sign < 0


@dataclass
class CostStats:
    """연산 비용 통계"""
    determinants: int = 0
    submatrices: int = 0
    skipped: int = 0
    elapsed: float = 0.0

    @contextmanager
    def timer(self) -> Iterator["CostStats"]:
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed += time.perf_counter() - start

    def merge(self, other: "CostStats") -> "CostStats":
        self.determinants += other.determinants
        self.submatrices += other.submatrices
        self.skipped += other.skipped
        self.elapsed += other.elapsed
        return self


@dataclass(frozen=True)
class Pass:
    kind: ClassVar[str] = "pass"


@dataclass(frozen=True)
class FailingMinor:
    """요구조건을 어기는 소행렬 (재계산으로 검증 가능)"""
    kind: ClassVar[str] = "failing_minor"
    minor: IndexPair
    value: Scalar
    requirement: Requirement = Requirement.POSITIVE

    @property
    def location(self) -> IndexPair:
        return self.minor


@dataclass(frozen=True)
class SignReversalWitness:
    """교대 벡터 x 에서 모든 i 에 대해 x_i (Bx)_i < 0"""
    kind: ClassVar[str] = "sign_reversal"
    location: Union[Location, ToeplitzBlock]
    vector: Tuple[Scalar, ...]
    products: Tuple[Scalar, ...]


@dataclass(frozen=True)
class KernelWitness:
    """Bx = 0 인 교대 벡터 x"""
    kind: ClassVar[str] = "kernel"
    location: Union[Location, ToeplitzBlock]
    vector: Tuple[Scalar, ...]


@dataclass(frozen=True)
class SnrViolation:
    """
    샘플링으로 찾은 부호 비역전 위반.
    strict: 모든 i 에서 x_i (Bx)_i <= 0
    non-strict: x_i != 0 인 모든 i 에서 x_i (Bx)_i < 0
    """
    kind: ClassVar[str] = "snr_violation"
    location: Union[Location, ToeplitzBlock]
    vector: Tuple[Scalar, ...]
    products: Tuple[Scalar, ...]
    strict: bool = True


@dataclass(frozen=True)
class ToeplitzMinor:
    """수열 소행렬 det(c_{m_i - n_j}) 위반 (m, n 은 임의의 정수 인덱스)"""
    kind: ClassVar[str] = "toeplitz_minor"
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    value: Scalar
    requirement: Requirement = Requirement.POSITIVE


Certificate = Union[Pass, FailingMinor, SignReversalWitness, KernelWitness, SnrViolation, ToeplitzMinor]

PASS = Pass()


@dataclass
class Verdict:
    """판정 결과: holds <=> certificate 가 Pass"""
    holds: bool
    certificate: Certificate
    stats: CostStats = field(default_factory=CostStats)
    numerical: bool = False
    # 샘플링 기반 통과는 증명이 아님
    conclusive: bool = True
    # 수열 판정에서만 설정
    extent: Optional[SeqExtent] = None

    def __post_init__(self):
        if self.holds != isinstance(self.certificate, Pass):
            raise TPCertError(
                "Verdict invariant broken: holds must coincide with a Pass certificate",
                {"holds": self.holds, "certificate": self.certificate.kind},
            )
