from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field
from typing_extensions import Annotated

from app.core.exceptions import InputFormatError
from app.models import (
    PASS,
    Certificate,
    CostStats,
    FailingMinor,
    IndexPair,
    KernelWitness,
    Pass,
    Requirement,
    ScalarField,
    ScalarMode,
    SignReversalWitness,
    SnrViolation,
    ToeplitzBlock,
    ToeplitzMinor,
    Window,
)
from app.schemas.common import RationalStr
from app.schemas.matrix import MatrixFile
from app.schemas.sequence import SequenceFile


# 위치 (1-based)
class LocationSchema(BaseModel):
    type: Literal["window", "submatrix", "toeplitz"]
    rows: List[int] = Field(default_factory=list)
    cols: List[int] = Field(default_factory=list)
    l: Optional[int] = None
    size: int = Field(..., ge=1)


# 인증서 (kind 로 구분)
class PassSchema(BaseModel):
    kind: Literal["pass"] = "pass"


class FailingMinorSchema(BaseModel):
    kind: Literal["failing_minor"] = "failing_minor"
    rows: List[int]
    cols: List[int]
    value: RationalStr
    requirement: Requirement


class SignReversalSchema(BaseModel):
    kind: Literal["sign_reversal"] = "sign_reversal"
    location: LocationSchema
    vector: List[RationalStr]
    products: List[RationalStr]


class KernelSchema(BaseModel):
    kind: Literal["kernel"] = "kernel"
    location: LocationSchema
    vector: List[RationalStr]


class SnrViolationSchema(BaseModel):
    kind: Literal["snr_violation"] = "snr_violation"
    location: LocationSchema
    vector: List[RationalStr]
    products: List[RationalStr]
    strict: bool = True


class ToeplitzMinorSchema(BaseModel):
    kind: Literal["toeplitz_minor"] = "toeplitz_minor"
    rows: List[int]
    cols: List[int]
    value: RationalStr
    requirement: Requirement


CertificateSchema = Annotated[
    Union[
        PassSchema,
        FailingMinorSchema,
        SignReversalSchema,
        KernelSchema,
        SnrViolationSchema,
        ToeplitzMinorSchema,
    ],
    Field(discriminator="kind"),
]


class StatsSchema(BaseModel):
    determinants: int = 0
    submatrices: int = 0
    skipped: int = 0
    wall_time: float = 0.0

    @classmethod
    def from_stats(cls, stats: CostStats) -> "StatsSchema":
        return cls(
            determinants=stats.determinants,
            submatrices=stats.submatrices,
            skipped=stats.skipped,
            wall_time=round(stats.elapsed, 6),
        )


class HullFailureSchema(BaseModel):
    """헐 판정에서 실패한 시험 행렬"""
    label: str
    z: List[int]
    z_prime: List[int]
    matrix: MatrixFile
    is_member: bool


class ExtentSchema(BaseModel):
    """수열 판정이 훑은 인덱스 범위"""
    start: int
    end: int
    finite_support: bool


class VerdictSchema(BaseModel):
    claim: str = Field(..., description="예: TP_3, TN_2, P-matrix, PF_2")
    holds: bool
    conclusive: bool = True
    numerical: bool = False
    certificate: CertificateSchema = Field(default_factory=PassSchema)
    failing: Optional[HullFailureSchema] = None
    tested: Optional[int] = None
    distinct: Optional[int] = None
    extent: Optional[ExtentSchema] = None
    stats: StatsSchema = Field(default_factory=StatsSchema)


class InputsSchema(BaseModel):
    """리포트에 포함된 입력 (verify-cert 가 재검증에 사용)"""
    matrix: Optional[MatrixFile] = None
    hull_a: Optional[MatrixFile] = None
    hull_b: Optional[MatrixFile] = None
    sequence: Optional[SequenceFile] = None


class ModeSchema(BaseModel):
    scalar: ScalarMode = ScalarMode.EXACT
    tolerance: Optional[float] = None
    label: str = "exact"

    @classmethod
    def from_field(cls, field: ScalarField) -> "ModeSchema":
        return cls(
            scalar=field.mode,
            tolerance=None if field.exact else field.tolerance,
            label=field.label,
        )

    def to_field(self) -> ScalarField:
        if self.scalar is ScalarMode.EXACT:
            return ScalarField()
        return ScalarField(ScalarMode.FLOAT, self.tolerance if self.tolerance is not None else 1e-9)


class BenchEntrySchema(BaseModel):
    method: str
    planned: int
    determinants: int
    wall_time: float


class Report(BaseModel):
    """명령 하나의 결과 리포트 (stdout 으로 한 번에 출력)"""
    app: str
    version: str
    command: List[str]
    input_digest: str
    mode: ModeSchema
    verdicts: List[VerdictSchema] = Field(default_factory=list)
    inputs: InputsSchema = Field(default_factory=InputsSchema)
    stats: StatsSchema = Field(default_factory=StatsSchema)
    bench: Optional[List[BenchEntrySchema]] = None
    exit_code: int = 0


# 도메인 <-> 스키마 변환

def location_to_schema(location) -> LocationSchema:
    if isinstance(location, ToeplitzBlock):
        return LocationSchema(type="toeplitz", l=location.l, size=location.size)
    if isinstance(location, Window):
        return LocationSchema(
            type="window", rows=list(location.rows), cols=list(location.cols), size=location.size
        )
    return LocationSchema(
        type="submatrix", rows=list(location.rows), cols=list(location.cols), size=location.size
    )


def location_from_schema(schema: LocationSchema):
    if schema.type == "toeplitz":
        if schema.l is None:
            raise InputFormatError("Toeplitz location needs 'l'")
        return ToeplitzBlock(schema.l, schema.size)
    pair = IndexPair(tuple(schema.rows), tuple(schema.cols))
    if pair.size != schema.size:
        raise InputFormatError(f"Location size {schema.size} does not match its {pair.size} indices")
    if schema.type == "window":
        return Window(pair.rows[0], pair.cols[0], pair.size)
    return pair


def certificate_to_schema(certificate: Certificate, field: ScalarField):
    render = field.render

    def vec(values):
        return [render(v) for v in values]

    if isinstance(certificate, Pass):
        return PassSchema()
    if isinstance(certificate, FailingMinor):
        return FailingMinorSchema(
            rows=list(certificate.minor.rows),
            cols=list(certificate.minor.cols),
            value=render(certificate.value),
            requirement=certificate.requirement,
        )
    if isinstance(certificate, SignReversalWitness):
        return SignReversalSchema(
            location=location_to_schema(certificate.location),
            vector=vec(certificate.vector),
            products=vec(certificate.products),
        )
    if isinstance(certificate, KernelWitness):
        return KernelSchema(location=location_to_schema(certificate.location), vector=vec(certificate.vector))
    if isinstance(certificate, SnrViolation):
        return SnrViolationSchema(
            location=location_to_schema(certificate.location),
            vector=vec(certificate.vector),
            products=vec(certificate.products),
            strict=certificate.strict,
        )
    if isinstance(certificate, ToeplitzMinor):
        return ToeplitzMinorSchema(
            rows=list(certificate.rows),
            cols=list(certificate.cols),
            value=render(certificate.value),
            requirement=certificate.requirement,
        )
    raise InputFormatError(f"Cannot serialize certificate {type(certificate).__name__}")


def certificate_from_schema(schema, field: ScalarField) -> Certificate:
    coerce = field.coerce

    def vec(values):
        return tuple(coerce(v) for v in values)

    if isinstance(schema, PassSchema):
        return PASS
    if isinstance(schema, FailingMinorSchema):
        return FailingMinor(IndexPair(tuple(schema.rows), tuple(schema.cols)), coerce(schema.value), schema.requirement)
    if isinstance(schema, SignReversalSchema):
        return SignReversalWitness(location_from_schema(schema.location), vec(schema.vector), vec(schema.products))
    if isinstance(schema, KernelSchema):
        return KernelWitness(location_from_schema(schema.location), vec(schema.vector))
    if isinstance(schema, SnrViolationSchema):
        return SnrViolation(
            location_from_schema(schema.location), vec(schema.vector), vec(schema.products), schema.strict
        )
    if isinstance(schema, ToeplitzMinorSchema):
        return ToeplitzMinor(tuple(schema.rows), tuple(schema.cols), coerce(schema.value), schema.requirement)
    raise InputFormatError(f"Unknown certificate schema {type(schema).__name__}")
