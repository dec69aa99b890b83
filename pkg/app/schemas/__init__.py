
# 공통 스키마
from app.schemas.common import (
    ErrorResponse,
    RationalStr,
)

# 입력 파일 스키마
from app.schemas.matrix import MatrixFile
from app.schemas.sequence import SequenceFile
from app.schemas.generator import (
    GeneratorFile,
    GeneratorKind,
    GeneratorSpec,
)

# 코퍼스
from app.schemas.corpus import (
    CorpusEntry,
    CorpusListing,
    LabelsSchema,
)

# 리포트 스키마
from app.schemas.report import (
    BenchEntrySchema,
    CertificateSchema,
    HullFailureSchema,
    InputsSchema,
    LocationSchema,
    ModeSchema,
    Report,
    StatsSchema,
    VerdictSchema,
)


__all__ = [
    # Common schemas
    "ErrorResponse",
    "RationalStr",

    # Input files
    "MatrixFile",
    "SequenceFile",
    "GeneratorFile",
    "GeneratorKind",
    "GeneratorSpec",

    # Corpus
    "CorpusEntry",
    "CorpusListing",
    "LabelsSchema",

    # Report
    "BenchEntrySchema",
    "CertificateSchema",
    "HullFailureSchema",
    "InputsSchema",
    "LocationSchema",
    "ModeSchema",
    "Report",
    "StatsSchema",
    "VerdictSchema",
]
