from pydantic_settings import BaseSettings
from typing import Literal


class Settings(BaseSettings):
    # 앱 기본 설정
    APP_NAME: str = "TP Certifier"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # 스칼라 설정 (exact: 유리수, float: 허용오차 비교)
    SCALAR_MODE: Literal["exact", "float"] = "exact"
    FLOAT_TOLERANCE: float = 1e-9

    # 열거 한도
    TN_ENUMERATION_CAP: int = 10_000_000
    HULL_FAMILY_BUDGET: int = 2 ** 20
    SNR_SUBMATRIX_CAP: int = 10_000

    # 샘플링 격자
    ALT_SAMPLE_GRID: int = 1024
    HULL_SAMPLE_GRID: int = 64
    VERTEX_CHECK_LIMIT: int = 10

    class Config:
        env_file = ".env"
        case_sensitive = True


# 전역 설정 인스턴스
settings = Settings()
