from typing import Any, Dict, Optional


class TPCertError(Exception):
    """모든 도메인 예외의 기본 클래스 (code + message + details)"""

    code: str = "TPCERT_ERROR"
    exit_code: int = 2

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidDimensionError(TPCertError):
    """차원/크기/k 범위 오류"""
    code = "INVALID_DIMENSION"


class InvalidVectorError(TPCertError):
    """영벡터, ±1 이 아닌 부호 벡터 등"""
    code = "INVALID_VECTOR"


class ScalarModeMismatchError(TPCertError):
    code = "SCALAR_MODE_MISMATCH"


class InputFormatError(TPCertError):
    """입력 파일 파싱 오류 (위치 정보 포함)"""
    code = "INPUT_FORMAT"

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        position: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        details = dict(details or {})
        if source is not None:
            details["source"] = source
        if position is not None:
            details["position"] = position
            message = f"{message} (at {position})"
        super().__init__(message, details)


class GeneratorError(TPCertError):
    code = "GENERATOR"


class HullMembershipError(TPCertError):
    code = "HULL_MEMBERSHIP"


class BudgetExceededError(TPCertError):
    """설정된 열거 한도 초과 (override 없이)"""
    code = "BUDGET_EXCEEDED"
    exit_code = 3


class CertificateError(TPCertError):
    """인증서 재검증 실패"""
    code = "CERTIFICATE"
    exit_code = 1


class InvalidModeError(TPCertError):
    """알 수 없는 판정/샘플링 모드"""
    code = "INVALID_MODE"
