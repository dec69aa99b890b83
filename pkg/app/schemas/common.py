from fractions import Fraction
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, BeforeValidator
from typing_extensions import Annotated


def _rational_text(value: Union[str, int, float]) -> str:
    """유리수 문자열 정규화 ("p/q", 정수, 소수). 숫자 리터럴도 허용"""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, float):
        value = repr(value)
    text = str(value).strip()
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid rational literal {text!r}")
    return text


# 파일 경계를 넘는 모든 스칼라는 문자열 유리수
RationalStr = Annotated[str, BeforeValidator(_rational_text)]


class ErrorResponse(BaseModel):
    """에러 응답 (stderr 로 출력)"""
    error: Dict[str, Any]

    @classmethod
    def create(
        cls,
        code: str,
        message: str,
        details: Optional[Dict[str, Any]] = None
    ) -> "ErrorResponse":
        """에러 응답 생성"""
        error_data = {
            "code": code,
            "message": message
        }
        if details:
            error_data["details"] = details

        return cls(error=error_data)
