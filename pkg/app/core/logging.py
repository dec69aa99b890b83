import logging
import sys
from typing import Optional

from app.core.config import settings

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


def setup_logging(level: Optional[str] = None) -> None:
    """stderr 로깅 설정 (stdout 은 JSON 리포트 전용)"""
    if settings.DEBUG:
        level = "DEBUG"
    level = (level or settings.LOG_LEVEL).upper()

    root = logging.getLogger("app")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
