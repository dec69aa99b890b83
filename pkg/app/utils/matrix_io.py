import csv
import hashlib
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Type, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from app.core.exceptions import InputFormatError
from app.models import Matrix, ScalarField, SeqWindow
from app.schemas.generator import GeneratorFile, GeneratorSpec
from app.schemas.matrix import MatrixFile
from app.schemas.report import InputsSchema, Report
from app.schemas.sequence import SequenceFile

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"Cannot read file: {e.strerror or e}", source=str(path))


def _loc(error: dict) -> str:
    """pydantic 오류 위치 -> 'entries[2][1]' 형식 (인덱스는 1-based)"""
    parts: List[str] = []
    for item in error.get("loc", ()):
        if isinstance(item, int):
            parts.append(f"[{item + 1}]")
        else:
            parts.append(("." if parts else "") + str(item))
    return "".join(parts) or "<root>"


def _validate(model: Type[M], data: Any, source: str) -> M:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InputFormatError(
            f"Invalid {model.__name__}: {first['msg']}",
            source=source,
            position=_loc(first),
            details={"errors": len(e.errors())},
        )


def _load_json(path: Path) -> Any:
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Malformed JSON: {e.msg}", source=str(path), position=f"line {e.lineno}, column {e.colno}")


def _load_csv(path: Path) -> MatrixFile:
    """CSV: 한 줄이 한 행, 소수는 정확한 유리수로 변환"""
    rows: List[List[str]] = []
    reader = csv.reader(_read_text(path).splitlines())
    for i, record in enumerate(reader, start=1):
        cells = [c.strip() for c in record]
        if not any(cells):
            continue
        for j, cell in enumerate(cells, start=1):
            try:
                Fraction(cell)
            except (ValueError, ZeroDivisionError):
                raise InputFormatError(
                    f"Invalid rational literal {cell!r}", source=str(path), position=f"line {i}, column {j}"
                )
        rows.append(cells)
    if not rows:
        raise InputFormatError("Empty CSV matrix", source=str(path))
    return _validate(MatrixFile, {"rows": len(rows), "cols": len(rows[0]), "entries": rows}, str(path))


def load_matrix_file(path: Path) -> MatrixFile:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return _load_csv(path)
    return _validate(MatrixFile, _load_json(path), str(path))


def load_matrix(path: Path, field: Optional[ScalarField] = None) -> Matrix:
    """JSON 또는 CSV 행렬 파일"""
    matrix = load_matrix_file(path).to_matrix(field)
    logger.debug("Loaded %dx%d matrix from %s", matrix.rows, matrix.cols, path)
    return matrix


def load_sequence_file(path: Path) -> SequenceFile:
    return _validate(SequenceFile, _load_json(Path(path)), str(path))


def load_sequence(path: Path, field: Optional[ScalarField] = None) -> SeqWindow:
    return load_sequence_file(path).to_window(field)


def load_generator_specs(path: Path) -> List[GeneratorSpec]:
    """YAML (JSON 포함) 스펙 파일: 단일 스펙 또는 {generators: [...]}"""
    try:
        data = yaml.safe_load(_read_text(path))
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        position = f"line {mark.line + 1}, column {mark.column + 1}" if mark else None
        raise InputFormatError(f"Malformed YAML: {getattr(e, 'problem', e)}", source=str(path), position=position)
    if isinstance(data, dict) and "generators" not in data:
        data = {"generators": [data]}
    return _validate(GeneratorFile, data, str(path)).generators


def load_report(path: Path) -> Report:
    return _validate(Report, _load_json(Path(path)), str(path))


def digest(inputs: InputsSchema) -> str:
    """리포트 입력의 sha256 (정렬된 JSON 기준)"""
    canonical = json.dumps(inputs.model_dump(mode="json", exclude_none=True), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()
