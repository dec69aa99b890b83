import json
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence

import pytest
from hypothesis import strategies as st

from app.core.exceptions import GeneratorError
from app.models import EXACT, IntervalHull, Matrix, ScalarField, ScalarMode
from app.services.generators import build_corpus, cauchy, near_tp, tn_hull_counterexample


def mat(rows: Sequence[Sequence]) -> Matrix:
    """exact 모드 행렬 헬퍼"""
    return Matrix(rows, EXACT)


def write_matrix(path: Path, rows: List[List]) -> Path:
    """행렬 파일(JSON) 작성"""
    payload = {
        "rows": len(rows),
        "cols": len(rows[0]),
        "entries": [[str(Fraction(v)) if not isinstance(v, str) else v for v in row] for row in rows],
    }
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


# hypothesis: 작은 유리수 행렬
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
positives = st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=4)
nonnegatives = st.fractions(min_value=0, max_value=5, max_denominator=4)


@st.composite
def square_matrices(draw, max_size: int = 5):
    r = draw(st.integers(min_value=1, max_value=max_size))
    rows = draw(st.lists(st.lists(rationals, min_size=r, max_size=r), min_size=r, max_size=r))
    return mat(rows)


@st.composite
def rect_matrices(draw, max_size: int = 4, entries=rationals):
    m = draw(st.integers(min_value=1, max_value=max_size))
    n = draw(st.integers(min_value=1, max_value=max_size))
    rows = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
    return mat(rows)


@st.composite
def near_tp_matrices(draw, max_size: int = 4):
    """Cauchy 행렬의 2×2 또는 3×3 창 하나를 특이/음수로 만든 양수 성분 행렬"""
    m = draw(st.integers(min_value=2, max_value=max_size))
    n = draw(st.integers(min_value=2, max_value=max_size))
    x = sorted(draw(st.sets(st.integers(min_value=1, max_value=12), min_size=m, max_size=m)))
    y = sorted(draw(st.sets(st.integers(min_value=1, max_value=12), min_size=n, max_size=n)))
    base = cauchy(x, y, EXACT)
    r = draw(st.sampled_from([2, 3] if min(m, n) >= 3 else [2]))
    row = draw(st.integers(min_value=1, max_value=m - r + 1))
    col = draw(st.integers(min_value=1, max_value=n - r + 1))
    singular = draw(st.booleans())
    try:
        return near_tp(base, r, row, col, singular)
    except GeneratorError:
        return near_tp(base, 2, row, col, singular)


def certificate_matrices(max_size: int = 4):
    """부호 섞인 행렬과 크기 2 이상에서 처음 실패하는 행렬을 섞은 전략"""
    return st.one_of(
        rect_matrices(max_size),
        rect_matrices(max_size, entries=positives),
        rect_matrices(max_size, entries=nonnegatives),
        near_tp_matrices(max_size),
    )


@pytest.fixture
def float_field() -> ScalarField:
    return ScalarField(ScalarMode.FLOAT, 1e-9)


@pytest.fixture
def vdm3() -> Matrix:
    """Vandermonde(1, 2, 3)"""
    return mat([[1, 1, 1], [1, 2, 4], [1, 3, 9]])


@pytest.fixture
def identity3() -> Matrix:
    return Matrix.identity(3, EXACT)


@pytest.fixture
def cauchy3() -> Matrix:
    """Cauchy 1/(x_i + y_j), x = y = (1, 2, 3), det = 1/43200"""
    return cauchy([1, 2, 3], [1, 2, 3], EXACT)


@pytest.fixture
def tn_gap():
    """0 으로 3×4 까지 채운 (A, B, C)"""
    return tn_hull_counterexample(3, 4, EXACT)


@pytest.fixture
def tn_gap_hull(tn_gap) -> IntervalHull:
    A, B, _ = tn_gap
    return IntervalHull(A, B)


@pytest.fixture(scope="session")
def small_corpus():
    """기본 실행용 축소 코퍼스"""
    return build_corpus(60, seed=7, max_size=6)


@pytest.fixture(scope="session")
def full_corpus():
    """slow 실행용 500 개 코퍼스"""
    return build_corpus(500, seed=2024, max_size=6)
