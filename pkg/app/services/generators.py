"""
테스트 코퍼스용 행렬 생성기.

생성기는 이론만으로 분류를 주장하지 않는다. 코퍼스에 들어가는 모든 행렬은
전수 검사(brute force)로 계산한 TP/TN 차수 라벨을 함께 가진다.
"""
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import GeneratorError, InputFormatError
from app.models import FailingMinor, IntervalHull, Matrix, ScalarField, default_field
from app.schemas.corpus import CorpusEntry, LabelsSchema
from app.schemas.generator import GeneratorKind, GeneratorSpec
from app.services.minors import det
from app.services.positivity import is_tn_k_bruteforce, is_tp_k_bruteforce
from app.utils.sampling import Seed, make_rng

logger = logging.getLogger(__name__)

TN_GAP_A = [[3, 1, 0, 1], [2, 2, 0, 2], [1, 1, 0, 1]]
TN_GAP_B = [[4, 2, 0, 2], [3, 2, 0, 2], [1, 1, 0, 1]]
TN_GAP_C = [[3, 2, 0, 1], [3, 2, 0, 2], [1, 1, 0, 1]]


class Labels(NamedTuple):
    """가장 큰 k (0 이면 TP_1/TN_1 도 아님)"""
    tp: int
    tn: int


@dataclass(frozen=True)
class LabeledMatrix:
    matrix: Matrix
    labels: Labels
    origin: str = ""


def _nodes(values: Sequence[Any], label: str) -> Tuple[Fraction, ...]:
    try:
        nodes = tuple(Fraction(str(v)) for v in values)
    except (ValueError, ZeroDivisionError):
        raise GeneratorError(f"{label} must be rationals, got {list(values)!r}")
    if not nodes:
        raise GeneratorError(f"{label} must be non-empty")
    if nodes[0] <= 0:
        raise GeneratorError(f"{label} must be positive, got {nodes[0]}")
    if any(b <= a for a, b in zip(nodes, nodes[1:])):
        raise GeneratorError(f"{label} must be strictly increasing")
    return nodes


def _admit_tp(A: Matrix, name: str) -> Matrix:
    """전수 검사로 TP 를 확인한 뒤에만 내보낸다"""
    verdict = is_tp_k_bruteforce(A, min(A.shape))
    if not verdict.holds:
        raise GeneratorError(f"{name} output failed the brute-force TP check", {"certificate": verdict.certificate.kind})
    return A


def vandermonde(nodes: Sequence[Any], n_cols: int, field: Optional[ScalarField] = None) -> Matrix:
    """(i, j) 성분 nodes_i^(j-1)"""
    xs = _nodes(nodes, "Vandermonde nodes")
    if n_cols < 1:
        raise GeneratorError(f"n_cols must be >= 1, got {n_cols}")
    A = Matrix([[x ** j for j in range(n_cols)] for x in xs], field or default_field())
    return _admit_tp(A, "vandermonde")


def cauchy(x: Sequence[Any], y: Sequence[Any], field: Optional[ScalarField] = None) -> Matrix:
    """(i, j) 성분 1/(x_i + y_j)"""
    xs, ys = _nodes(x, "Cauchy x"), _nodes(y, "Cauchy y")
    A = Matrix([[1 / (a + b) for b in ys] for a in xs], field or default_field())
    return _admit_tp(A, "cauchy")


def perturbed_hull(base: Matrix, eps: Any) -> IntervalHull:
    """𝕀(base - εJ, base + εJ). TP 여부는 주장하지 않음 (hull_is_tp_k 로 분류)"""
    eps = base.field.coerce(eps)
    if base.field.sign(eps) < 0:
        raise GeneratorError(f"Perturbation must be non-negative, got {eps}")
    _admit_tp(base, "perturbed-hull base")
    J = Matrix.full(base.rows, base.cols, eps, base.field)
    return IntervalHull(base - J, base + J)


def random_signed(
    m: int, n: int, seed: Seed, low: int = -5, high: int = 5, field: Optional[ScalarField] = None
) -> Matrix:
    """분모 1~3 의 유리수 성분을 [low, high] 에서 뽑은 임의 부호 행렬"""
    if m < 1 or n < 1:
        raise GeneratorError(f"Matrix size must be positive, got {m}x{n}")
    if low > high:
        raise GeneratorError(f"low={low} exceeds high={high}")
    rng = make_rng(seed)
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            q = int(rng.integers(1, 4))
            row.append(Fraction(int(rng.integers(low * q, high * q + 1)), q))
        rows.append(row)
    return Matrix(rows, field or default_field())


def near_tp(base: Matrix, r: int, row: int = 1, col: int = 1, singular: bool = False) -> Matrix:
    """
    TP 행렬의 r×r 연속 창 (r = 2, 3, 1-based 시작 row/col) 오른쪽 위 모서리 성분만 바꿔
    det(창) 을 0 (singular) 또는 음수로 만든다. 모든 성분은 양수로 남는다.

    r = 2 는 모서리를 키우고, r = 3 은 줄인다 (모서리를 반대각에 두는 2×2 소행렬은 커짐).
    """
    if r not in (2, 3):
        raise GeneratorError(f"near-tp window size must be 2 or 3, got {r}")
    if row < 1 or col < 1 or row + r - 1 > base.rows or col + r - 1 > base.cols:
        raise GeneratorError(f"Window of size {r} at ({row}, {col}) does not fit {base.rows}x{base.cols}")
    _admit_tp(base, "near-tp base")
    rows = range(row - 1, row - 1 + r)
    cols = range(col - 1, col - 1 + r)
    B = base.take(rows, cols)
    d = det(B)
    corner = B[0, r - 1]
    cofactor = (-1) ** (r + 1) * det(B.take(range(1, r), range(r - 1)))
    # det 는 모서리 성분의 1 차식: det' = d + (c' - c) * cofactor
    floor = d - corner * cofactor
    if r == 3 and base.field.sign(floor) >= 0:
        raise GeneratorError("Corner cannot reach a singular window while staying positive", {"row": row, "col": col})
    if singular:
        target = base.field.zero()
    elif r == 2:
        target = -d
    else:
        target = max(-d, floor / 2)
    value = corner + (target - d) / cofactor
    return base.with_entry(row - 1, col + r - 2, value)


def rank_one(u: Sequence[Any], v: Sequence[Any], field: Optional[ScalarField] = None) -> Matrix:
    """양수 벡터의 외적 u v^T: TN 이고 TP_1 이지만 2×2 소행렬이 모두 0"""
    field = field or default_field()
    us = [field.coerce(a) for a in u]
    vs = [field.coerce(b) for b in v]
    if not us or not vs or any(field.sign(a) <= 0 for a in us + vs):
        raise GeneratorError("rank-one factors must be non-empty and positive")
    return Matrix([[a * b for b in vs] for a in us], field)


def bidiagonal_product(
    m: int, n: int, seed: Seed, factors: int = 2, field: Optional[ScalarField] = None
) -> Matrix:
    """
    양의 하/상 이중대각 행렬 factors 쌍의 곱에서 왼쪽 위 m×n 블록.
    TN 의 곱과 부분행렬은 TN 이므로 결과는 TN, 띠 밖의 0 때문에 보통 TP 는 아님.
    """
    if m < 1 or n < 1 or factors < 1:
        raise GeneratorError(f"Need m, n, factors >= 1, got {m}, {n}, {factors}")
    field = field or default_field()
    rng = make_rng(seed)
    size = max(m, n)

    def factor(lower: bool) -> Matrix:
        M = Matrix.identity(size, field)
        for i in range(size):
            M = M.with_entry(i, i, int(rng.integers(1, 4)))
        for i in range(size - 1):
            i_row, i_col = (i + 1, i) if lower else (i, i + 1)
            M = M.with_entry(i_row, i_col, int(rng.integers(1, 4)))
        return M

    product = Matrix.identity(size, field)
    for _ in range(factors):
        product = product @ factor(lower=True) @ factor(lower=False)
    return product.take(range(m), range(n))


def _pad(block: List[List[int]], m: int, n: int) -> List[List[int]]:
    return [[block[i][j] if i < 3 and j < 4 else 0 for j in range(n)] for i in range(m)]


def tn_hull_counterexample(
    m: int = 3, n: int = 4, field: Optional[ScalarField] = None
) -> Tuple[Matrix, Matrix, Matrix]:
    """
    C+/C- 는 TN 이지만 헐 안의 C 가 음의 3×3 소행렬을 갖는 (A, B, C), 0 으로 m×n 까지 채움.
    """
    if m < 3 or n < 4:
        raise GeneratorError(f"Counterexample needs m >= 3 and n >= 4, got {m}x{n}")
    field = field or default_field()
    return tuple(Matrix(_pad(block, m, n), field) for block in (TN_GAP_A, TN_GAP_B, TN_GAP_C))


def _largest_order(verdict, K: int) -> int:
    if verdict.holds:
        return K
    certificate = verdict.certificate
    if isinstance(certificate, FailingMinor):
        return certificate.minor.size - 1
    raise GeneratorError(f"Unexpected certificate {certificate.kind} from brute force")


def classify(A: Matrix) -> Labels:
    """전수 검사 기반 (TP 최대 차수, TN 최대 차수)"""
    K = min(A.shape)
    tp = _largest_order(is_tp_k_bruteforce(A, K), K)
    tn = _largest_order(is_tn_k_bruteforce(A, K, allow_large=True), K)
    return Labels(tp, tn)


def label(A: Matrix, origin: str = "") -> LabeledMatrix:
    return LabeledMatrix(A, classify(A), origin)


# 생성 스펙 (YAML/JSON)

def _require(value, name: str, kind: GeneratorKind):
    if value is None:
        raise GeneratorError(f"Generator {kind.value!r} needs the {name!r} parameter")
    return value


def generate(spec: GeneratorSpec, field: Optional[ScalarField] = None) -> List[LabeledMatrix]:
    """스펙 하나로부터 라벨이 붙은 행렬 목록"""
    field = field or default_field()
    kind = spec.kind
    if kind is GeneratorKind.VANDERMONDE:
        nodes = _require(spec.nodes, "nodes", kind)
        A = vandermonde(nodes, spec.n_cols or len(nodes), field)
        return [label(A, "vandermonde")]
    if kind is GeneratorKind.CAUCHY:
        A = cauchy(_require(spec.x, "x", kind), _require(spec.y, "y", kind), field)
        return [label(A, "cauchy")]
    if kind is GeneratorKind.ZERO_PADDED_TN:
        A, B, C = tn_hull_counterexample(spec.m, spec.n, field)
        return [label(A, "zero-padded-tn:A"), label(B, "zero-padded-tn:B"), label(C, "zero-padded-tn:C")]
    if kind is GeneratorKind.PERTURBED_HULL:
        nodes = _require(spec.nodes, "nodes", kind)
        base = vandermonde(nodes, spec.n_cols or len(nodes), field)
        h = perturbed_hull(base, _require(spec.eps, "eps", kind))
        return [label(h.A, "perturbed-hull:A"), label(h.B, "perturbed-hull:B")]
    if kind is GeneratorKind.RANDOM_SIGNED:
        seed = _require(spec.seed, "seed", kind)
        A = random_signed(spec.m, spec.n, seed, spec.low, spec.high, field)
        return [label(A, "random-signed")]
    if kind is GeneratorKind.NEAR_TP:
        if spec.x is not None:
            base = cauchy(spec.x, _require(spec.y, "y", kind), field)
        else:
            nodes = _require(spec.nodes, "nodes", kind)
            base = vandermonde(nodes, spec.n_cols or len(nodes), field)
        A = near_tp(base, spec.r, spec.row, spec.col, spec.singular)
        return [label(A, "near-tp")]
    if kind is GeneratorKind.BIDIAGONAL:
        seed = _require(spec.seed, "seed", kind)
        A = bidiagonal_product(spec.m, spec.n, seed, spec.factors, field)
        return [label(A, "bidiagonal")]
    raise GeneratorError(f"Unknown generator kind {kind!r}")


def _random_nodes(rng: np.random.Generator, size: int) -> List[Fraction]:
    picks = sorted(int(v) for v in rng.choice(np.arange(1, 3 * size + 3), size=size, replace=False))
    q = int(rng.integers(1, 4))
    return [Fraction(p, q) for p in picks]


def _seeded_edge_cases(field: ScalarField) -> List[LabeledMatrix]:
    """r >= 2 에서 처음 실패하는 고정 사례: 음수/특이 3×3, 2×2 창과 rank-one"""
    c3 = cauchy([1, 2, 3], [1, 2, 3], field)
    v3 = vandermonde([1, 2, 3], 3, field)
    return [
        label(near_tp(c3, 3), "near-tp"),
        label(near_tp(c3, 3, singular=True), "near-tp"),
        label(near_tp(v3, 2), "near-tp"),
        label(near_tp(v3, 2, singular=True), "near-tp"),
        label(rank_one([1, 2, 3], [1, 2, 3], field), "rank-one"),
    ]


def _random_near_tp(rng: np.random.Generator, m: int, n: int, field: ScalarField) -> Matrix:
    m, n = max(m, 2), max(n, 2)
    base = cauchy(_random_nodes(rng, m), _random_nodes(rng, n), field)
    r = 3 if min(m, n) >= 3 and rng.integers(0, 2) else 2
    row = int(rng.integers(1, m - r + 2))
    col = int(rng.integers(1, n - r + 2))
    singular = bool(rng.integers(0, 2))
    try:
        return near_tp(base, r, row, col, singular)
    except GeneratorError:
        return near_tp(base, 2, row, col, singular)


def build_corpus(count: int, seed: Seed, max_size: int = 6) -> List[LabeledMatrix]:
    """
    생성기 출력과 임의 부호 행렬을 섞은 라벨 코퍼스 (크기 1×1 ~ max_size×max_size).
    TP 근처 행렬, 양수 성분 임의 행렬, TN 이지만 TP 가 아닌 행렬을 섞어
    크기 2 이상의 창에서 처음 실패하는 경우가 충분히 들어가게 한다.
    같은 seed 면 같은 코퍼스.
    """
    if count < 1 or max_size < 1:
        raise GeneratorError(f"Corpus needs count >= 1 and max_size >= 1, got {count}, {max_size}")
    rng = make_rng(seed)
    field = ScalarField()
    corpus: List[LabeledMatrix] = []
    if max_size >= 4:
        corpus.extend(label(M, f"zero-padded-tn:{name}") for name, M in zip("ABC", tn_hull_counterexample(3, 4, field)))
    if max_size >= 3:
        corpus.extend(_seeded_edge_cases(field))
    while len(corpus) < count:
        m, n = (int(v) for v in rng.integers(1, max_size + 1, size=2))
        choice = int(rng.integers(0, 10))
        if choice == 0:
            A = vandermonde(_random_nodes(rng, m), n, field)
            origin = "vandermonde"
        elif choice == 1:
            A = cauchy(_random_nodes(rng, m), _random_nodes(rng, n), field)
            origin = "cauchy"
        elif choice == 2:
            base = vandermonde(_random_nodes(rng, m), n, field)
            h = perturbed_hull(base, Fraction(int(rng.integers(0, 5)), 100))
            A = h.A if rng.integers(0, 2) else h.B
            origin = "perturbed-hull"
        elif choice in (3, 4):
            A = _random_near_tp(rng, m, n, field)
            origin = "near-tp"
        elif choice == 5:
            A = random_signed(m, n, rng, low=1, high=5, field=field)
            origin = "random-positive"
        elif choice == 6:
            A = rank_one(_random_nodes(rng, m), _random_nodes(rng, n), field)
            origin = "rank-one"
        elif choice == 7:
            A = bidiagonal_product(m, n, rng, int(rng.integers(1, 3)), field)
            origin = "bidiagonal"
        else:
            A = random_signed(m, n, rng, field=field)
            origin = "random-signed"
        corpus.append(label(A, origin))
    logger.info("Built corpus of %d matrices", len(corpus))
    return corpus[:count]


# 코퍼스 저장/로드 (항목당 JSON 파일 하나)

def to_entry(item: LabeledMatrix) -> CorpusEntry:
    return CorpusEntry(
        matrix=item.matrix.render_rows(),
        labels=LabelsSchema(tp=item.labels.tp, tn=item.labels.tn),
        origin=item.origin or None,
    )


def from_entry(entry: CorpusEntry, field: Optional[ScalarField] = None) -> LabeledMatrix:
    A = Matrix(entry.matrix, field or ScalarField())
    return LabeledMatrix(A, Labels(entry.labels.tp, entry.labels.tn), entry.origin or "")


def save_corpus(items: Sequence[LabeledMatrix], directory: Path) -> List[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, item in enumerate(items, start=1):
        path = directory / f"entry_{i:04d}.json"
        path.write_text(json.dumps(to_entry(item).model_dump(exclude_none=True), indent=2), encoding="utf-8")
        paths.append(path)
    return paths


def load_corpus(directory: Path, field: Optional[ScalarField] = None) -> List[LabeledMatrix]:
    items = []
    for path in sorted(Path(directory).glob("*.json")):
        try:
            entry = CorpusEntry.model_validate_json(path.read_text(encoding="utf-8"))
        except ValueError as e:
            raise InputFormatError(f"Invalid corpus entry: {e}", source=str(path))
        items.append(from_entry(entry, field))
    return items
