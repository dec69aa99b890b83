"""
코퍼스 기반 인수 테스트.
기본 실행은 축소 규모, `pytest -m slow` 는 전체 규모 (500 개 코퍼스, 1000 샘플)로 같은 단언을 검사한다.
"""
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List

import pytest

from app.cli import run
from app.models import IndexPair, IntervalHull, Matrix, contiguous_windows, submatrix
from app.services.certificates import revalidate
from app.services.generators import LabeledMatrix, cauchy, perturbed_hull, random_signed, vandermonde
from app.services.interval import c_pm, hull_contains, hull_is_tn_k, hull_is_tp_k, rohn_bound_check, sample_hull
from app.services.minors import z_vector, z_vector_identity_holds
from app.services.positivity import (
    is_p_matrix,
    is_tn_k_bruteforce,
    is_tp_k_bruteforce,
    is_tp_k_contiguous,
    sampled_p_snr,
    snr_nonstrict_at,
    snr_strict_at,
    tn_certificate,
    tp_certificate,
    variation_check,
)
from app.utils.sampling import make_rng, random_alternating, random_nonzero
from tests.conftest import write_matrix


@dataclass
class Scale:
    corpus: List[LabeledMatrix]
    samples: int
    hulls: int
    hull_samples: int
    triples: int
    squares: int


@pytest.fixture(params=["reduced", pytest.param("full", marks=pytest.mark.slow)])
def scale(request) -> Scale:
    if request.param == "full":
        return Scale(request.getfixturevalue("full_corpus"), 1000, 50, 200, 1000, 500)
    return Scale(request.getfixturevalue("small_corpus"), 25, 8, 20, 100, 60)


def test_tn_gap_golden(tn_gap, tn_gap_hull):
    A, B, C = tn_gap
    start = time.perf_counter()
    plus, minus = c_pm(A, B)
    assert is_tn_k_bruteforce(plus, 3).holds
    assert is_tn_k_bruteforce(minus, 3).holds
    assert hull_contains(tn_gap_hull, C)
    verdict = is_tn_k_bruteforce(C, 3)
    assert verdict.certificate.minor == IndexPair((1, 2, 3), (1, 2, 4))
    assert verdict.certificate.value == -1
    assert not hull_is_tn_k(tn_gap_hull, 3).holds
    assert time.perf_counter() - start < 1.0


def test_characterization_equivalence(scale):
    for item in scale.corpus:
        A = item.matrix
        for k in range(1, min(A.shape) + 1):
            tp = is_tp_k_bruteforce(A, k).holds
            assert is_tp_k_contiguous(A, k).holds == tp, item.origin
            assert tp_certificate(A, k).holds == tp, item.origin
            assert tn_certificate(A, k).holds == is_tn_k_bruteforce(A, k).holds, item.origin
            assert tp == (item.labels.tp >= k)


def test_strict_sign_non_reversal_on_tp(scale):
    rng = make_rng(0)
    for item in scale.corpus:
        A, k = item.matrix, item.labels.tp
        for r in range(1, k + 1):
            for window in contiguous_windows(A.rows, A.cols, r):
                B = submatrix(A, window)
                for s in range(scale.samples):
                    assert snr_strict_at(B, random_alternating(rng, r, s % 2 == 0, A.field)).holds


def test_nonstrict_sign_non_reversal_on_tn(scale):
    for item in scale.corpus:
        A, k = item.matrix, min(item.labels.tn, 5)
        for r in range(1, k + 1):
            for rows in combinations(range(A.rows), r):
                for cols in combinations(range(A.cols), r):
                    B = A.take(rows, cols)
                    z = z_vector(B)
                    if not z.is_zero():
                        assert snr_nonstrict_at(B, z.values).holds


def test_every_certificate_revalidates(scale):
    for item in scale.corpus:
        A = item.matrix
        for k in range(1, min(A.shape) + 1):
            for verdict in (tp_certificate(A, k), tn_certificate(A, k)):
                assert revalidate(verdict.certificate, A), (item.origin, k, verdict.certificate)



def test_corpus_fails_at_windows_of_size_two_or_more(scale):
    tp_sizes, tn_sizes = [], []
    for item in scale.corpus:
        A = item.matrix
        k = min(A.shape)
        for verdict, sizes in ((tp_certificate(A, k), tp_sizes), (tn_certificate(A, k), tn_sizes)):
            if not verdict.holds:
                sizes.append(verdict.certificate.location.size)
    assert sum(size >= 2 for size in tp_sizes) >= 5
    assert sum(size >= 2 for size in tn_sizes) >= 3
    tn_not_tp = [i for i in scale.corpus if i.labels.tn >= 2 and i.labels.tp < 2]
    assert len(tn_not_tp) >= 4


def test_hull_tp_two_sided(scale):
    rng = make_rng(1)
    eps_choices = [Fraction(1, 1000), Fraction(1, 100), Fraction(1, 10), Fraction(1, 2)]
    for _ in range(scale.hulls):
        m, n = (int(v) for v in rng.integers(1, 5, size=2))
        nodes = sorted(int(v) + 1 for v in rng.permutation(11)[:m])
        base = vandermonde(nodes, n)
        h = perturbed_hull(base, eps_choices[int(rng.integers(0, len(eps_choices)))])
        k = min(m, n)
        verdict = hull_is_tp_k(h, k)
        members = list(c_pm(h.A, h.B)) + [sample_hull(h, rng) for _ in range(scale.hull_samples)]
        assert all(hull_contains(h, C) for C in members)
        assert verdict.holds == all(is_tp_k_bruteforce(C, k).holds for C in members)


def test_rohn_margins(scale):
    rng = make_rng(2)
    for _ in range(scale.triples):
        r = int(rng.integers(1, 6))
        h = IntervalHull(random_signed(r, r, rng), random_signed(r, r, rng))
        C = sample_hull(h, rng)
        x = random_nonzero(rng, r, h.field)
        assert rohn_bound_check(h, C, x).holds


def test_cofactor_sum_identity(scale):
    rng = make_rng(3)
    for _ in range(scale.squares):
        r = int(rng.integers(1, 7))
        assert z_vector_identity_holds(random_signed(r, r, rng))


def test_variation_diminished_on_tn(scale):
    rng = make_rng(4)
    for item in scale.corpus:
        A = item.matrix
        if item.labels.tn < min(A.shape):
            continue
        for _ in range(scale.samples):
            x = random_nonzero(rng, A.cols, A.field)
            check = variation_check(A, x)
            assert check.holds, (item.origin, x, check.detail)


def test_tp_square_matrices_are_p_matrices(scale):
    for i, item in enumerate(scale.corpus):
        A = item.matrix
        if not A.is_square or item.labels.tp < A.rows:
            continue
        assert is_p_matrix(A).holds
        assert sampled_p_snr(A, scale.samples, seed=i).holds


def _bench(A: Matrix, k: int):
    contiguous = is_tp_k_contiguous(A, k)
    brute = is_tp_k_bruteforce(A, k)
    assert contiguous.holds and brute.holds
    return contiguous.stats, brute.stats


def test_bench_accounting_reduced():
    contiguous, brute = _bench(cauchy(range(1, 7), range(1, 7)), 3)
    assert (contiguous.determinants, brute.determinants) == (77, 661)


@pytest.mark.slow
def test_bench_accounting_full():
    contiguous, brute = _bench(cauchy(range(1, 11), range(1, 11)), 5)
    assert (contiguous.determinants, brute.determinants) == (330, 124129)
    assert contiguous.elapsed < brute.elapsed


def test_corpus_exit_codes(capsys, tmp_path, small_corpus):
    for i, item in enumerate(small_corpus[:12]):
        path = write_matrix(tmp_path / f"m{i}.json", item.matrix.render_rows())
        k = min(item.matrix.shape)
        assert run(["check-tp", str(path), "-k", str(k)]) == (0 if item.labels.tp >= k else 1)
        assert run(["check-tn", str(path), "-k", str(k)]) == (0 if item.labels.tn >= k else 1)
    capsys.readouterr()
