from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import (
    InputFormatError,
    InvalidDimensionError,
    InvalidVectorError,
    ScalarModeMismatchError,
    TPCertError,
)
from app.models import (
    EXACT,
    UNKNOWN,
    AltVector,
    FailingMinor,
    IndexPair,
    Matrix,
    SeqWindow,
    Verdict,
    Window,
    alt_vector,
    contiguous_windows,
    count_sign_changes,
    is_alternating,
    parse_rational,
    sign_diag,
    submatrix,
)
from tests.conftest import mat, rationals


class TestScalars:
    def test_parse_rational_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(" 1.25 ") == Fraction(5, 4)
        assert parse_rational("1e-3") == Fraction(1, 1000)
        assert parse_rational("-7") == Fraction(-7)

    def test_parse_rational_rejects_garbage(self):
        with pytest.raises(InputFormatError):
            parse_rational("three")
        with pytest.raises(InputFormatError):
            parse_rational("1/0")

    def test_exact_decimal_is_not_binary_approximation(self):
        assert EXACT.coerce(0.1) == Fraction(1, 10)

    def test_float_sign_uses_tolerance(self, float_field):
        assert float_field.sign(1e-12) == 0
        assert float_field.sign(-1e-3) == -1
        assert float_field.label == "numerical(eps=1e-09)"

    @given(rationals, rationals)
    def test_exact_arithmetic_has_no_drift(self, a, b):
        x, y = EXACT.coerce(a), EXACT.coerce(b)
        assert (x + y) - y == x


class TestMatrix:
    def test_rejects_ragged_rows(self):
        with pytest.raises(InvalidDimensionError):
            mat([[1, 2], [3]])

    def test_rejects_empty(self):
        with pytest.raises(InvalidDimensionError):
            mat([])

    def test_is_immutable(self, vdm3):
        with pytest.raises(ValueError):
            vdm3.array[0, 0] = 5

    def test_mixed_modes_rejected(self, vdm3, float_field):
        other = Matrix(vdm3.to_rows(), float_field)
        with pytest.raises(ScalarModeMismatchError):
            vdm3 + other

    def test_abs_and_transpose(self):
        A = mat([[1, -2], [-3, 4]])
        assert A.abs() == mat([[1, 2], [3, 4]])
        assert A.T == mat([[1, -3], [-2, 4]])

    def test_apply(self, vdm3):
        assert vdm3.apply([1, -1, 1]) == (1, 3, 7)


class TestIndices:
    @pytest.mark.parametrize(
        "m, n, r, expected",
        [(3, 4, 3, 2), (2, 2, 2, 1), (10, 10, 5, 36)],
    )
    def test_contiguous_window_counts(self, m, n, r, expected):
        windows = contiguous_windows(m, n, r)
        assert len(windows) == expected == (m - r + 1) * (n - r + 1)
        assert all(w.fits(m, n) for w in windows)

    def test_contiguous_window_order(self):
        assert contiguous_windows(2, 2, 2) == [Window(1, 1, 2)]
        assert [(w.row_start, w.col_start) for w in contiguous_windows(3, 4, 3)] == [(1, 1), (1, 2)]

    def test_contiguous_windows_rejects_bad_size(self):
        with pytest.raises(InvalidDimensionError):
            contiguous_windows(3, 3, 0)
        with pytest.raises(InvalidDimensionError):
            contiguous_windows(3, 3, 4)

    def test_index_pair_validation(self):
        with pytest.raises(InvalidDimensionError):
            IndexPair((2, 1), (1, 2))
        with pytest.raises(InvalidDimensionError):
            IndexPair((1,), (1, 2))

    def test_submatrix_of_identity(self, identity3):
        assert submatrix(identity3, IndexPair((1, 2), (2, 3))) == mat([[0, 0], [1, 0]])

    def test_full_window_is_identity_extraction(self, vdm3):
        assert submatrix(vdm3, Window(1, 1, 3)) == vdm3

    def test_tn_gap_block(self, tn_gap):
        A, _, _ = tn_gap
        assert submatrix(A, IndexPair((1, 2, 3), (1, 2, 4))) == mat([[3, 1, 1], [2, 2, 2], [1, 1, 1]])

    def test_submatrix_out_of_range(self, vdm3):
        with pytest.raises(InvalidDimensionError):
            submatrix(vdm3, Window(2, 2, 3))


class TestVectors:
    @pytest.mark.parametrize(
        "r, lead, expected",
        [(3, True, (1, -1, 1)), (1, False, (-1,)), (4, True, (1, -1, 1, -1))],
    )
    def test_alt_vector(self, r, lead, expected):
        assert tuple(alt_vector(r, lead)) == expected

    def test_alt_vector_rejects_zero_length(self):
        with pytest.raises(InvalidDimensionError):
            alt_vector(0)

    @given(st.integers(min_value=1, max_value=12))
    def test_alt_vector_negation_and_changes(self, r):
        assert tuple(-alt_vector(r, True)) == tuple(alt_vector(r, False))
        assert count_sign_changes(alt_vector(r)) == r - 1

    def test_alt_vector_type_rejects_zero_entry(self):
        with pytest.raises(InvalidVectorError):
            AltVector((1, 0, 1))
        assert not is_alternating((1, 1))

    @pytest.mark.parametrize(
        "z, expected",
        [((1, -1), [[1, 0], [0, -1]]), ((1,), [[1]]), ((-1, -1), [[-1, 0], [0, -1]])],
    )
    def test_sign_diag(self, z, expected):
        assert sign_diag(z, EXACT) == mat(expected)

    def test_sign_diag_rejects_non_unit(self):
        with pytest.raises(InvalidVectorError):
            sign_diag((1, 0))

    @pytest.mark.parametrize(
        "x, expected",
        [((1, 0, -2, 3), 2), ((0, 0), 0), ((1, -1, 1, -1), 3)],
    )
    def test_count_sign_changes(self, x, expected):
        assert count_sign_changes(x) == expected


class TestSequenceWindow:
    def test_finite_support_block(self):
        s = SeqWindow(0, ["1", "1"], finite_support=True, field=EXACT)
        assert s.block(0, 2) == mat([[1, 0], [1, 1]])

    def test_geometric_block(self):
        s = SeqWindow(-3, [Fraction(2) ** n for n in range(-3, 4)], field=EXACT)
        assert s.block(0, 2) == mat([[1, Fraction(1, 2)], [2, 1]])

    def test_undetermined_block_is_unknown(self):
        s = SeqWindow(0, [1, 2, 3], field=EXACT)
        assert s.block(10, 3) is UNKNOWN
        assert s.term(-1) is UNKNOWN

    def test_block_is_toeplitz(self):
        s = SeqWindow(-4, list(range(1, 10)), field=EXACT)
        B = s.block(0, 4)
        assert all(B[i, j] == B[i + 1, j + 1] for i in range(3) for j in range(3))


def test_verdict_invariant():
    with pytest.raises(TPCertError):
        Verdict(True, FailingMinor(IndexPair((1,), (1,)), Fraction(0)))
