import json
from fractions import Fraction

import pytest

from app.core.exceptions import GeneratorError, InputFormatError
from app.schemas.generator import GeneratorKind, GeneratorSpec
from app.services.generators import (
    Labels,
    bidiagonal_product,
    build_corpus,
    cauchy,
    classify,
    generate,
    load_corpus,
    near_tp,
    perturbed_hull,
    random_signed,
    rank_one,
    tn_hull_counterexample,
    save_corpus,
    vandermonde,
)
from tests.conftest import mat


class TestGenerators:
    def test_vandermonde(self, vdm3):
        assert vandermonde([1, 2, 3], 3) == vdm3
        assert vandermonde(["1/2", "1", "3/2"], 2).shape == (3, 2)

    @pytest.mark.parametrize("nodes", [[1, 1, 2], [2, 1], [0, 1], [], ["x"]])
    def test_vandermonde_rejects_bad_nodes(self, nodes):
        with pytest.raises(GeneratorError):
            vandermonde(nodes, 2)

    def test_cauchy(self):
        assert cauchy([1, 2], [1, 2]) == mat([["1/2", "1/3"], ["1/3", "1/4"]])

    def test_perturbed_hull(self, vdm3):
        h = perturbed_hull(vdm3, "1/10")
        assert h.A == vdm3 - mat([["1/10"] * 3] * 3)
        assert h.radius == mat([["1/10"] * 3] * 3)
        assert perturbed_hull(vdm3, 0).A == perturbed_hull(vdm3, 0).B

    def test_perturbed_hull_rejects(self, vdm3, identity3):
        with pytest.raises(GeneratorError):
            perturbed_hull(vdm3, -1)
        with pytest.raises(GeneratorError):
            perturbed_hull(identity3, "1/10")

    def test_random_signed(self):
        A = random_signed(3, 4, seed=9)
        assert A == random_signed(3, 4, seed=9)
        assert A.shape == (3, 4)
        for row in A.to_rows():
            for v in row:
                assert -5 <= v <= 5
                assert v.denominator in (1, 2, 3)
        with pytest.raises(GeneratorError):
            random_signed(2, 2, seed=0, low=3, high=1)

    def test_counterexample_padding(self):
        A, B, C = tn_hull_counterexample(4, 6)
        assert A.shape == B.shape == C.shape == (4, 6)
        assert all(v == 0 for v in C.to_rows()[3])
        assert [row[4:] for row in C.to_rows()] == [[0, 0]] * 4
        with pytest.raises(GeneratorError):
            tn_hull_counterexample(2, 4)

    def test_near_tp_size_two(self, vdm3):
        negative = near_tp(vdm3, 2)
        singular = near_tp(vdm3, 2, singular=True)
        assert negative == mat([[1, 3, 1], [1, 2, 4], [1, 3, 9]])
        assert singular == mat([[1, 2, 1], [1, 2, 4], [1, 3, 9]])
        assert classify(negative) == Labels(1, 1)
        assert classify(singular) == Labels(1, 2)

    def test_near_tp_size_three(self, cauchy3):
        negative = near_tp(cauchy3, 3)
        singular = near_tp(cauchy3, 3, singular=True)
        assert negative == cauchy3.with_entry(0, 2, Fraction(43, 180))
        assert singular == cauchy3.with_entry(0, 2, Fraction(11, 45))
        assert classify(negative) == Labels(2, 2)
        assert classify(singular) == Labels(2, 3)

    @pytest.mark.parametrize("r, row, col", [(4, 1, 1), (2, 3, 1), (3, 1, 2), (3, 1, 1)])
    def test_near_tp_rejects(self, vdm3, r, row, col):
        with pytest.raises(GeneratorError):
            near_tp(vdm3, r, row, col)

    def test_near_tp_needs_tp_base(self, identity3):
        with pytest.raises(GeneratorError):
            near_tp(identity3, 2)

    def test_rank_one(self):
        A = rank_one([1, 2], [1, 3])
        assert A == mat([[1, 3], [2, 6]])
        assert classify(A) == Labels(1, 2)
        with pytest.raises(GeneratorError):
            rank_one([0, 1], [1])

    def test_bidiagonal_product(self):
        A = bidiagonal_product(3, 5, seed=5)
        assert A == bidiagonal_product(3, 5, seed=5)
        assert A.shape == (3, 5)
        assert classify(A).tn == 3
        with pytest.raises(GeneratorError):
            bidiagonal_product(2, 2, seed=0, factors=0)


class TestClassify:
    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[1, 1, 1], [1, 2, 4], [1, 3, 9]], Labels(3, 3)),
            ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], Labels(0, 3)),
            ([[1, 2], [3, 4]], Labels(1, 1)),
            ([[-1]], Labels(0, 0)),
        ],
    )
    def test_labels(self, rows, expected):
        assert classify(mat(rows)) == expected

    def test_tn_gap(self, tn_gap):
        A, B, C = tn_gap
        assert classify(A) == Labels(0, 3)
        assert classify(B) == Labels(0, 3)
        assert classify(C) == Labels(0, 2)


class TestGenerateSpec:
    def test_vandermonde_spec(self):
        items = generate(GeneratorSpec(kind=GeneratorKind.VANDERMONDE, nodes=["1", "2", "3"]))
        assert [(i.origin, i.labels) for i in items] == [("vandermonde", Labels(3, 3))]

    def test_zero_padded_spec(self):
        items = generate(GeneratorSpec(kind="zero-padded-tn"))
        assert [i.origin for i in items] == ["zero-padded-tn:A", "zero-padded-tn:B", "zero-padded-tn:C"]

    def test_perturbed_spec(self):
        items = generate(GeneratorSpec(kind="perturbed-hull", nodes=[1, 2], eps="1/100"))
        assert len(items) == 2
        assert all(i.labels == Labels(2, 2) for i in items)

    def test_near_tp_spec(self):
        spec = GeneratorSpec(kind="near-tp", x=["1", "2", "3"], y=["1", "2", "3"], r=3)
        items = generate(spec)
        assert [(i.origin, i.labels) for i in items] == [("near-tp", Labels(2, 2))]

    def test_bidiagonal_spec(self):
        items = generate(GeneratorSpec(kind="bidiagonal", m=3, n=3, seed=2))
        assert items[0].origin == "bidiagonal"
        assert items[0].labels.tn == 3

    @pytest.mark.parametrize(
        "spec",
        [
            {"kind": "random-signed"},
            {"kind": "bidiagonal"},
            {"kind": "near-tp"},
            {"kind": "cauchy", "x": ["1"]},
            {"kind": "perturbed-hull", "nodes": ["1", "2"]},
        ],
    )
    def test_missing_parameter(self, spec):
        with pytest.raises(GeneratorError):
            generate(GeneratorSpec(**spec))


class TestCorpus:
    def test_deterministic(self):
        first = build_corpus(12, seed=1, max_size=4)
        second = build_corpus(12, seed=1, max_size=4)
        assert [(i.matrix, i.labels) for i in first] == [(i.matrix, i.labels) for i in second]

    def test_shape_and_labels(self, small_corpus):
        assert len(small_corpus) == 60
        assert [i.origin for i in small_corpus[:3]] == ["zero-padded-tn:A", "zero-padded-tn:B", "zero-padded-tn:C"]
        assert [i.origin for i in small_corpus[3:8]] == ["near-tp"] * 4 + ["rank-one"]
        for item in small_corpus:
            assert max(item.matrix.shape) <= 6
            assert item.labels.tp <= item.labels.tn <= min(item.matrix.shape)

    def test_save_and_load(self, tmp_path, small_corpus):
        paths = save_corpus(small_corpus[:5], tmp_path)
        assert [p.name for p in paths] == [f"entry_{i:04d}.json" for i in range(1, 6)]
        loaded = load_corpus(tmp_path)
        assert [(i.matrix, i.labels, i.origin) for i in loaded] == [
            (i.matrix, i.labels, i.origin) for i in small_corpus[:5]
        ]

    def test_load_rejects_bad_entry(self, tmp_path):
        (tmp_path / "entry_0001.json").write_text(json.dumps({"matrix": [["1"]]}), encoding="utf-8")
        with pytest.raises(InputFormatError):
            load_corpus(tmp_path)

    def test_bad_count(self):
        with pytest.raises(GeneratorError):
            build_corpus(0, seed=0)
