from __future__ import annotations

import itertools
import json
import random
import shutil
import tempfile
import unittest
from pathlib import Path

from sympy import I, Matrix, Rational

from wizardmatroid.utils.errors.errors import SchemaError, UnknownExampleError
from wizardmatroid.utils.settings import data_dir
from wizardmatroid.wizard_corpus import list_examples, load_example, run_example
from wizardmatroid.wizard_linalg import dieudonne_val
from wizardmatroid.wizard_matroids import (
    differ_by_trivial,
    dual_valuation,
    is_independent,
    lindstrom_valuation,
    matroid_from_matrix,
)

# ── Switches ───────────────────────────────────────────────────────────────────
SEED = 5
GRID_SAMPLES = 40

# ── Fixed cases ────────────────────────────────────────────────────────────────
EXAMPLES = ["dual_u24", "elliptic9", "kf_u24", "lindstrom_grid", "nondual_u24", "nonfano", "toric"]


# ── Utils ──────────────────────────────────────────────────────────────────────
def gaussian(q) -> object:
    # Hurwitz entries of this corpus have no j, k part
    return Rational(q.a, 2) + Rational(q.b, 2) * I


def nonzero_det(rows) -> bool:
    return Matrix(rows).det().expand() != 0


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestRegistry(unittest.TestCase):
    def test_listed(self):
        self.assertEqual(list_examples(), EXAMPLES)

    def test_every_example_holds(self):
        for example_id in EXAMPLES:
            with self.subTest(example=example_id):
                report = run_example(example_id)
                self.assertTrue(report.results)
                self.assertTrue(report.ok, [r.to_dict() for r in report.failed])
                self.assertEqual(report.to_dict()["id"], example_id)

    def test_unknown(self):
        with self.assertRaises(UnknownExampleError):
            load_example("fano")

    def test_unknown_document(self):
        with self.assertRaises(SchemaError):
            load_example("toric").matrix("dual")


class TestCustomDirectory(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = Path(tempfile.mkdtemp(prefix="wizardmatroid_corpus_"))
        raw = json.loads((data_dir() / "toric.json").read_text(encoding="utf-8"))
        for fact in raw["facts"]:
            if fact["kind"] == "valuation":
                fact["expect"] = [0, 0, 1]
        (cls.tmp / "toric.json").write_text(json.dumps(raw), encoding="utf-8")
        raw["id"] = "elsewhere"
        (cls.tmp / "renamed.json").write_text(json.dumps(raw), encoding="utf-8")

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tmp, ignore_errors=True)

    def test_wrong_fact_is_reported(self):
        report = run_example("toric", directory=self.tmp)
        self.assertFalse(report.ok)
        self.assertEqual([r.kind for r in report.failed], ["valuation"])
        self.assertEqual(report.failed[0].actual, [0, 0, 0])

    def test_id_must_match_file(self):
        self.assertEqual(list_examples(self.tmp), ["renamed", "toric"])
        with self.assertRaises(SchemaError):
            load_example("renamed", self.tmp)


class TestIndependenceOracles(unittest.TestCase):
    def test_elliptic_against_gaussian_determinants(self):
        A = load_example("elliptic9").matrix("hurwitz")
        rows = [[gaussian(q) for q in row] for row in A.entries]
        for S in itertools.combinations(range(9), 3):
            with self.subTest(S=S):
                self.assertEqual(is_independent(A, S), nonzero_det([rows[i] for i in S]))

    def test_nonfano_over_rationals_and_mod_two(self):
        example = load_example("nonfano")
        Z = example.matrix("integers")
        F2 = example.matrix("char2")
        bits = [[int(bool(x)) for x in row] for row in F2.entries]
        for S in itertools.combinations(range(7), 3):
            with self.subTest(S=S):
                det = Matrix([Z.entries[i] for i in S]).det()
                self.assertEqual(is_independent(Z, S), det != 0)
                self.assertEqual(is_independent(F2, S), Matrix([bits[i] for i in S]).det() % 2 != 0)

    def test_hurwitz_nonfano_has_integer_matroid(self):
        example = load_example("nonfano")
        self.assertEqual(
            matroid_from_matrix(example.matrix("hurwitz")),
            matroid_from_matrix(example.matrix("integers")),
        )


class TestValuationStrategies(unittest.TestCase):
    def test_grid_sample(self):
        A = load_example("lindstrom_grid").matrix("lambda")
        rng = random.Random(SEED)
        subsets = [(7, 11, 13, 14)] + [tuple(sorted(rng.sample(range(17), 4))) for _ in range(GRID_SAMPLES)]
        for S in subsets:
            B = A.row_submatrix(S)
            with self.subTest(S=S):
                self.assertEqual(dieudonne_val(B, "euclid"), dieudonne_val(B, "fraction"))
        self.assertTrue(is_independent(A, (7, 11, 13, 14)))
        self.assertFalse(is_independent(load_example("lindstrom_grid").matrix("commuting"), (7, 11, 13, 14)))

    def test_kf_values_by_fractions(self):
        A = load_example("kf_u24").matrix("primal")
        values = [dieudonne_val(A.row_submatrix(S), "fraction") for S in itertools.combinations(range(4), 2)]
        self.assertEqual(values, [0, 0, 1, 0, 0, 0])
        self.assertEqual(list(lindstrom_valuation(A).values()), values)


class TestTrivialShiftOracle(unittest.TestCase):
    def test_nondual_minors_admit_no_shift(self):
        example = load_example("nondual_u24")
        dual = dual_valuation(lindstrom_valuation(example.matrix("primal")))
        printed = lindstrom_valuation(example.matrix("printed_dual"))
        bases = list(itertools.combinations(range(4), 2))
        self.assertEqual([dual.value(B) for B in bases], [0, 0, 0, 1, 0, 0])
        self.assertEqual([printed.value(B) for B in bases], [-1, 0, 0, -1, 0, 0])

        # Σ_{i∈B} α_i = printed(B) − dual(B) for every basis B
        incidence = Matrix([[int(i in B) for i in range(4)] for B in bases])
        rhs = Matrix([printed.value(B) - dual.value(B) for B in bases])
        self.assertEqual(incidence.rank(), 4)
        self.assertGreater(incidence.row_join(rhs).rank(), incidence.rank())
        self.assertIsNone(differ_by_trivial(dual, printed))


if __name__ == "__main__":
    unittest.main()
