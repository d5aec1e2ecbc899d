from __future__ import annotations

import itertools
import unittest

from wizardmatroid.utils.errors.errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    ValidationError,
)
from wizardmatroid.wizard_corpus.corpus import load_example
from wizardmatroid.wizard_linalg import q_domain
from wizardmatroid.wizard_matroids import (
    Matroid,
    check_basis_exchange,
    elements_of,
    find_exchange_violation,
    is_independent,
    mask_of,
    matroid_from_matrix,
    matroid_from_vectors,
    matroid_minors,
)

# ── Fixed cases ────────────────────────────────────────────────────────────────
U24 = Matroid.uniform(2, 4)
TWO_BLOCKS = Matroid(4, [(0, 1), (2, 3)])

UNIFORM_CASES = [
    dict(r=0, n=3, bases=1),
    dict(r=1, n=3, bases=3),
    dict(r=2, n=4, bases=6),
    dict(r=3, n=7, bases=35),
]

CORPUS_MATROIDS = [
    dict(example="kf_u24", document="primal", n=4, r=2, bases=6),
    dict(example="toric", document="primal", n=3, r=2, bases=3),
    dict(example="toric", document="parallel", n=3, r=2, bases=2),
    dict(example="nonfano", document="integers", n=7, r=3, bases=29),
    dict(example="nonfano", document="char2", n=7, r=3, bases=28),
]


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestMatroid(unittest.TestCase):
    def test_uniform(self):
        for c in UNIFORM_CASES:
            with self.subTest(**c):
                M = Matroid.uniform(c["r"], c["n"])
                self.assertEqual(len(M.bases), c["bases"])
                self.assertEqual(M.rank, c["r"])
                self.assertTrue(M.is_uniform())
                self.assertTrue(check_basis_exchange(M))

    def test_masks(self):
        self.assertEqual(mask_of([0, 2]), 0b101)
        self.assertEqual(elements_of(0b1010), (1, 3))
        self.assertEqual(mask_of(6), 6)
        with self.assertRaises(IndexOutOfRangeError):
            mask_of([4], 4)

    def test_queries(self):
        self.assertTrue(U24.is_basis((1, 3)))
        self.assertTrue(U24.is_independent([2]))
        self.assertFalse(U24.is_independent([0, 1, 2]))
        self.assertEqual(U24.rank_of([0, 1, 2]), 2)
        self.assertEqual(U24.rank_of([]), 0)
        self.assertEqual(U24.circuits(), list(itertools.combinations(range(4), 3)))
        self.assertEqual(U24.loops(), ())

    def test_loops_and_circuits(self):
        M = Matroid(3, [(0, 1)])
        self.assertEqual(M.loops(), (2,))
        self.assertEqual(M.circuits(), [(2,)])
        self.assertFalse(M.is_uniform())

    def test_dual_and_minors(self):
        self.assertEqual(U24.dual(), U24)
        self.assertEqual(U24.dual().dual(), U24)
        self.assertEqual(U24.delete([0]), Matroid.uniform(2, 3))
        self.assertEqual(U24.contract([0]), Matroid.uniform(1, 3))
        self.assertEqual(matroid_minors(U24, "contract", [0, 1]), Matroid(2, [0]))
        # minors commute with duality
        for S in ([0], [1, 3]):
            M = Matroid(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
            self.assertEqual(M.dual().delete(S), M.contract(S).dual())

    def test_minor_operation_checked(self):
        with self.assertRaises(InvalidInputError):
            matroid_minors(U24, "truncate")

    def test_basis_exchange_violation(self):
        self.assertFalse(check_basis_exchange(TWO_BLOCKS))
        B1, B2, i = find_exchange_violation(TWO_BLOCKS)
        self.assertIn(i, B1)
        self.assertNotIn(i, B2)
        self.assertIsNone(find_exchange_violation(U24))

    def test_invalid_bases(self):
        with self.assertRaises(ValidationError):
            Matroid(3, [(0,), (1, 2)])
        with self.assertRaises(ValidationError):
            Matroid(3, [])
        with self.assertRaises(InvalidInputError):
            Matroid(-1, [0])

    def test_to_dict(self):
        self.assertEqual(
            Matroid(3, [(0, 1), (1, 2)]).to_dict(1),
            {"n": 3, "r": 2, "bases": [[1, 2], [2, 3]]},
        )


class TestMatroidsOfMatrices(unittest.TestCase):
    def test_corpus_matroids(self):
        for c in CORPUS_MATROIDS:
            A = load_example(c["example"]).matrix(c["document"])
            with self.subTest(example=c["example"], document=c["document"]):
                M = matroid_from_matrix(A)
                self.assertEqual((M.n, M.rank, len(M.bases)), (c["n"], c["r"], c["bases"]))
                self.assertTrue(check_basis_exchange(M))

    def test_non_fano_versus_fano(self):
        example = load_example("nonfano")
        Z = matroid_from_matrix(example.matrix("integers"))
        F2 = matroid_from_matrix(example.matrix("char2"))
        self.assertTrue(Z.is_basis([3, 4, 5]))
        self.assertFalse(F2.is_basis([3, 4, 5]))
        self.assertNotEqual(Z, F2)

    def test_independence_oracle(self):
        A = load_example("toric").matrix("primal")
        self.assertTrue(is_independent(A, [0, 1]))
        self.assertTrue(is_independent(A, [2]))
        self.assertFalse(is_independent(A, [0, 1, 2]))
        self.assertFalse(is_independent(A, [0, 0]))
        with self.assertRaises(IndexOutOfRangeError):
            is_independent(A, [5])

    def test_vectors_with_scalars_on_the_right(self):
        # columns of the annihilator are its ground set vectors
        J = load_example("kf_u24").matrix("annihilator")
        M = matroid_from_vectors(q_domain(J.ctx), J.to_q().columns(), J.nrows, side="right")
        self.assertEqual(M, Matroid.uniform(2, 4))


if __name__ == "__main__":
    unittest.main()
