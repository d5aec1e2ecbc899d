from __future__ import annotations

import os
import random
import unittest

from wizardmatroid.utils.errors.errors import (
    InvalidInputError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.wizard_corpus.corpus import load_example
from wizardmatroid.wizard_linalg import ModuleMatrix, q_rank, saturate
from wizardmatroid.wizard_matroids import (
    Matroid,
    check_flock_axioms,
    check_flock_valuation_consistency,
    flock_matroid,
    flock_slice,
    frobenius_twist,
)
from wizardmatroid.wizard_scalars import make_context

# ── Switches ───────────────────────────────────────────────────────────────────
EXHAUSTIVE = os.getenv("WIZARDMATROID_EXHAUSTIVE", "0") == "1"
SEED = 11

# ── Utils ──────────────────────────────────────────────────────────────────────
KF4 = make_context({"kind": "skew_poly", "p": 2, "k": 2})


def corpus_matrix(example_id: str, name: str):
    return load_example(example_id).matrix(name)


def span_of(slice_, columns):
    L = slice_.field
    return slice_.spans([[L.element(c) for c in col] for col in columns])


def random_saturated_kf_module(rng: random.Random, n: int, d: int) -> ModuleMatrix:
    while True:
        rows = [[KF4.random_ring_element(rng, 1) for _ in range(d)] for _ in range(n)]
        N = ModuleMatrix.from_rows(KF4, rows, d)
        if q_rank(N) == d:
            return saturate(N)


# ── Fixed cases ────────────────────────────────────────────────────────────────
KF_SLICES = [
    dict(
        alpha=(0, 0, 0, 0),
        span=[[[1, 0], [0, 0], [1, 0], [1, 0]], [[0, 0], [1, 0], [1, 0], [0, 0]]],
        bases=[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    ),
    dict(
        alpha=(0, 0, 0, 1),
        span=[[[0, 0], [0, 0], [0, 0], [1, 0]], [[0, 0], [1, 0], [1, 0], [1, 0]]],
        bases=[(1, 3), (2, 3)],
    ),
]

SWEEP_CASES = [
    dict(example="kf_u24", document="primal", radius=2),
    dict(example="kf_u24", document="dual", radius=2),
    dict(example="dual_u24", document="primal", radius=2),
    dict(example="toric", document="primal", radius=2),
    dict(example="toric", document="parallel", radius=2),
]


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestFlockSlice(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.N = corpus_matrix("kf_u24", "primal")

    def test_kf_slices(self):
        for c in KF_SLICES:
            with self.subTest(alpha=c["alpha"]):
                V = flock_slice(self.N, c["alpha"])
                self.assertEqual(V.dim, 2)
                self.assertEqual(V.alpha, c["alpha"])
                self.assertTrue(span_of(V, c["span"]))
                self.assertEqual(V.matroid(), Matroid(4, c["bases"]))

    def test_methods_agree_on_kf(self):
        for c in KF_SLICES:
            with self.subTest(alpha=c["alpha"]):
                self.assertEqual(flock_matroid(self.N, c["alpha"], "slice"), Matroid(4, c["bases"]))
                self.assertEqual(flock_matroid(self.N, c["alpha"], "argmin"), Matroid(4, c["bases"]))

    def test_other_spans_rejected(self):
        V = flock_slice(self.N, (0, 0, 0, 0))
        self.assertFalse(span_of(V, KF_SLICES[1]["span"]))
        self.assertFalse(span_of(V, KF_SLICES[0]["span"][:1]))

    def test_frobenius_twist(self):
        V = flock_slice(self.N, (1, 0, 2, 0))
        T = frobenius_twist(V)
        self.assertEqual(T.alpha, (0, -1, 1, -1))
        self.assertTrue(T.same_span(flock_slice(self.N, (0, -1, 1, -1))))
        self.assertTrue(frobenius_twist(T, -1).same_span(V))

    def test_integer_slices_are_periodic(self):
        N = corpus_matrix("toric", "primal")
        for alpha in ((0, 0, 0), (1, -1, 0), (2, 0, 1)):
            with self.subTest(alpha=alpha):
                V = flock_slice(N, alpha)
                down = flock_slice(N, tuple(a - 1 for a in alpha))
                self.assertTrue(down.same_span(V))

    def test_to_dict(self):
        V = flock_slice(self.N, (0, 0, 0, 0))
        out = V.to_dict()
        self.assertEqual(out["alpha"], [0, 0, 0, 0])
        self.assertEqual(out["dim"], 2)
        self.assertEqual(len(out["basis"]), 4)


class TestFlockArguments(unittest.TestCase):
    def test_hurwitz_unsupported(self):
        N = corpus_matrix("elliptic9", "hurwitz")
        with self.assertRaises(UnsupportedRingError):
            flock_slice(N, (0,) * N.nrows)
        with self.assertRaises(UnsupportedRingError):
            check_flock_axioms(N, radius=0)

    def test_left_module_rejected(self):
        with self.assertRaises(ValidationError):
            flock_slice(corpus_matrix("kf_u24", "annihilator"), (0, 0))

    def test_fraction_matrix_rejected(self):
        with self.assertRaises(InvalidInputError):
            flock_slice(corpus_matrix("toric", "primal").to_q(), (0, 0, 0))

    def test_alpha_length(self):
        with self.assertRaises(ValidationError):
            flock_slice(corpus_matrix("toric", "primal"), (0, 0))

    def test_method_and_radius(self):
        N = corpus_matrix("toric", "primal")
        with self.assertRaises(InvalidInputError):
            flock_matroid(N, (0, 0, 0), "nearest")
        with self.assertRaises(InvalidInputError):
            check_flock_axioms(N, radius=-1)


class TestFlockSweeps(unittest.TestCase):
    def test_corpus_modules(self):
        for c in SWEEP_CASES:
            N = corpus_matrix(c["example"], c["document"])
            with self.subTest(**c):
                axioms = check_flock_axioms(N, radius=c["radius"])
                self.assertTrue(axioms.ok, axioms.violation)
                self.assertEqual(axioms.checked, (2 * c["radius"] + 1) ** N.nrows)
                consistency = check_flock_valuation_consistency(N, radius=c["radius"])
                self.assertTrue(consistency.ok, consistency.violation)

    def test_random_saturated_kf_modules(self):
        rng = random.Random(SEED)
        for _ in range(4 if EXHAUSTIVE else 1):
            N = random_saturated_kf_module(rng, 5, 2)
            with self.subTest(N=repr(N)):
                axioms = check_flock_axioms(N, radius=2)
                self.assertTrue(axioms.ok, axioms.violation)
                self.assertEqual(axioms.checked, 5 ** 5)
                self.assertTrue(check_flock_valuation_consistency(N, radius=2).ok)

    # slow: 5^7 points per sweep, several minutes
    def test_nonfano_integers_full_box(self):
        N = corpus_matrix("nonfano", "integers")
        axioms = check_flock_axioms(N, radius=2, threads=4)
        self.assertTrue(axioms.ok, axioms.violation)
        self.assertEqual(axioms.checked, 5 ** 7)
        consistency = check_flock_valuation_consistency(N, radius=2, threads=4)
        self.assertTrue(consistency.ok, consistency.violation)

    def test_threads_give_same_report(self):
        N = corpus_matrix("kf_u24", "primal")
        one = check_flock_valuation_consistency(N, radius=1, threads=1)
        many = check_flock_valuation_consistency(N, radius=1, threads=4)
        self.assertEqual(one.to_dict(), many.to_dict())


if __name__ == "__main__":
    unittest.main()
