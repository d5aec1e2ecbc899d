from __future__ import annotations

import itertools
import unittest
from fractions import Fraction

from wizardmatroid.utils.errors.errors import (
    IndexOutOfRangeError,
    MatroidMismatchError,
    NonConstantDifferenceError,
    NotParallelError,
    ShiftVarianceError,
    SubsetSizeError,
    ValidationError,
)
from wizardmatroid.wizard_corpus.corpus import load_example
from wizardmatroid.wizard_matroids import (
    Matroid,
    TrivialShift,
    ValuatedCircuit,
    ValuatedMatroid,
    check_circuit_identity,
    check_valuated_exchange,
    differ_by_trivial,
    dual_valuation,
    find_valuated_exchange_violation,
    lindstrom_valuation,
    linear_functional,
    normalized_valuation,
    parallel_constant,
    three_term_check,
    three_term_sweep,
    valuated_circuits,
)
from wizardmatroid.wizard_scalars import INF

# ── Utils ──────────────────────────────────────────────────────────────────────
U24 = Matroid.uniform(2, 4)


def on_u24(values) -> ValuatedMatroid:
    bases = itertools.combinations(range(4), 2)
    return ValuatedMatroid(U24, dict(zip(bases, values)))


def corpus_valuation(example: str, document: str) -> ValuatedMatroid:
    return lindstrom_valuation(load_example(example).matrix(document))


# ── Fixed cases ────────────────────────────────────────────────────────────────
LINDSTROM_CASES = [
    dict(example="kf_u24", document="primal"),
    dict(example="dual_u24", document="primal"),
    dict(example="toric", document="primal"),
    dict(example="toric", document="parallel"),
    dict(example="nonfano", document="integers"),
    dict(example="nonfano", document="hurwitz"),
    dict(example="elliptic9", document="hurwitz"),
]

# one bad exchange pair: 01 and 23 both at 0, every swap costs 2
EXCHANGE_COUNTEREXAMPLE = (0, 1, 1, 1, 1, 0)

# shift-invariant combination on U(2,4): 03 + 12 - 02 - 13
CROSS_RATIO = {(0, 3): 1, (1, 2): 1, (0, 2): -1, (1, 3): -1}


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestLindstrom(unittest.TestCase):
    def test_kf_values(self):
        vm = corpus_valuation("kf_u24", "primal")
        self.assertEqual(vm.matroid, U24)
        self.assertEqual(vm.values(), (0, 0, 1, 0, 0, 0))
        self.assertEqual(vm.value((0, 3)), 1)

    def test_axioms_on_corpus(self):
        for c in LINDSTROM_CASES:
            A = load_example(c["example"]).matrix(c["document"])
            with self.subTest(**c):
                vm = lindstrom_valuation(A)
                self.assertIsNone(find_valuated_exchange_violation(vm))
                self.assertIsNone(three_term_sweep(vm))
                self.assertIsNone(check_circuit_identity(vm, valuated_circuits(A)))

    def test_threads_do_not_change_values(self):
        A = load_example("nonfano").matrix("integers")
        self.assertEqual(lindstrom_valuation(A, threads=3), lindstrom_valuation(A, threads=1))

    def test_non_bases_are_infinite(self):
        vm = corpus_valuation("toric", "parallel")
        self.assertIs(vm.value((0, 1)), INF)
        self.assertEqual(
            vm.to_dict(index_base=1),
            {
                "matroid": {"n": 3, "r": 2, "bases": [[1, 3], [2, 3]]},
                "mu": {"1,2": "inf", "1,3": 0, "2,3": 1},
            },
        )
        self.assertEqual(vm.to_dict(index_base=1, include_non_bases=False)["mu"], {"1,3": 0, "2,3": 1})

    def test_normalized(self):
        vm = TrivialShift(tuple(Fraction(3) for _ in range(4))).apply(corpus_valuation("kf_u24", "primal"))
        self.assertEqual(min(vm.values()), 6)
        self.assertEqual(normalized_valuation(vm).values(), (0, 0, 1, 0, 0, 0))


class TestValuatedAxioms(unittest.TestCase):
    def test_exchange_counterexample(self):
        vm = on_u24(EXCHANGE_COUNTEREXAMPLE)
        self.assertFalse(check_valuated_exchange(vm))
        B1, B2, i = find_valuated_exchange_violation(vm)
        self.assertIn(i, B1)
        self.assertFalse(three_term_check(vm, [], [0, 1, 2, 3]))
        self.assertEqual(three_term_sweep(vm), ((), (0, 1, 2, 3)))

    def test_three_term_arguments(self):
        vm = corpus_valuation("kf_u24", "primal")
        self.assertTrue(three_term_check(vm, [], [0, 1, 2, 3]))
        with self.assertRaises(SubsetSizeError):
            three_term_check(vm, [0], [0, 1, 2, 3])
        with self.assertRaises(SubsetSizeError):
            three_term_check(vm, [], [0, 1, 1, 3])
        with self.assertRaises(IndexOutOfRangeError):
            three_term_check(vm, [], [0, 1, 2, 9])

    def test_circuits_of_kf(self):
        A = load_example("kf_u24").matrix("primal")
        circuits = {c.support: c.gamma for c in valuated_circuits(A)}
        self.assertEqual(sorted(circuits), list(itertools.combinations(range(4), 3)))
        self.assertEqual(circuits[(0, 1, 2)], (0, 0, 0, INF))
        self.assertEqual(circuits[(0, 1, 3)], (0, 1, INF, 0))

    def test_tampered_circuit_fails(self):
        A = load_example("kf_u24").matrix("primal")
        vm = lindstrom_valuation(A)
        circuit = next(c for c in valuated_circuits(A) if c.support == (0, 1, 2))
        bad = ValuatedCircuit(circuit.support, (5,) + circuit.gamma[1:])
        failure = check_circuit_identity(vm, [bad])
        self.assertIsNotNone(failure)
        self.assertEqual(failure[0], (0, 1, 2))
        self.assertEqual(bad.to_list(), [5, 0, 0, "inf"])

    def test_construction_checked(self):
        with self.assertRaises(ValidationError):
            ValuatedMatroid(U24, {(0, 1): 0})
        with self.assertRaises(ValidationError):
            on_u24((0, 0, 0.5, 0, 0, 0))


class TestEquivalence(unittest.TestCase):
    def test_trivial_shift_is_recovered(self):
        vm = corpus_valuation("kf_u24", "primal")
        alpha = TrivialShift((Fraction(1), Fraction(0), Fraction(2), Fraction(-1)))
        shifted = alpha.apply(vm)
        found = differ_by_trivial(vm, shifted)
        self.assertIsNotNone(found)
        self.assertEqual(found.apply(vm), shifted)

    def test_no_shift_between_inequivalent_valuations(self):
        vm = corpus_valuation("kf_u24", "primal")
        self.assertIsNone(differ_by_trivial(vm, on_u24((0,) * 6)))

    def test_shift_needs_same_matroid(self):
        with self.assertRaises(MatroidMismatchError):
            differ_by_trivial(corpus_valuation("toric", "primal"), corpus_valuation("toric", "parallel"))

    def test_half_integral_shift_rejected(self):
        vm = corpus_valuation("kf_u24", "primal")
        with self.assertRaises(ValidationError):
            TrivialShift((Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0))).apply(vm)

    def test_dual_valuation(self):
        vm = corpus_valuation("kf_u24", "primal")
        dual = dual_valuation(vm)
        self.assertEqual(dual.matroid, U24)
        self.assertEqual(dual.value((1, 2)), vm.value((0, 3)))
        self.assertEqual(dual_valuation(dual), vm)


class TestInvariants(unittest.TestCase):
    def test_parallel_constant(self):
        self.assertEqual(parallel_constant(corpus_valuation("toric", "parallel"), 0, 1), -1)
        self.assertEqual(parallel_constant(corpus_valuation("toric", "parallel"), 1, 0), 1)

    def test_not_parallel(self):
        vm = corpus_valuation("kf_u24", "primal")
        with self.assertRaises(NotParallelError):
            parallel_constant(vm, 0, 1)
        with self.assertRaises(NotParallelError):
            parallel_constant(vm, 2, 2)
        with self.assertRaises(IndexOutOfRangeError):
            parallel_constant(vm, 0, 7)

    def test_non_constant_difference(self):
        M = Matroid(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        vm = ValuatedMatroid(M, {(0, 2): 0, (1, 2): 0, (0, 3): 0, (1, 3): 1, (2, 3): 0})
        with self.assertRaises(NonConstantDifferenceError):
            parallel_constant(vm, 0, 1)

    def test_linear_functional(self):
        vm = corpus_valuation("kf_u24", "primal")
        self.assertEqual(linear_functional(vm, CROSS_RATIO), 1)
        self.assertEqual(linear_functional(on_u24(EXCHANGE_COUNTEREXAMPLE), CROSS_RATIO), 0)

    def test_linear_functional_must_be_shift_invariant(self):
        vm = corpus_valuation("kf_u24", "primal")
        with self.assertRaises(ShiftVarianceError):
            linear_functional(vm, {(0, 1): 1})

    def test_linear_functional_on_non_basis(self):
        M = Matroid(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        vm = ValuatedMatroid(M, dict.fromkeys(M.basis_list(), 0))
        with self.assertRaises(ValidationError):
            linear_functional(vm, {(0, 1): 1, (2, 3): 1, (0, 2): -1, (1, 3): -1})


if __name__ == "__main__":
    unittest.main()
