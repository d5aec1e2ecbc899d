from __future__ import annotations

import unittest

from wizardmatroid.utils.errors.errors import (
    InvalidInputError,
    UnsupportedRingError,
    ValidationError,
)
from wizardmatroid.wizard_corpus.corpus import load_example
from wizardmatroid.wizard_groups import (
    AdditiveModel,
    GroupPoint,
    MultiplicativeModel,
    SplitMix64,
    eval_endo,
    group_model,
    parametrize,
    sample_points,
    verify_annihilator,
)
from wizardmatroid.wizard_linalg import ModuleMatrix
from wizardmatroid.wizard_scalars import make_context

# ── Switches ───────────────────────────────────────────────────────────────────
SEED = 42
COUNT = 25

# ── Utils ──────────────────────────────────────────────────────────────────────
KF4 = make_context({"kind": "skew_poly", "p": 2, "k": 2})
Z2 = make_context({"kind": "integers", "p": 2})
H2 = make_context({"kind": "hurwitz", "p": 2})


def corpus_matrix(example_id: str, name: str):
    return load_example(example_id).matrix(name)


# ── Fixed cases ────────────────────────────────────────────────────────────────
# first outputs of splitmix64 seeded with 0
SPLITMIX_ZERO = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]

ANNIHILATOR_CASES = [
    dict(example="kf_u24", module="primal", annihilator="annihilator"),
    dict(example="toric", module="primal", annihilator="annihilator"),
]


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestSplitMix64(unittest.TestCase):
    def test_reference_stream(self):
        rng = SplitMix64(0)
        self.assertEqual([rng.next_u64() for _ in SPLITMIX_ZERO], SPLITMIX_ZERO)

    def test_deterministic(self):
        a, b = SplitMix64(SEED), SplitMix64(SEED)
        self.assertEqual([a.randbelow(1000) for _ in range(50)], [b.randbelow(1000) for _ in range(50)])
        self.assertTrue(all(3 <= SplitMix64(i).randrange(3, 9) < 9 for i in range(50)))

    def test_bad_arguments(self):
        with self.assertRaises(InvalidInputError):
            SplitMix64("42")
        with self.assertRaises(ValidationError):
            SplitMix64(1).randbelow(0)


class TestEvaluation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.additive = AdditiveModel(KF4)
        cls.E = cls.additive.field
        cls.multiplicative = MultiplicativeModel(Z2)
        cls.rng = SplitMix64(SEED)

    def test_model_fields(self):
        self.assertEqual((self.E.p, self.E.k), (2, 10))
        self.assertEqual(self.multiplicative.field.p, 10007)
        self.assertIsInstance(group_model(KF4), AdditiveModel)
        self.assertIsInstance(group_model(Z2), MultiplicativeModel)
        with self.assertRaises(UnsupportedRingError):
            group_model(H2)

    def test_embedding_is_a_field_map(self):
        g = KF4.field.gen()
        self.assertEqual(self.additive.embed(KF4.field.one()), self.E.one())
        self.assertEqual(self.additive.embed(g * g), self.additive.embed(g) + self.E.one())

    def test_frobenius_polynomial(self):
        F = KF4.F()
        e = F * F + F
        for _ in range(COUNT):
            x = self.E.random_element(self.rng)
            with self.subTest(x=x.to_list()):
                self.assertEqual(eval_endo(KF4, e, x, self.additive), x ** 4 + x ** 2)
                self.assertEqual(eval_endo(KF4, e, x), x ** 4 + x ** 2)

    def test_endomorphisms_compose(self):
        for _ in range(COUNT):
            a = KF4.random_ring_element(self.rng, 2)
            b = KF4.random_ring_element(self.rng, 2)
            x = self.E.random_element(self.rng)
            y = self.E.random_element(self.rng)
            with self.subTest(a=repr(a), b=repr(b)):
                self.assertEqual(
                    eval_endo(KF4, a * b, x, self.additive),
                    eval_endo(KF4, a, eval_endo(KF4, b, x, self.additive), self.additive),
                )
                self.assertEqual(
                    eval_endo(KF4, a + b, x, self.additive),
                    eval_endo(KF4, a, x, self.additive) + eval_endo(KF4, b, x, self.additive),
                )
                self.assertEqual(
                    eval_endo(KF4, a, x + y, self.additive),
                    eval_endo(KF4, a, x, self.additive) + eval_endo(KF4, a, y, self.additive),
                )

    def test_integer_powers(self):
        Fq = self.multiplicative.field
        for _ in range(COUNT):
            t = Fq.random_element(self.rng, nonzero=True)
            with self.subTest(t=t.to_index()):
                self.assertEqual(eval_endo(Z2, -2, t) * t * t, Fq.one())
                self.assertEqual(eval_endo(Z2, 3, t, self.multiplicative), t * t * t)

    def test_multiplicative_zero(self):
        Fq = self.multiplicative.field
        with self.assertRaises(ValidationError):
            self.multiplicative.act(2, Fq.zero())
        with self.assertRaises(ValidationError):
            GroupPoint("multiplicative", (Fq.one(), Fq.zero()))


class TestPoints(unittest.TestCase):
    def test_parametrize_kf(self):
        N = corpus_matrix("kf_u24", "primal")
        model = group_model(N.ctx)
        rng = SplitMix64(SEED)
        a, b = model.random_parameter(rng), model.random_parameter(rng)
        point = parametrize(N, [a, b], model)
        self.assertEqual(point.kind, "additive")
        self.assertEqual(point.coords, (a, b, a + b, a + b ** 2))

    def test_parametrize_toric(self):
        N = corpus_matrix("toric", "primal")
        model = group_model(N.ctx)
        s, t = model.field.from_int(3), model.field.from_int(5)
        self.assertEqual(parametrize(N, [s, t]).coords, (s, t, s * t))

    def test_zero_module_gives_identity(self):
        N = ModuleMatrix.from_rows(KF4, [[KF4.ring_zero()], [KF4.ring_zero()]], 1)
        for point in sample_points(N, 5, SEED):
            self.assertTrue(not any(point.coords))

    def test_sampling_is_seeded(self):
        N = corpus_matrix("kf_u24", "primal")
        first = [p.to_list() for p in sample_points(N, 10, SEED)]
        again = [p.to_list() for p in sample_points(N, 10, SEED)]
        other = [p.to_list() for p in sample_points(N, 10, SEED + 1)]
        self.assertEqual(first, again)
        self.assertNotEqual(first, other)
        self.assertEqual(sample_points(N, 0, SEED), [])

    def test_annihilators(self):
        for c in ANNIHILATOR_CASES:
            N = corpus_matrix(c["example"], c["module"])
            J = corpus_matrix(c["example"], c["annihilator"])
            with self.subTest(example=c["example"]):
                self.assertTrue(verify_annihilator(J, sample_points(N, 100, SEED)))

    def test_wrong_annihilator(self):
        N = corpus_matrix("kf_u24", "primal")
        J = ModuleMatrix.from_rows(
            KF4, [[KF4.ring_one(), KF4.ring_zero(), KF4.ring_zero(), KF4.ring_zero()]], orientation="left"
        )
        self.assertFalse(verify_annihilator(J, sample_points(N, 100, SEED)))

    def test_arguments(self):
        N = corpus_matrix("kf_u24", "primal")
        J = corpus_matrix("kf_u24", "annihilator")
        model = group_model(N.ctx)
        with self.assertRaises(ValidationError):
            parametrize(J, [model.identity()] * 4)
        with self.assertRaises(ValidationError):
            parametrize(N, [model.identity()])
        with self.assertRaises(ValidationError):
            verify_annihilator(N, [])
        with self.assertRaises(InvalidInputError):
            sample_points(N, -1, SEED)
        with self.assertRaises(ValidationError):
            verify_annihilator(J, [GroupPoint("additive", (model.identity(),))])


if __name__ == "__main__":
    unittest.main()
