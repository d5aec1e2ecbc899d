from __future__ import annotations

import unittest

from wizardmatroid.utils.errors.errors import InvalidInputError, ValidationError
from wizardmatroid.wizard_corpus.corpus import load_example
from wizardmatroid.wizard_matroids import check_module

# ── Fixed cases ────────────────────────────────────────────────────────────────
SUITE_CASES = [
    dict(example="kf_u24", document="primal", flock=True, points=True),
    dict(example="toric", document="primal", flock=True, points=True),
    dict(example="nonfano", document="hurwitz", flock=False, points=False),
]


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestCheckModule(unittest.TestCase):
    def test_corpus_modules_pass(self):
        for c in SUITE_CASES:
            N = load_example(c["example"]).matrix(c["document"])
            with self.subTest(example=c["example"], document=c["document"]):
                report = check_module(N, radius=1)
                names = {check.name for check in report.checks}
                failed = [check.to_dict() for check in report.checks if not check.passed]
                self.assertTrue(report.ok, failed)
                self.assertEqual("flock_axioms" in names, c["flock"])
                self.assertEqual("annihilator" in names, c["points"])
                self.assertIn("perp_matroid_is_dual", names)

    def test_report_shape(self):
        report = check_module(load_example("kf_u24").matrix("primal"), radius=0)
        out = report.to_dict()
        self.assertEqual((out["n"], out["rank"], out["ok"]), (4, 2, True))
        self.assertEqual(out["ring"]["kind"], "skew_poly")

    def test_arguments(self):
        with self.assertRaises(ValidationError):
            check_module(load_example("kf_u24").matrix("annihilator"))
        with self.assertRaises(InvalidInputError):
            check_module(load_example("kf_u24").matrix("primal").to_q())


if __name__ == "__main__":
    unittest.main()
