from __future__ import annotations

import contextlib
import hashlib
import io
import json
import os
import shutil
import tempfile
import unittest
from pathlib import Path

import wizardmatroid as wm
from wizardmatroid.utils.errors import DocumentReadError, InternalError, UnsupportedRingError, handle_errors
from wizardmatroid.wizard_cli.cli import run
from wizardmatroid.wizard_corpus import load_example

# ── Switches ───────────────────────────────────────────────────────────────────
UPDATE = os.getenv("WIZARDMATROID_UPDATE_BASELINES", "0") == "1"

# ── Paths ──────────────────────────────────────────────────────────────────────
TEST_DIR = Path(__file__).resolve().parent
BASELINE_PATH = TEST_DIR / "baselines" / "cli.json"

# ── Utils ──────────────────────────────────────────────────────────────────────
def hnorm(s: str) -> str:
    return hashlib.blake2b(s.strip().encode("utf-8"), digest_size=16).hexdigest()


def load_baseline() -> dict:
    if BASELINE_PATH.exists():
        return json.loads(BASELINE_PATH.read_text(encoding="utf-8"))
    return {}


def save_baseline(data: dict) -> None:
    BASELINE_PATH.parent.mkdir(parents=True, exist_ok=True)
    BASELINE_PATH.write_text(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True), encoding="utf-8")


def invoke(argv) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = run(argv)
        except SystemExit as e:
            code = e.code
    return code, out.getvalue(), err.getvalue()


# ── Fixed cases ────────────────────────────────────────────────────────────────
DOCUMENTS = {
    "kf.json": ("kf_u24", "primal", 1),
    "kf_perp.json": ("kf_u24", "annihilator", 1),
    "toric.json": ("toric", "primal", 1),
    "elliptic.json": ("elliptic9", "hurwitz", 0),
}

# argv uses {tmp} for the document directory
CASES = [
    dict(name="matroid", argv=["matroid", "{tmp}/kf.json", "--json"], code=0),
    dict(name="matroid_table", argv=["matroid", "{tmp}/kf.json"], code=0),
    dict(name="valuation", argv=["valuation", "lindstrom", "{tmp}/kf.json", "--json"], code=0),
    dict(name="valuation_threads", argv=["valuation", "lindstrom", "{tmp}/toric.json", "--threads", "2", "--json"], code=0),
    dict(name="dual", argv=["dual", "{tmp}/kf.json", "--json"], code=0),
    dict(name="saturate", argv=["saturate", "{tmp}/toric.json", "--json"], code=0),
    dict(name="perp", argv=["perp", "{tmp}/toric.json", "--json"], code=0),
    dict(name="flock_slice", argv=["flock", "slice", "{tmp}/kf.json", "--alpha", "0,0,0,1", "--json"], code=0),
    dict(name="flock_check", argv=["flock", "check", "{tmp}/kf.json", "--radius", "1", "--json"], code=0),
    dict(name="sample", argv=["sample", "verify", "--module", "{tmp}/kf.json", "--annihilator", "{tmp}/kf_perp.json", "--json"], code=0),
    dict(name="sample_default_perp", argv=["sample", "verify", "--module", "{tmp}/toric.json", "--count", "20"], code=0),
    dict(name="sample_wrong", argv=["sample", "verify", "--module", "{tmp}/kf.json", "--annihilator", "{tmp}/wrong.json"], code=1),
    dict(name="examples_list", argv=["examples", "list", "--json"], code=0),
    dict(name="examples_run", argv=["examples", "run", "toric", "--json"], code=0),
    dict(name="check", argv=["check", "{tmp}/kf.json", "--radius", "0", "--json"], code=0),
    dict(name="unsupported", argv=["flock", "slice", "{tmp}/elliptic.json", "--alpha", "0,0,0,0,0,0,0,0,0"], code=4),
    dict(name="bad_document", argv=["matroid", "{tmp}/broken.json"], code=2),
    dict(name="bad_alpha", argv=["flock", "slice", "{tmp}/kf.json", "--alpha", "0,0"], code=2),
    dict(name="unknown_example", argv=["examples", "run", "fano"], code=2),
]

# outputs whose JSON is known by hand; the rest get structural checks
GOLDEN = {"matroid", "valuation", "valuation_threads", "flock_check", "sample", "examples_list"}


# ── Tests ──────────────────────────────────────────────────────────────────────
class TestCommandLine(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.snap = load_baseline()
        cls.changed = False
        cls.tmp = Path(tempfile.mkdtemp(prefix="wizardmatroid_cli_"))
        for filename, (example_id, name, base) in DOCUMENTS.items():
            doc = wm.write_matrix(load_example(example_id).matrix(name), index_base=base, name=name)
            (cls.tmp / filename).write_text(json.dumps(doc), encoding="utf-8")
        wrong = json.loads((cls.tmp / "kf_perp.json").read_text(encoding="utf-8"))
        wrong.update(rows=1, entries=[[[[1, 0]], [], [], []]])
        (cls.tmp / "wrong.json").write_text(json.dumps(wrong), encoding="utf-8")
        (cls.tmp / "broken.json").write_text("{not json", encoding="utf-8")

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tmp, ignore_errors=True)
        if cls.changed:
            save_baseline(cls.snap)

    def _argv(self, c: dict) -> list:
        return [a.replace("{tmp}", str(self.tmp)) for a in c["argv"]]

    def test_exit_codes(self):
        for c in CASES:
            with self.subTest(case=c["name"]):
                code, out, err = invoke(self._argv(c))
                self.assertEqual(code, c["code"], err)
                if code >= 2:
                    self.assertTrue(err.startswith("error ["), err)

    def test_outputs_match_baselines(self):
        for c in CASES:
            if c["name"] not in GOLDEN:
                continue
            with self.subTest(case=c["name"]):
                _, out, _ = invoke(self._argv(c))
                json.loads(out)
                digest = hnorm(out)
                k = c["name"]
                if UPDATE:
                    type(self).snap[k] = digest
                    type(self).changed = True
                    continue
                if k not in self.snap:
                    self.fail(f"Missing baseline for {k}. Set WIZARDMATROID_UPDATE_BASELINES=1 and re-run.")
                self.assertEqual(self.snap[k], digest, f"output of {k} changed")

    def test_baselines_cover_golden_cases(self):
        self.assertEqual(set(self.snap), GOLDEN)

    def test_matrix_outputs(self):
        kf = wm.read_matrix(self.tmp / "kf.json")
        toric = wm.read_matrix(self.tmp / "toric.json")
        payload = {}
        for name in ("dual", "saturate", "perp"):
            _, out, _ = invoke(self._argv(next(c for c in CASES if c["name"] == name)))
            payload[name] = json.loads(out)
        self.assertEqual(payload["dual"]["orientation"], "right")
        self.assertEqual(wm.matroid(payload["dual"]), wm.matroid(kf).dual())
        self.assertEqual(wm.matroid(payload["saturate"]), wm.matroid(toric))
        self.assertEqual((payload["perp"]["orientation"], payload["perp"]["rows"], payload["perp"]["cols"]), ("left", 1, 3))
        self.assertEqual(payload["perp"]["index_base"], 1)

    def test_report_outputs(self):
        payload = {}
        for name in ("flock_slice", "examples_run", "check"):
            _, out, _ = invoke(self._argv(next(c for c in CASES if c["name"] == name)))
            payload[name] = json.loads(out)
        self.assertEqual((payload["flock_slice"]["alpha"], payload["flock_slice"]["dim"]), ([0, 0, 0, 1], 2))
        self.assertEqual(len(payload["flock_slice"]["basis"]), 4)
        self.assertEqual((payload["examples_run"]["id"], payload["examples_run"]["ok"]), ("toric", True))
        self.assertTrue(all(f["passed"] for f in payload["examples_run"]["facts"]))
        self.assertEqual((payload["check"]["n"], payload["check"]["rank"], payload["check"]["ok"]), (4, 2, True))

    def test_matroid_payload(self):
        _, out, _ = invoke(self._argv(CASES[0]))
        payload = json.loads(out)
        self.assertEqual(payload["n"], 4)
        self.assertEqual(len(payload["bases"]), 6)
        _, table, _ = invoke(self._argv(CASES[1]))
        self.assertTrue(table.startswith("n=4 r=2 bases=6 (uniform)"))

    def test_unsupported_ring_code(self):
        case = next(c for c in CASES if c["name"] == "unsupported")
        _, _, err = invoke(self._argv(case))
        self.assertIn("UNSUPPORTED_RING", err)
        self.assertEqual(err.count("UNSUPPORTED_RING"), 1, err)

    def test_examples_list(self):
        _, out, _ = invoke(["examples", "list", "--json"])
        self.assertEqual(len(json.loads(out)), 7)

    def test_usage_errors(self):
        code, _, _ = invoke(["permute", "x.json"])
        self.assertEqual(code, 2)
        code, _, _ = invoke(["flock", "check", "x.json", "--radius", "-1"])
        self.assertEqual(code, 2)


class TestFacade(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.doc = wm.write_matrix(load_example("kf_u24").matrix("primal"))

    def test_sources(self):
        text = json.dumps(self.doc)
        for source in (self.doc, text, text.encode("utf-8")):
            with self.subTest(source=type(source).__name__):
                self.assertEqual(wm.matroid(source).to_dict(1)["bases"], [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])

    def test_round_trip(self):
        N = wm.read_matrix(self.doc)
        self.assertIs(wm.read_matrix(N), N)
        self.assertEqual(wm.write_matrix(N), self.doc)

    def test_operations(self):
        self.assertEqual(wm.lindstrom_valuation(self.doc).values(), (0, 0, 1, 0, 0, 0))
        self.assertEqual(wm.flock_slice(self.doc, "0,0,0,1").dim, 2)
        self.assertEqual(len(wm.flock_matroid(self.doc, [0, 0, 0, 1], "argmin").bases), 2)
        axioms, consistency = wm.check_flock(self.doc, radius=1)
        self.assertTrue(axioms.ok and consistency.ok)
        self.assertTrue(wm.sample_verify(self.doc, count=10))
        self.assertEqual(len(wm.sample_points(self.doc, count=3)), 3)
        self.assertTrue(wm.check_module(self.doc, radius=0).ok)
        self.assertEqual(wm.perp(self.doc).orientation, "left")

    def test_errors(self):
        with self.assertRaises(DocumentReadError):
            wm.read_matrix("{not json")
        elliptic = wm.write_matrix(load_example("elliptic9").matrix("hurwitz"), index_base=0)
        with self.assertRaises(UnsupportedRingError):
            wm.flock_slice(elliptic, [0] * 9)

    def test_unexpected_errors_are_wrapped(self):
        @handle_errors
        def broken():
            return 1 // 0

        with self.assertLogs("wizardmatroid.utils.errors.errors_handle", level="ERROR"):
            with self.assertRaises(InternalError) as ctx:
                broken()
        self.assertIsInstance(ctx.exception.__cause__, ZeroDivisionError)
        self.assertEqual((ctx.exception.code, ctx.exception.exit_code), ("INTERNAL", 1))
        self.assertIn("broken", str(ctx.exception))


if __name__ == "__main__":
    unittest.main()
