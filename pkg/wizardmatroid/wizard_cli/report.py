# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
One report structure per command, printed either as a table or as canonical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, List, Sequence, Union

from wizardmatroid.utils.documents import dumps_canonical, serialize_matrix
from wizardmatroid.wizard_corpus.corpus import ExampleReport
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix
from wizardmatroid.wizard_matroids.flock import FlockReport, FlockSlice
from wizardmatroid.wizard_matroids.matroid import Matroid
from wizardmatroid.wizard_matroids.suite import ModuleReport
from wizardmatroid.wizard_matroids.valuated import ValuatedMatroid


@dataclass
class Report:
    payload: Any
    lines: List[str] = field(default_factory=list)
    ok: bool = True

    def render(self, as_json: bool) -> str:
        if as_json:
            return dumps_canonical(self.payload)
        return "\n".join(self.lines)


def _table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> List[str]:
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return out


def _status(passed: bool) -> str:
    return "ok" if passed else "FAIL"


# ---- Library results ----

def matroid_report(M: Matroid, index_base: int) -> Report:
    payload = M.to_dict(index_base)
    lines = [f"n={M.n} r={M.rank} bases={len(M.bases)}" + (" (uniform)" if M.is_uniform() else "")]
    lines += [" ".join(str(i) for i in b) for b in payload["bases"]]
    return Report(payload, lines)


def valuation_report(vm: ValuatedMatroid, index_base: int) -> Report:
    payload = vm.to_dict(index_base, include_non_bases=False)
    lines = [f"n={vm.n} r={vm.rank}"]
    lines += _table(["basis", "mu"], sorted(payload["mu"].items(), key=lambda kv: [int(i) for i in kv[0].split(",")]))
    return Report(payload, lines)


def matrix_report(A: Union[ModuleMatrix, QMatrix], index_base: int) -> Report:
    payload = serialize_matrix(A, index_base)
    lines = [f"{A.orientation} module, {A.nrows}x{A.ncols} over {A.ctx}"]
    for row in payload["entries"]:
        lines.append("  ".join(dumps_canonical(x).replace("\n", "").replace(" ", "") for x in row))
    return Report(payload, lines)


def slice_report(V: FlockSlice) -> Report:
    payload = V.to_dict()
    lines = [f"alpha={','.join(map(str, V.alpha))} dim={V.dim} over {V.field}"]
    lines += [" ".join(str(c.to_list()) for c in row) for row in V.rows()]
    return Report(payload, lines)


def flock_check_report(axioms: FlockReport, consistency: FlockReport) -> Report:
    payload = {"axioms": axioms.to_dict(), "consistency": consistency.to_dict()}
    lines = _table(
        ["check", "alphas", "status"],
        [
            ["axioms", axioms.checked, _status(axioms.ok)],
            ["slice/valuation", consistency.checked, _status(consistency.ok)],
        ],
    )
    for name, rep in (("axioms", axioms), ("slice/valuation", consistency)):
        if rep.violation is not None:
            lines.append(f"{name}: {dumps_canonical(rep.violation)}")
    return Report(payload, lines, axioms.ok and consistency.ok)


def sample_report(passed: bool, count: int, seed: int) -> Report:
    payload = {"annihilates": passed, "count": count, "seed": seed}
    return Report(payload, [f"{count} points (seed {seed}): {_status(passed)}"], passed)


def examples_list_report(ids: Sequence[str]) -> Report:
    return Report(list(ids), list(ids))


def example_report(report: ExampleReport) -> Report:
    rows = [
        [r.kind, r.document, r.provenance, _status(r.passed)]
        for r in report.results
    ]
    lines = [f"{report.example_id}: {report.title}"] + _table(["fact", "document", "provenance", "status"], rows)
    return Report(report.to_dict(), lines, report.ok)


def module_report(report: ModuleReport) -> Report:
    rows = [[c.name, _status(c.passed)] for c in report.checks]
    lines = [f"n={report.n} rank={report.rank} ring={report.ring['kind']}"] + _table(["check", "status"], rows)
    return Report(report.to_dict(), lines, report.ok)
