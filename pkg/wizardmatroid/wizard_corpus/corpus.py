# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
Registry of published matrix examples.

Each example is a JSON file in the data directory: a set of named
MatrixDocuments and a list of facts. A fact names the document it is about,
its kind, the expected value and where the value comes from
(``published``, ``trivial`` or ``derived``). :func:`run_example` recomputes
every fact with the library and reports expected against actual.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from wizardmatroid.utils.documents import MatrixDocument, load_json, read_matrix_document, validate_document
from wizardmatroid.utils.errors.errors import SchemaError, UnknownExampleError
from wizardmatroid.utils.selector import normalize_alpha_selector, normalize_subset_selector
from wizardmatroid.utils.settings import DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, data_dir
from wizardmatroid.wizard_groups.groups import sample_points, verify_annihilator
from wizardmatroid.wizard_linalg.modules import (
    dual_module,
    is_saturated,
    parallel_extension,
    perp,
    q_rank,
    span_equal,
)
from wizardmatroid.wizard_matroids.flock import flock_matroid, flock_slice
from wizardmatroid.wizard_matroids.matroid import Matroid, is_independent, matroid_from_matrix
from wizardmatroid.wizard_matroids.valuated import (
    differ_by_trivial,
    dual_valuation,
    lindstrom_valuation,
    linear_functional,
    normalized_valuation,
    parallel_constant,
)

logger = logging.getLogger(__name__)

__all__ = ["Example", "FactResult", "ExampleReport", "list_examples", "load_example", "run_example"]


@dataclass(frozen=True)
class Example:
    id: str
    title: str
    index_base: int
    documents: Dict[str, MatrixDocument]
    facts: List[dict]
    source: Optional[str] = None
    path: Optional[Path] = None

    def matrix(self, name: str):
        if name not in self.documents:
            raise SchemaError("facts", f"unknown document '{name}' in example '{self.id}'")
        return self.documents[name].matrix


@dataclass
class FactResult:
    kind: str
    document: str
    provenance: str
    passed: bool
    expected: Any
    actual: Any
    note: Optional[str] = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "document": self.document,
            "provenance": self.provenance,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ExampleReport:
    example_id: str
    title: str
    results: List[FactResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failed(self) -> List[FactResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "id": self.example_id,
            "title": self.title,
            "ok": self.ok,
            "facts": [r.to_dict() for r in self.results],
        }


###############################################################################
#                                REGISTRY                                     #
###############################################################################

def _example_files(directory: Path = None) -> Dict[str, Path]:
    directory = Path(directory) if directory is not None else data_dir()
    return {p.stem: p for p in sorted(directory.glob("*.json"))}


def list_examples(directory: Path = None) -> List[str]:
    """Registered example ids, sorted."""
    return sorted(_example_files(directory))


def load_example(example_id: str, directory: Path = None) -> Example:
    """
    Loads and validates one example.

    Raises
    ------
    UnknownExampleError
        ``example_id`` is not in the data directory.
    SchemaError
        The example file or one of its documents breaks its schema.
    """
    files = _example_files(directory)
    if example_id not in files:
        raise UnknownExampleError(example_id, sorted(files))
    raw = load_json(files[example_id])
    validate_document(raw, "example")
    if raw["id"] != example_id:
        raise SchemaError("id", f"file {files[example_id].name} declares id '{raw['id']}'")
    base = raw.get("index_base", 1)
    documents = {}
    for name, doc in raw["documents"].items():
        if "index_base" not in doc:
            doc = dict(doc, index_base=base)
        documents[name] = read_matrix_document(doc)
    return Example(
        id=raw["id"],
        title=raw["title"],
        index_base=base,
        documents=documents,
        facts=list(raw["facts"]),
        source=raw.get("source"),
        path=files[example_id],
    )


###############################################################################
#                               FACT CHECKS                                   #
###############################################################################

def _subset(example: Example, A, raw) -> List[int]:
    return normalize_subset_selector(list(raw), A.nrows, example.index_base)


def _bases_out(M: Matroid, base: int) -> List[List[int]]:
    return [[i + base for i in b] for b in M.basis_list()]


def _check_matroid(example: Example, fact: dict, threads: int):
    A = example.matrix(fact["document"])
    M = matroid_from_matrix(A)
    expect = fact["expect"]
    base = example.index_base
    if "uniform" in expect:
        r, n = expect["uniform"]
        return M == Matroid.uniform(r, n), {"uniform": M.is_uniform(), "r": M.rank, "n": M.n}
    if "bases" in expect:
        wanted = Matroid(A.nrows, [_subset(example, A, b) for b in expect["bases"]])
        return M == wanted, _bases_out(M, base)
    if "non_bases" in expect:
        r = expect["r"]
        excluded = {tuple(_subset(example, A, b)) for b in expect["non_bases"]}
        wanted = Matroid(A.nrows, [c for c in itertools.combinations(range(A.nrows), r) if c not in excluded])
        return M == wanted, {"r": M.rank, "bases": len(M.bases)}
    raise SchemaError("facts/expect", "matroid facts need 'uniform', 'bases' or 'non_bases'")


def _check_rank(example: Example, fact: dict, threads: int):
    actual = q_rank(example.matrix(fact["document"]))
    return actual == fact["expect"], actual


def _check_saturated(example: Example, fact: dict, threads: int):
    actual = is_saturated(example.matrix(fact["document"]))
    return actual == fact["expect"], actual


def _check_valuation(example: Example, fact: dict, threads: int):
    vm = lindstrom_valuation(example.matrix(fact["document"]), threads=threads)
    if fact.get("normalized"):
        vm = normalized_valuation(vm)
    actual = list(vm.values())
    return actual == fact["expect"], actual


def _check_dual_span(example: Example, fact: dict, threads: int):
    dual = dual_module(example.matrix(fact["document"]))
    actual = span_equal(dual, example.matrix(fact["against"]), fact.get("level", "ring"))
    return actual == fact["expect"], actual


def _check_perp_span(example: Example, fact: dict, threads: int):
    J = perp(example.matrix(fact["document"]))
    actual = span_equal(J, example.matrix(fact["against"]), fact.get("level", "ring"))
    return actual == fact["expect"], actual


def _independence(example: Example, fact: dict, wanted: bool):
    A = example.matrix(fact["document"])
    actual = {}
    for raw in fact["subsets"]:
        key = ",".join(str(i) for i in raw)
        actual[key] = is_independent(A, _subset(example, A, raw))
    return all(v == wanted for v in actual.values()), actual


def _check_independent(example: Example, fact: dict, threads: int):
    return _independence(example, fact, True)


def _check_dependent(example: Example, fact: dict, threads: int):
    return _independence(example, fact, False)


def _functional_value(example: Example, fact: dict, threads: int) -> int:
    A = example.matrix(fact["document"])
    vm = lindstrom_valuation(A, threads=threads)
    if fact.get("dual"):
        vm = dual_valuation(vm)
    coefficients = {tuple(_subset(example, A, term["basis"])): term["coeff"] for term in fact["coefficients"]}
    return linear_functional(vm, coefficients)


def _check_functional(example: Example, fact: dict, threads: int):
    actual = _functional_value(example, fact, threads)
    passed = actual == fact["expect"]
    if "expect_mod" in fact:
        modulus, residue = fact["expect_mod"]
        passed = passed and actual % modulus == residue
    return passed, actual


def _check_no_trivial_shift(example: Example, fact: dict, threads: int):
    primal = lindstrom_valuation(example.matrix(fact["document"]), threads=threads)
    if fact.get("dual", True):
        primal = dual_valuation(primal)
    other = lindstrom_valuation(example.matrix(fact["against"]), threads=threads)
    shift = differ_by_trivial(primal, other)
    actual = shift is None
    return actual == fact["expect"], None if shift is None else shift.to_list()


def _check_flock_slice(example: Example, fact: dict, threads: int):
    N = example.matrix(fact["document"])
    alpha = normalize_alpha_selector(fact["alpha"], N.nrows)
    V = flock_slice(N, alpha)
    L = V.field
    expected = [[L.element(c) for c in col] for col in fact["span"]]
    return V.spans(expected), V.to_dict()["basis"]


def _check_flock_matroid(example: Example, fact: dict, threads: int):
    N = example.matrix(fact["document"])
    alpha = normalize_alpha_selector(fact["alpha"], N.nrows)
    wanted = Matroid(N.nrows, [_subset(example, N, b) for b in fact["expect"]])
    by_slice = flock_matroid(N, alpha, "slice")
    by_argmin = flock_matroid(N, alpha, "argmin")
    actual = {
        "slice": _bases_out(by_slice, example.index_base),
        "argmin": _bases_out(by_argmin, example.index_base),
    }
    return by_slice == wanted and by_argmin == wanted, actual


def _check_parallel_constant(example: Example, fact: dict, threads: int):
    A = example.matrix(fact["document"])
    extend = fact.get("extend")
    if extend is not None:
        row = _subset(example, A, [extend["row"]])[0]
        factor = A.ctx.parse_element(extend["factor"], "facts/extend/factor")
        A = parallel_extension(A, row, factor)
    i, j = (k - example.index_base for k in fact["pair"])
    actual = parallel_constant(lindstrom_valuation(A, threads=threads), i, j)
    return actual == fact["expect"], actual


def _check_annihilator(example: Example, fact: dict, threads: int):
    N = example.matrix(fact["document"])
    J = example.matrix(fact["against"]) if "against" in fact else perp(N)
    points = sample_points(N, fact.get("count", DEFAULT_SAMPLE_COUNT), fact.get("seed", DEFAULT_SEED))
    actual = verify_annihilator(J, points)
    return actual == fact["expect"], actual


_FACT_CHECKERS: Dict[str, Callable[[Example, dict, int], tuple]] = {
    "matroid": _check_matroid,
    "rank": _check_rank,
    "saturated": _check_saturated,
    "valuation": _check_valuation,
    "dual_span": _check_dual_span,
    "perp_span": _check_perp_span,
    "independent": _check_independent,
    "dependent": _check_dependent,
    "functional": _check_functional,
    "no_trivial_shift": _check_no_trivial_shift,
    "flock_slice": _check_flock_slice,
    "flock_matroid": _check_flock_matroid,
    "parallel_constant": _check_parallel_constant,
    "annihilator": _check_annihilator,
}


def _expected(fact: dict) -> Any:
    if "expect" in fact:
        return fact["expect"]
    if "span" in fact:
        return fact["span"]
    return None


def run_example(example_id: str, threads: int = 1, directory: Path = None) -> ExampleReport:
    """
    Recomputes every fact of an example.

    Parameters
    ----------
    example_id : str
        Registered id, see :func:`list_examples`.
    threads : int
        Passed to the Lindström valuation; results do not depend on it.
    """
    example = load_example(example_id, directory)
    report = ExampleReport(example.id, example.title)
    for n, fact in enumerate(example.facts):
        kind = fact["kind"]
        passed, actual = _FACT_CHECKERS[kind](example, fact, threads)
        logger.debug(f"{example.id} fact {n} ({kind} on {fact.get('document')}): passed={passed}, actual={actual}")
        report.results.append(
            FactResult(
                kind=kind,
                document=fact.get("document", ""),
                provenance=fact["provenance"],
                passed=bool(passed),
                expected=_expected(fact),
                actual=actual,
                note=fact.get("note"),
            )
        )
    logger.info(f"example {example.id}: {len(report.results) - len(report.failed)}/{len(report.results)} facts hold")
    return report
