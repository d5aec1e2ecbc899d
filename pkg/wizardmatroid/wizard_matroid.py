# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later


from pathlib import Path
from typing import List, Mapping, Optional, Tuple, Union

from wizardmatroid.utils.documents import parse_matrix_document, serialize_matrix
from wizardmatroid.utils.errors.errors_handle import handle_errors
from wizardmatroid.utils.selector import Selector, normalize_alpha_selector
from wizardmatroid.utils.settings import (
    DEFAULT_RADIUS,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    default_threads,
)
from wizardmatroid.wizard_corpus.corpus import ExampleReport, list_examples, run_example
from wizardmatroid.wizard_groups.groups import GroupPoint, sample_points, verify_annihilator
from wizardmatroid.wizard_linalg import modules
from wizardmatroid.wizard_linalg.matrices import ModuleMatrix, QMatrix
from wizardmatroid.wizard_matroids import flock, suite
from wizardmatroid.wizard_matroids.matroid import Matroid, matroid_from_matrix
from wizardmatroid.wizard_matroids.valuated import ValuatedMatroid, lindstrom_valuation

MatrixSource = Union[str, bytes, Path, Mapping, ModuleMatrix, QMatrix]


class WizardMatroid:
    def __init__(self):
        self._parse = parse_matrix_document

    def _matrix(self, source: MatrixSource) -> Union[ModuleMatrix, QMatrix]:
        if isinstance(source, (ModuleMatrix, QMatrix)):
            return source
        return self._parse(source)

    @staticmethod
    def _threads(threads: Optional[int]) -> int:
        return default_threads() if threads is None else threads

    # ----------------------------------------------------------------------
    # Documents
    # ----------------------------------------------------------------------

    @handle_errors
    def read_matrix(self, source: MatrixSource) -> Union[ModuleMatrix, QMatrix]:
        """
        Parses and validates a MatrixDocument.

        Args:
            source (Union[str, bytes, Path, Mapping]):
                A filesystem path, raw UTF-8 bytes, JSON text or an already decoded mapping.
                A parsed matrix is returned unchanged.

        Returns:
            ModuleMatrix | QMatrix: The matrix with its ring context; a ``QMatrix``
            when the document declares ``"domain": "fraction"``.

        Raises:
            DocumentReadError: If the source cannot be read or is not JSON.
            SchemaError: If the document breaks the MatrixDocument schema.
            InvariantViolationError: If an entry or the ring descriptor is inconsistent
                (reducible modulus, mixed-parity Hurwitz entry, non-prime p).

        Example:
            ```python
            import wizardmatroid as wm

            N = wm.read_matrix("kf.json")
            print(N.shape)   # (4, 2)
            ```
        """
        return self._matrix(source)

    @handle_errors
    def write_matrix(self, matrix: Union[ModuleMatrix, QMatrix], index_base: int = 1, name: Optional[str] = None) -> dict:
        """
        Serializes a matrix back into a MatrixDocument mapping.

        Args:
            matrix (ModuleMatrix | QMatrix): The matrix to serialize.
            index_base (int): ``index_base`` recorded in the document (0 or 1).
            name (Optional[str]): Optional document name.

        Returns:
            dict: A mapping that validates against the MatrixDocument schema.
        """
        return serialize_matrix(matrix, index_base, name)

    # ----------------------------------------------------------------------
    # Matroids and valuations
    # ----------------------------------------------------------------------

    @handle_errors
    def matroid(self, source: MatrixSource) -> Matroid:
        """
        The row matroid: a set of rows is independent when the rows are left-independent over Q.

        Args:
            source (MatrixSource): Matrix or MatrixDocument source.

        Returns:
            Matroid: Bases as sorted 0-based tuples.
        """
        return matroid_from_matrix(self._matrix(source))

    @handle_errors
    def lindstrom_valuation(self, source: MatrixSource, threads: Optional[int] = None) -> ValuatedMatroid:
        """
        The Lindström valuation μ(B) = v(det A[B]) on the bases of the row matroid.

        Args:
            source (MatrixSource): Matrix or MatrixDocument source.
            threads (Optional[int]): Worker count for basis enumeration. Defaults to
                ``WIZARDMATROID_THREADS`` (1 when unset). Results do not depend on it.

        Returns:
            ValuatedMatroid: The matroid together with μ.
        """
        return lindstrom_valuation(self._matrix(source), threads=self._threads(threads))

    # ----------------------------------------------------------------------
    # Modules
    # ----------------------------------------------------------------------

    @handle_errors
    def dual_module(self, source: MatrixSource) -> ModuleMatrix:
        """
        The dual module N' = τ((NQ)^⊥) ∩ 𝔈ⁿ, in column Hermite form.

        Args:
            source (MatrixSource): A right module.

        Returns:
            ModuleMatrix: A saturated right module whose matroid is the dual matroid.

        Raises:
            UnsupportedRingError: On a context without the anti-involution τ.
            ValidationError: If ``source`` is a left module.
        """
        return modules.dual_module(self._matrix(source))

    @handle_errors
    def saturate(self, source: MatrixSource) -> ModuleMatrix:
        """
        Saturation N^sat = NQ ∩ 𝔈ⁿ.

        Args:
            source (MatrixSource): A right or left module.

        Returns:
            ModuleMatrix: Hermite-form generators of the saturation.
        """
        return modules.saturate(self._matrix(source))

    @handle_errors
    def perp(self, source: MatrixSource) -> ModuleMatrix:
        """
        Orthogonal complement under ⟨φ, ψ⟩ = Σ φ_i ψ_i; swaps right and left modules.

        Args:
            source (MatrixSource): A right or left module.

        Returns:
            ModuleMatrix: The saturated complement of rank n − rank N.
        """
        return modules.perp(self._matrix(source))

    # ----------------------------------------------------------------------
    # Flocks
    # ----------------------------------------------------------------------

    @handle_errors
    def flock_slice(self, source: MatrixSource, alpha: Selector) -> flock.FlockSlice:
        """
        The flock subspace V_α ⊆ Lⁿ over the residue field L.

        Args:
            source (MatrixSource): A right module over ℤ or K[F].
            alpha (Selector): Integer vector of length n, as a list or as ``"0,0,-1,1"`` text.

        Returns:
            FlockSlice: A basis of V_α and its dimension.

        Raises:
            UnsupportedRingError: On Hurwitz modules.
            NormalizationLimitError: If the normalisation loop exceeds its cap.
        """
        N = self._matrix(source)
        return flock.flock_slice(N, normalize_alpha_selector(alpha, N.nrows))

    @handle_errors
    def flock_matroid(self, source: MatrixSource, alpha: Selector, method: str = "slice") -> Matroid:
        """
        The matroid of V_α.

        Args:
            source (MatrixSource): A right module over ℤ or K[F].
            alpha (Selector): Integer vector of length n.
            method (str): ``"slice"`` reads the matroid off V_α; ``"argmin"`` takes the
                bases minimising μ(B) − Σ_{i∈B} α_i. Both agree.

        Returns:
            Matroid: The flock matroid at α.
        """
        N = self._matrix(source)
        return flock.flock_matroid(N, normalize_alpha_selector(alpha, N.nrows), method)

    @handle_errors
    def check_flock(
            self,
            source: MatrixSource,
            radius: int = DEFAULT_RADIUS,
            threads: Optional[int] = None,
    ) -> Tuple[flock.FlockReport, flock.FlockReport]:
        """
        Sweeps the box [−radius, radius]ⁿ checking the flock axioms and slice/valuation consistency.

        Args:
            source (MatrixSource): A right module over ℤ or K[F].
            radius (int): Half-width of the α box.
            threads (Optional[int]): Worker count for the sweep.

        Returns:
            tuple[FlockReport, FlockReport]: The axiom report and the consistency report.
        """
        N = self._matrix(source)
        threads = self._threads(threads)
        return (
            flock.check_flock_axioms(N, radius, threads),
            flock.check_flock_valuation_consistency(N, radius, threads),
        )

    # ----------------------------------------------------------------------
    # Group points
    # ----------------------------------------------------------------------

    @handle_errors
    def sample_points(
            self,
            source: MatrixSource,
            count: int = DEFAULT_SAMPLE_COUNT,
            seed: int = DEFAULT_SEED,
    ) -> List[GroupPoint]:
        """
        Seeded points of the subgroup attached to a right module.

        Args:
            source (MatrixSource): A right module over ℤ or K[F].
            count (int): Number of points.
            seed (int): Seed of the splitmix generator.

        Returns:
            list[GroupPoint]: Points in G_a over F_{p^{5k}} or in G_m over F_10007.
        """
        return sample_points(self._matrix(source), count, seed)

    @handle_errors
    def sample_verify(
            self,
            source: MatrixSource,
            annihilator: Optional[MatrixSource] = None,
            count: int = DEFAULT_SAMPLE_COUNT,
            seed: int = DEFAULT_SEED,
    ) -> bool:
        """
        Checks that a left module annihilates sampled points of a right module.

        Args:
            source (MatrixSource): The right module N whose points are sampled.
            annihilator (Optional[MatrixSource]): The left module J; defaults to perp(N).
            count (int): Number of points.
            seed (int): Seed of the splitmix generator.

        Returns:
            bool: True when every row of J vanishes on every point.

        Raises:
            UnsupportedRingError: On Hurwitz modules.
        """
        N = self._matrix(source)
        J = self._matrix(annihilator) if annihilator is not None else modules.perp(N)
        return verify_annihilator(J, sample_points(N, count, seed))

    # ----------------------------------------------------------------------
    # Corpus and invariant suite
    # ----------------------------------------------------------------------

    @handle_errors
    def list_examples(self, directory: Optional[Union[str, Path]] = None) -> List[str]:
        """
        Ids of the shipped examples.

        Args:
            directory (Optional[str | Path]): Data directory; defaults to
                ``WIZARDMATROID_DATA_DIR`` or the packaged corpus.

        Returns:
            list[str]: Sorted ids.
        """
        return list_examples(directory)

    @handle_errors
    def run_example(
            self,
            example_id: str,
            threads: Optional[int] = None,
            directory: Optional[Union[str, Path]] = None,
    ) -> ExampleReport:
        """
        Recomputes every fact of a shipped example.

        Args:
            example_id (str): One of :meth:`list_examples`.
            threads (Optional[int]): Worker count for valuations.
            directory (Optional[str | Path]): Data directory override.

        Returns:
            ExampleReport: Expected against actual per fact, with ``ok``.

        Raises:
            UnknownExampleError: If the id is not registered.
        """
        return run_example(example_id, self._threads(threads), directory)

    @handle_errors
    def check_module(
            self,
            source: MatrixSource,
            radius: int = DEFAULT_RADIUS,
            threads: Optional[int] = None,
    ) -> suite.ModuleReport:
        """
        Runs the invariant suite on a right module.

        Args:
            source (MatrixSource): A right module.
            radius (int): Flock sweep radius, used when the ring has a residue field.
            threads (Optional[int]): Worker count.

        Returns:
            ModuleReport: One entry per check, with ``ok``.

        Example:
            ```python
            import wizardmatroid as wm

            report = wm.check_module("kf.json", radius=1)
            assert report.ok
            ```
        """
        return suite.check_module(self._matrix(source), radius, self._threads(threads))
