"""Dense symmetric spectra, graph energy, and cospectrality tests.

The production eigensolver delegates to LAPACK (numpy.linalg.eigvalsh); a
self-contained cyclic Jacobi solver is kept alongside as an independent
cross-check. Energy is the sum of absolute adjacency eigenvalues.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

SYMMETRY_TOLERANCE = 1e-12
MERGE_TOLERANCE = 1e-7

JACOBI_MAX_SWEEPS = 100
JACOBI_RELATIVE_THRESHOLD = 1e-12


def verification_tolerance(order: int) -> float:
    """Absolute tolerance for energy/spectrum comparisons at a given order.

    Eigenvalue perturbations scale with the matrix norm, which scales with
    order here, so the tolerance is order * 1e-10 with a floor of 1e-8.
    """
    return max(1e-8, order * 1e-10)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues sorted in descending order.

    `merge_tolerance` controls how close two values must be to count as one
    eigenvalue when reporting multiplicities; the raw values are kept so that
    merging never changes energy sums.
    """

    values: np.ndarray
    merge_tolerance: float = MERGE_TOLERANCE

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size < 1:
            raise ValueError("spectrum needs a nonempty 1-d value array")
        if self.merge_tolerance <= 0:
            raise ValueError("merge_tolerance must be positive")
        v = np.sort(v)[::-1].copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size

    def energy(self) -> float:
        """Sum of absolute eigenvalues."""
        return float(np.abs(self.values).sum())

    def multiplicities(self) -> list[tuple[float, int]]:
        """Eigenvalues coalesced within merge_tolerance, with counts."""
        groups: list[tuple[float, int]] = []
        head = float(self.values[0])
        count = 0
        for v in self.values:
            v = float(v)
            if abs(v - head) <= self.merge_tolerance:
                count += 1
            else:
                groups.append((head, count))
                head, count = v, 1
        groups.append((head, count))
        return groups

    def matches(self, other: "Spectrum", tolerance: float) -> bool:
        """True iff both spectra have equal length and agree elementwise."""
        if len(self) != len(other):
            return False
        return bool(np.max(np.abs(self.values - other.values)) <= tolerance)


def _check_square_symmetric(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix dimension must be >= 1")
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOLERANCE:
        raise ValueError(
            f"matrix is not symmetric within {SYMMETRY_TOLERANCE} entrywise"
        )
    return a


def eigenvalues_symmetric(matrix, merge_tolerance: float = MERGE_TOLERANCE) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    a = _check_square_symmetric(matrix)
    values = np.linalg.eigvalsh(a)
    return Spectrum(values[::-1], merge_tolerance)


def jacobi_eigenvalues(matrix, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues by cyclic Jacobi rotations, sorted descending.

    Sweeps over all off-diagonal pairs until the off-diagonal Frobenius norm
    falls below 1e-12 * (1 + ||A||_F). Raises RuntimeError if that has not
    happened after `max_sweeps` sweeps; convergence failure is never silent.

    This is the slow, self-contained reference path; use
    eigenvalues_symmetric for production work.
    """
    a = _check_square_symmetric(matrix).copy()
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    threshold = JACOBI_RELATIVE_THRESHOLD * (1.0 + np.linalg.norm(a))

    def off_norm() -> float:
        off = a - np.diag(np.diagonal(a))
        return float(np.linalg.norm(off))

    for _ in range(max_sweeps):
        if off_norm() <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # Givens rotation zeroing the (p, q) entry
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        if off_norm() > threshold:
            raise RuntimeError(
                f"Jacobi eigensolver did not converge within {max_sweeps} sweeps "
                f"(off-diagonal norm {off_norm():.3e}, threshold {threshold:.3e})"
            )
    return np.sort(np.diagonal(a))[::-1].copy()


def adjacency_spectrum(g: Graph, merge_tolerance: float = MERGE_TOLERANCE) -> Spectrum:
    """Spectrum of the adjacency matrix of g."""
    return eigenvalues_symmetric(g.adjacency.astype(np.float64), merge_tolerance)


def energy(g: Graph) -> float:
    """Graph energy: sum of absolute adjacency eigenvalues.

    Zero exactly when the graph has no edges.
    """
    return adjacency_spectrum(g).energy()


def structured_spectrum(coefficients, base: Spectrum) -> Spectrum:
    """Spectrum of a Kronecker product from its factor spectra.

    `coefficients` may be a CoefficientMatrix (eigensolved directly), a
    Spectrum, or a plain array of eigenvalues; the result is the multiset of
    all pairwise products with `base`, sorted descending.
    """
    if isinstance(coefficients, Spectrum):
        mu = coefficients.values
    elif hasattr(coefficients, "entries"):
        mu = eigenvalues_symmetric(coefficients.entries).values
    else:
        mu = np.asarray(coefficients, dtype=np.float64)
        if mu.ndim == 2:
            mu = eigenvalues_symmetric(mu).values
    products = np.multiply.outer(mu, base.values).ravel()
    return Spectrum(products, base.merge_tolerance)


def are_cospectral(a: Graph, b: Graph, tolerance: float | None = None) -> bool:
    """True iff both graphs have the same order and elementwise-equal spectra.

    The default tolerance is verification_tolerance of the larger order.
    """
    if a.order != b.order:
        return False
    if tolerance is None:
        tolerance = verification_tolerance(max(a.order, b.order))
    elif tolerance <= 0:
        raise ValueError("tolerance must be positive")
    return adjacency_spectrum(a).matches(adjacency_spectrum(b), tolerance)
