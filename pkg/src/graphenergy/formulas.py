"""Closed-form energy factors and coefficient-matrix spectra.

These are the analytic counterparts of the brute-force eigensolver: every
operator graph's energy is a fixed multiple of the base graph's energy, and
the multiplier comes from the coefficient matrix's spectrum. All values are
evaluated in floating point; downstream comparisons are tolerance-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import ShadowSplitParams, SplitParams
from .spectral import MERGE_TOLERANCE, Spectrum


@dataclass(frozen=True)
class EnergyPrediction:
    """A closed-form energy statement: multiplier applied to a base energy."""

    scale_factor: float
    source: str
    parameters: dict

    def energy(self, base_energy: float) -> float:
        return self.scale_factor * base_energy


def split_energy_factor(p: int, q: int) -> float:
    """Energy multiplier of the generalized splitting operator: p - 1 + sqrt(1 + 4pq)."""
    SplitParams(p, q)
    return p - 1 + math.sqrt(1 + 4 * p * q)


def shadow_split_energy_factor(c: int, k: int) -> float:
    """Energy multiplier of the shadow-splitting operator: sqrt(c^2 + 4ck)."""
    ShadowSplitParams(c, k)
    return math.sqrt(c * c + 4 * c * k)


def split_coefficient_spectrum(p: int, q: int, merge_tolerance: float = MERGE_TOLERANCE) -> Spectrum:
    """Spectrum of the splitting coefficient matrix, in closed form.

    Eigenvalue 1 with multiplicity p-1, eigenvalue 0 with multiplicity q-1,
    and the two roots (1 +- sqrt(1 + 4pq)) / 2.
    """
    SplitParams(p, q)
    root = math.sqrt(1 + 4 * p * q)
    values = [1.0] * (p - 1) + [0.0] * (q - 1) + [(1 + root) / 2, (1 - root) / 2]
    return Spectrum(np.array(values), merge_tolerance)


def shadow_coefficient_spectrum(c: int, k: int, merge_tolerance: float = MERGE_TOLERANCE) -> Spectrum:
    """Spectrum of the shadow-splitting coefficient matrix, in closed form.

    The matrix has rank 2: c + k - 2 zero eigenvalues plus the two roots
    (c +- sqrt(c^2 + 4ck)) / 2 of its quotient.
    """
    ShadowSplitParams(c, k)
    root = math.sqrt(c * c + 4 * c * k)
    values = [0.0] * (c + k - 2) + [(c + root) / 2, (c - root) / 2]
    return Spectrum(np.array(values), merge_tolerance)


def known_energy(family: str, *params: float) -> float:
    """Closed-form energies and multipliers of the standard families.

    - "complete" n           -> 2(n - 1)
    - "complete-bipartite" m n -> 2 sqrt(mn)
    - "shadow" m             -> m, the multiplier applied to the base energy
    - "kron" e1 e2           -> e1 * e2, energy of a Kronecker product from
                                its factor energies
    """
    if family == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return 2.0 * (n - 1)
    if family == "complete-bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete bipartite graph needs part sizes >= 1")
        return 2.0 * math.sqrt(m * n)
    if family == "shadow":
        (m,) = params
        if m < 1:
            raise ValueError("shadow multiplicity must be >= 1")
        return float(m)
    if family == "kron":
        e1, e2 = params
        return e1 * e2
    raise ValueError(f"unknown energy family {family!r}")


def quotient_matrix(matrix, partition) -> np.ndarray:
    """Quotient of a matrix under an equitable partition.

    `partition` is a list of index blocks covering every row exactly once.
    The partition is equitable when, within each block pair, every row of the
    block has the same sum; those common sums form the quotient. Row sums
    must match exactly (the matrices used here are integral), otherwise a
    ValueError is raised naming the offending block pair.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("quotient needs a square matrix")
    blocks = [list(b) for b in partition]
    flat = sorted(i for b in blocks for i in b)
    if flat != list(range(m.shape[0])):
        raise ValueError("partition must cover every index exactly once")
    k = len(blocks)
    q = np.empty((k, k), dtype=np.float64)
    for bi, rows in enumerate(blocks):
        for bj, cols in enumerate(blocks):
            sums = m[np.ix_(rows, cols)].sum(axis=1)
            if np.any(sums != sums[0]):
                raise ValueError(
                    f"partition is not equitable: block pair ({bi}, {bj}) has "
                    f"row sums {sorted(set(sums.tolist()))}"
                )
            q[bi, bj] = sums[0]
    return q


def quotient_matrix_spectrum(matrix, partition, merge_tolerance: float = MERGE_TOLERANCE) -> Spectrum:
    """Spectrum of the quotient under an equitable partition.

    Every returned eigenvalue also appears in the full spectrum of `matrix`.
    The quotient is generally not symmetric, but for an equitable partition
    of a symmetric matrix its eigenvalues are real.
    """
    q = quotient_matrix(matrix, partition)
    values = np.linalg.eigvals(q)
    imag_bound = 1e-9 * (1.0 + np.linalg.norm(q))
    if np.max(np.abs(values.imag), initial=0.0) > imag_bound:
        raise ValueError("quotient spectrum is not real; input was not symmetric-equitable")
    return Spectrum(np.sort(values.real)[::-1], merge_tolerance)
