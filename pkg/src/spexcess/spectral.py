"""Eigendecomposition and per-vertex spectral data.

The full symmetric eigendecomposition is computed with cyclic-by-row Jacobi
rotations (guaranteed symmetry, adequate at the dense scale this package
targets).  Eigenvalues are then grouped into distinct classes, the Perron
vector is extracted in both normalizations (alpha with ||alpha||^2 = n, nu
with minimum entry 1), spectral projectors E_i are assembled from eigenvector
outer products, and local spectra are read off their diagonals:
m_u(lambda_i) = (E_i)_{uu}.

The one genuinely delicate tolerance is ``presence_tol``: local multiplicities
below it are treated as exact zeros, which determines d_u (the number of
nonzero local eigenvalues besides lambda_0) and hence which vertices count as
extremal (ecc_u = d_u).  Raw m_u values are always kept alongside the derived
verdicts so they can be audited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, NonPositiveEigenvectorError
from ._util import readonly as _readonly
from .graphs import DistanceData, Graph

DEFAULT_EIGEN_TOL = 1e-12
DEFAULT_GROUPING_TOL = 1e-7
DEFAULT_PRESENCE_TOL = 1e-9
MAX_SWEEPS = 30


def jacobi_eigh(a: np.ndarray, tol: float = DEFAULT_EIGEN_TOL,
                max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi.

    Sweeps run until the off-diagonal Frobenius norm drops below
    ``tol * ||a||_F``; raises ConvergenceError if the sweep cap is hit first.
    Returns (eigenvalues, eigenvectors) with eigenvalues descending and
    orthonormal eigenvectors in the columns.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("jacobi_eigh expects a symmetric square matrix")
    v = np.eye(n)
    norm = np.linalg.norm(a)
    if norm == 0.0 or n == 1:
        return _sorted_eigh(np.diag(a).copy(), v)
    offdiag = ~np.eye(n, dtype=bool)  # direct norm; ||A||^2 - ||diag||^2 cancels
    converged = False
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a[offdiag]))
        if off <= tol * norm:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) * 1e292 < abs(diff):
                    # rotation angle underflows; annihilating directly is exact
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = diff / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    if not converged:
        off = float(np.linalg.norm(a[offdiag]))
        if off > tol * norm:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal {off:.3e} > {tol * norm:.3e})"
            )
    return _sorted_eigh(np.diag(a).copy(), v)


def _sorted_eigh(w: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    # deterministic sign: first non-negligible component of each vector positive
    for k in range(v.shape[1]):
        col = v[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-8 * np.abs(col).max())
        if nz.size and col[nz[0]] < 0:
            v[:, k] = -col
    return w, v


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (descending) with multiplicities and eigenvectors.

    ``classes[i]`` indexes the eigenvector columns belonging to lambda_i.
    """

    lambdas: np.ndarray
    mults: np.ndarray
    eigenvalues: np.ndarray
    vectors: np.ndarray
    classes: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def d(self) -> int:
        return len(self.lambdas) - 1

    @property
    def lambda0(self) -> float:
        return float(self.lambdas[0])


def eigendecompose(g: Graph, tol: float = DEFAULT_EIGEN_TOL,
                   grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Spectrum of a connected graph, with eigenvalues grouped into classes.

    Two consecutive eigenvalues land in the same class when they differ by at
    most ``grouping_tol * max(1, lambda_0)``; adjacency spectra of small
    graphs have gaps far above Jacobi error, so the default is safe.
    """
    w, v = jacobi_eigh(np.asarray(g.adjacency, dtype=float), tol=tol)
    gap = grouping_tol * max(1.0, abs(w[0]))
    classes = []
    start = 0
    for k in range(1, len(w) + 1):
        if k == len(w) or w[k - 1] - w[k] > gap:
            classes.append(np.arange(start, k))
            start = k
    lambdas = np.array([w[c].mean() for c in classes])
    mults = np.array([len(c) for c in classes], dtype=np.int64)
    return Spectrum(
        lambdas=_readonly(lambdas),
        mults=_readonly(mults),
        eigenvalues=_readonly(w),
        vectors=_readonly(v),
        classes=tuple(_readonly(c) for c in classes),
    )


@dataclass(frozen=True)
class PerronWeights:
    """The positive eigenvector of lambda_0 in both normalizations.

    ``alpha`` has ||alpha||^2 = n, ``nu`` has minimum component 1; the map
    rho sends u to the weighted coordinate vector alpha_u * e_u, so the
    squared norm of rho over a vertex subset is the sum of alpha_u^2.
    """

    alpha: np.ndarray
    nu: np.ndarray

    @property
    def n(self) -> int:
        return len(self.alpha)

    def rho(self, u: int) -> np.ndarray:
        vec = np.zeros(self.n)
        vec[u] = self.alpha[u]
        return vec

    def rho_norm_sq(self, subset) -> float:
        return float(np.sum(self.alpha[np.asarray(subset, dtype=np.int64)] ** 2))


def perron_weights(spec: Spectrum, pos_tol: float = 1e-10) -> PerronWeights:
    """Perron vector from the top eigenclass (requires multiplicity 1)."""
    if spec.mults[0] != 1:
        raise NonPositiveEigenvectorError(
            f"top eigenvalue has multiplicity {spec.mults[0]}; check grouping tolerance"
        )
    v0 = spec.vectors[:, spec.classes[0][0]].copy()
    if v0[np.argmax(np.abs(v0))] < 0:
        v0 = -v0
    alpha = math.sqrt(spec.n) * v0 / np.linalg.norm(v0)
    if np.any(alpha <= pos_tol):
        raise NonPositiveEigenvectorError(
            f"Perron vector has entries <= {pos_tol}: min={alpha.min():.3e}"
        )
    nu = alpha / alpha.min()
    return PerronWeights(alpha=_readonly(alpha), nu=_readonly(nu))


@dataclass(frozen=True)
class Idempotents:
    """Spectral projectors E_0..E_d onto the eigenspaces, as dense matrices."""

    lambdas: np.ndarray
    matrices: tuple[np.ndarray, ...]


def idempotents(spec: Spectrum) -> Idempotents:
    """E_i = V_i V_i^T from the orthonormal eigenvectors of class i.

    This beats the Lagrange product formula (1/phi_i) prod_{j != i}(A -
    lambda_j I) numerically; agreement between the two is asserted in tests.
    """
    mats = []
    for cls in spec.classes:
        vi = spec.vectors[:, cls]
        e = vi @ vi.T
        mats.append(_readonly((e + e.T) / 2.0))
    return Idempotents(lambdas=spec.lambdas, matrices=tuple(mats))


@dataclass(frozen=True)
class LocalSpectrum:
    """Local multiplicities of one vertex and the derived extremality data.

    ``local_mults[i] = (E_i)_{uu}``, nonnegative and summing to 1 over i;
    ``support`` holds the indices with mass above the presence threshold,
    and ``du`` counts them excluding lambda_0.
    """

    vertex: int
    local_mults: np.ndarray
    support: np.ndarray
    du: int
    eccentricity: int
    is_extremal: bool

    def local_eigenvalues(self, spec: Spectrum) -> np.ndarray:
        return spec.lambdas[self.support]


def local_spectrum(u: int, idem: Idempotents, dd: DistanceData,
                   presence_tol: float = DEFAULT_PRESENCE_TOL) -> LocalSpectrum:
    """Local spectrum of vertex u; membership decided by ``presence_tol``."""
    m = np.array([e[u, u] for e in idem.matrices])
    m = np.where(m < 0, 0.0, m)  # clip numerical noise
    support = np.flatnonzero(m > presence_tol)
    if 0 not in support:
        raise NonPositiveEigenvectorError(
            f"vertex {u} has no lambda_0 mass ({m[0]:.3e}); numerical failure"
        )
    du = len(support) - 1
    ecc = int(dd.ecc[u])
    return LocalSpectrum(
        vertex=u,
        local_mults=_readonly(m),
        support=_readonly(support),
        du=du,
        eccentricity=ecc,
        is_extremal=(ecc == du),
    )


def local_spectra(idem: Idempotents, dd: DistanceData,
                  presence_tol: float = DEFAULT_PRESENCE_TOL) -> tuple[LocalSpectrum, ...]:
    return tuple(local_spectrum(u, idem, dd, presence_tol) for u in range(dd.n))
