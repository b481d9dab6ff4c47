"""Dense numerical kernels: centering, PCA, cosine, Pearson correlation.

PCA is backed by a cyclic Jacobi eigensolver rather than a library call so
that library eigensolvers stay available as an independent oracle in tests.
All computation is float64.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from genbias.errors import DegenerateDataError

# Jacobi sweep converges when every off-diagonal drops below this fraction
# of the Frobenius norm of the input matrix.
JACOBI_TOL = 1e-12
_MAX_SWEEPS = 100


@dataclass(frozen=True)
class PcaResult:
    """Top-k principal directions with their variance shares.

    components[i] is a unit vector; components are pairwise orthogonal and
    ordered by non-increasing explained variance. explained_ratio is each
    eigenvalue divided by the total variance of the (centered) cloud, so the
    ratios of a truncated decomposition sum to at most 1.
    """

    components: np.ndarray  # (k, d)
    explained_variance: np.ndarray  # (k,)
    explained_ratio: np.ndarray  # (k,)


def _as_matrix(vectors) -> np.ndarray:
    arr = np.asarray(vectors, dtype=float)
    if arr.ndim != 2:
        raise ValueError("expected a list of equal-length vectors (ragged or scalar input)")
    if arr.shape[0] == 0:
        raise ValueError("empty input")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite component in input vectors")
    return arr


def mean_center(vectors) -> tuple[np.ndarray, np.ndarray]:
    """Subtract the column mean; returns (centered vectors, mean vector)."""
    arr = _as_matrix(vectors)
    mean = arr.mean(axis=0)
    return arr - mean, mean


def jacobi_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvectors in columns, in no
    particular order. Convergence: max |off-diagonal| < JACOBI_TOL * ||A||_F.
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    v = np.eye(n)
    if n == 1:
        return np.array([a[0, 0]]), v
    fro = np.linalg.norm(a, "fro")
    if fro == 0.0:
        return np.zeros(n), v
    thresh = JACOBI_TOL * fro

    iu = np.triu_indices(n, k=1)
    for _ in range(_MAX_SWEEPS):
        if np.max(np.abs(a[iu])) < thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < thresh:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J = I except J[pp]=J[qq]=c, J[pq]=s, J[qp]=-s
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi eigensolver did not converge")
    return np.diag(a).copy(), v


def pca(vectors, k: int) -> PcaResult:
    """Top-k PCA of the sample covariance (divisor n) of mean-centered input.

    Eigenvector signs are fixed so that the largest-magnitude component of
    each direction is positive, making the result deterministic across runs
    and implementations.
    """
    arr = _as_matrix(vectors)
    n, d = arr.shape
    if n < 2:
        raise ValueError("PCA requires at least 2 vectors")
    if not (1 <= k <= min(n, d)):
        raise ValueError(f"k={k} out of range, must be in [1, {min(n, d)}]")

    centered, _ = mean_center(arr)
    cov = centered.T @ centered / n
    total = float(np.trace(cov))
    if total <= 0.0:
        raise DegenerateDataError("degenerate point cloud (zero total variance)")

    eigvals, eigvecs = jacobi_eigh(cov)
    order = np.argsort(-eigvals, kind="stable")
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    # covariance is PSD; clamp negative rounding dust
    eigvals = np.maximum(eigvals, 0.0)

    components = np.empty((k, d))
    for i in range(k):
        vec = eigvecs[:, i]
        if vec[np.argmax(np.abs(vec))] < 0.0:
            vec = -vec
        components[i] = vec
    variances = eigvals[:k].copy()
    return PcaResult(
        components=components,
        explained_variance=variances,
        explained_ratio=variances / total,
    )


def cosine(a, b) -> float:
    """Cosine of the angle between two non-zero vectors, clipped to [-1, 1]."""
    av = np.asarray(a, dtype=float)
    bv = np.asarray(b, dtype=float)
    if av.shape != bv.shape or av.ndim != 1:
        raise ValueError("cosine requires two 1-D vectors of equal dimension")
    na = float(np.linalg.norm(av))
    nb = float(np.linalg.norm(bv))
    if na == 0.0 or nb == 0.0:
        raise ValueError("cosine undefined for zero-norm input")
    return float(np.clip(np.dot(av, bv) / (na * nb), -1.0, 1.0))


def pearson(x, y) -> float:
    """Sample Pearson correlation of two equal-length sequences."""
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.ndim != 1 or yv.ndim != 1 or xv.shape != yv.shape:
        raise ValueError("pearson requires two 1-D sequences of equal length")
    if xv.size < 2:
        raise ValueError("pearson requires at least 2 samples")
    xc = xv - xv.mean()
    yc = yv - yv.mean()
    sx = float(np.sqrt(np.sum(xc * xc)))
    sy = float(np.sqrt(np.sum(yc * yc)))
    if sx == 0.0 or sy == 0.0:
        raise DegenerateDataError("zero variance input to pearson")
    return float(np.clip(np.dot(xc, yc) / (sx * sy), -1.0, 1.0))
