"""Compressive-sensing primitives: seeded random projections, the
compressed-domain feature operator, and inner-product distortion checks.

Randomness: the projection for a config is drawn from
``np.random.default_rng(cfg.seed)``. Distortion trials draw their test vectors
from ``np.random.SeedSequence(cfg.seed).spawn(trials)``, one child per trial,
so each trial is reproducible on its own and can run in any order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SingularProjection

SINGULAR_TOL = 1e-10


@dataclass(frozen=True)
class CsConfig:
    n: int
    m: int
    seed: int = 0

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise DimensionError("n and m must be integers")
        if not 1 <= self.m <= self.n:
            raise DimensionError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")

    @classmethod
    def from_alpha(cls, n: int, alpha: float, seed: int = 0) -> CsConfig:
        if alpha < 1:
            raise DimensionError("compression ratio must be >= 1")
        return cls(n, max(1, round(n / alpha)), seed)

    @property
    def alpha(self) -> float:
        return self.n / self.m


def make_projection(cfg: CsConfig, orthonormal: bool = False) -> np.ndarray:
    """Return the m x n measurement matrix for ``cfg``.

    Entries are i.i.d. N(0, 1/m), so E[Phi^T Phi] = I and inner products are
    preserved in expectation. With ``orthonormal=True`` the rows are
    orthogonalised (QR) and scaled by sqrt(n/m); for m == n that gives an
    exactly orthogonal matrix.
    """
    rng = np.random.default_rng(cfg.seed)
    phi = rng.normal(0.0, 1.0 / np.sqrt(cfg.m), size=(cfg.m, cfg.n))
    if orthonormal:
        q, r = np.linalg.qr(phi.T)
        # sign fix keeps the result a deterministic function of phi
        q = q * np.sign(np.diag(r))
        phi = q.T * np.sqrt(cfg.n / cfg.m)
    return phi


def compress(phi: np.ndarray, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.shape[0] != phi.shape[1]:
        raise DimensionError(f"signal length {x.shape} does not match projection width {phi.shape[1]}")
    return phi @ x


def derive_compressed_operator(h, phi: np.ndarray) -> np.ndarray:
    """Map a Nyquist-domain feature matrix H (p x n) into the compressed domain.

    Returns H_hat = H Phi^T (Phi Phi^T)^-1, so that H_hat @ (Phi x) equals H
    applied to the minimum-norm signal consistent with the measurements.
    """
    h = np.atleast_2d(np.asarray(h, dtype=float))
    if h.shape[1] != phi.shape[1]:
        raise DimensionError(f"feature matrix has {h.shape[1]} columns, projection has {phi.shape[1]}")
    sv = np.linalg.svd(phi, compute_uv=False)
    if sv[-1] <= SINGULAR_TOL * sv[0]:
        raise SingularProjection("Phi Phi^T is rank-deficient")
    gram = phi @ phi.T
    # gram is symmetric, so solving gram @ X = phi @ h.T gives X = H_hat^T
    return np.linalg.solve(gram, phi @ h.T).T


@dataclass(frozen=True)
class DistortionStats:
    mean: float
    p95: float
    errors: tuple[float, ...]


def sparse_vector(rng: np.random.Generator, n: int, k: int) -> np.ndarray:
    x = np.zeros(n)
    support = rng.choice(n, size=k, replace=False)
    x[support] = rng.standard_normal(k)
    return x


def inner_product_distortion(cfg: CsConfig, trials: int, k: int,
                             orthonormal: bool = False) -> DistortionStats:
    """Relative error |<Phi x, Phi y> - <x, y>| / (|x| |y|) over random k-sparse pairs.

    The error is normalised by the vector norms rather than <x, y>, which is
    often zero for sparse vectors with disjoint supports.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 1 <= k <= cfg.n:
        raise ValueError(f"sparsity k must lie in [1, {cfg.n}]")
    phi = make_projection(cfg, orthonormal=orthonormal)
    errors = []
    for child in np.random.SeedSequence(cfg.seed).spawn(trials):
        rng = np.random.default_rng(child)
        x = sparse_vector(rng, cfg.n, k)
        y = sparse_vector(rng, cfg.n, k)
        exact = x @ y
        approx = (phi @ x) @ (phi @ y)
        errors.append(abs(approx - exact) / (np.linalg.norm(x) * np.linalg.norm(y)))
    arr = np.asarray(errors)
    return DistortionStats(float(arr.mean()), float(np.percentile(arr, 95)), tuple(errors))
