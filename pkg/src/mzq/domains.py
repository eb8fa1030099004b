"""Domain descriptors for the weighted unit ball (d=1, 2) and the unit sphere S^2.

A domain bundles the manifold kind with the Jacobi exponent mu.  On the ball
the reference measure is the probability density b_d^mu (1-|x|^2)^(mu-1/2);
on the sphere it is surface measure normalized to total mass 1 (mu ignored).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lgamma, pi

import numpy as np

INTERVAL = "interval"
DISK = "disk"
SPHERE2 = "sphere2"

_KINDS = (INTERVAL, DISK, SPHERE2)

#: tolerance for membership checks (|x| <= 1 on the ball, |x| = 1 on the sphere)
POINT_TOL = 1e-12


@dataclass(frozen=True)
class Domain:
    kind: str
    mu: float = 0.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown domain kind {self.kind!r}; expected one of {_KINDS}")
        if not np.isfinite(self.mu) or self.mu < 0:
            raise ValueError(f"mu must be a finite real >= 0, got {self.mu}")

    @property
    def dim(self) -> int:
        """Manifold dimension d."""
        return 1 if self.kind == INTERVAL else 2

    @property
    def ambient_dim(self) -> int:
        """Number of coordinates a point carries."""
        return {INTERVAL: 1, DISK: 2, SPHERE2: 3}[self.kind]

    @property
    def is_ball(self) -> bool:
        return self.kind in (INTERVAL, DISK)

    @property
    def effective_dim(self) -> float:
        """Exponent governing Nikolskii/oversampling growth: d + 2*mu on the ball, d on the sphere."""
        return self.dim + 2.0 * self.mu if self.is_ball else float(self.dim)

    def to_json(self) -> dict:
        return {"kind": self.kind, "mu": self.mu}

    @staticmethod
    def from_json(obj: dict) -> "Domain":
        return Domain(kind=obj["kind"], mu=float(obj.get("mu", 0.0)))


def interval_ball(mu: float = 0.0) -> Domain:
    return Domain(INTERVAL, mu)


def disk_ball(mu: float = 0.0) -> Domain:
    return Domain(DISK, mu)


def sphere2() -> Domain:
    return Domain(SPHERE2, 0.0)


def weight_normalization(domain: Domain) -> float:
    """Normalizing constant b_d^mu making (1-|x|^2)^(mu-1/2) a probability density."""
    if not domain.is_ball:
        raise ValueError("weight normalization is only defined on the ball")
    d, mu = domain.dim, domain.mu
    # 1 / integral = Gamma(d/2 + mu + 1/2) / (pi^(d/2) Gamma(mu + 1/2))
    return float(np.exp(lgamma(d / 2 + mu + 0.5) - lgamma(mu + 0.5) - (d / 2) * np.log(pi)))


def as_points(domain: Domain, x) -> np.ndarray:
    """Coerce to a (k, ambient_dim) float array, validating membership within POINT_TOL."""
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    if pts.shape[-1] != domain.ambient_dim:
        raise ValueError(
            f"points for {domain.kind} must have {domain.ambient_dim} coordinates, got shape {pts.shape}"
        )
    norms = np.linalg.norm(pts, axis=-1)
    if domain.is_ball:
        if np.any(norms > 1.0 + POINT_TOL):
            raise ValueError(f"point outside the unit ball (|x| = {norms.max()})")
    else:
        if np.any(np.abs(norms - 1.0) > POINT_TOL):
            raise ValueError("point not on the unit sphere within tolerance")
    return pts


def lift(domain: Domain, points: np.ndarray) -> np.ndarray:
    """Embed points as unit vectors: ball points go to the upper hemisphere of S^d.

    The intrinsic metric becomes arccos of the Euclidean inner product of the
    lifted vectors, for every supported domain.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if not domain.is_ball:
        return pts
    sq = 1.0 - np.sum(pts * pts, axis=-1)
    last = np.sqrt(np.clip(sq, 0.0, None))
    return np.concatenate([pts, last[:, None]], axis=-1)


def metric(domain: Domain, x, y) -> np.ndarray | float:
    """Intrinsic distance: arccos(x.y + sqrt(1-|x|^2)sqrt(1-|y|^2)) on the ball,
    geodesic arccos(x.y) on the sphere.  Inputs broadcast over leading axes."""
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    scalar = xs.ndim == 1 and ys.ndim == 1
    lx = lift(domain, xs)
    ly = lift(domain, ys)
    dots = np.clip(np.sum(lx * ly, axis=-1), -1.0, 1.0)
    out = np.arccos(dots)
    return float(out[0]) if scalar else out


def ball_metric(x, y) -> np.ndarray | float:
    """Ball metric for raw coordinate arrays (dimension inferred from the last axis)."""
    xs = np.atleast_2d(np.asarray(x, dtype=float))
    ys = np.atleast_2d(np.asarray(y, dtype=float))
    scalar = np.asarray(x).ndim <= 1 and np.asarray(y).ndim <= 1
    ex = np.sqrt(np.clip(1.0 - np.sum(xs * xs, axis=-1), 0.0, None))
    ey = np.sqrt(np.clip(1.0 - np.sum(ys * ys, axis=-1), 0.0, None))
    dots = np.clip(np.sum(xs * ys, axis=-1) + ex * ey, -1.0, 1.0)
    out = np.arccos(dots)
    return float(out[0]) if scalar else out


def eigenvalue(domain: Domain, n: int) -> float:
    """Spectral eigenvalue of the degree-n orthogonal subspace: n(n+2*mu+d-1) on
    the ball, n(n+d-1) on the sphere.  Zero iff n = 0."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if domain.is_ball:
        return float(n * (n + 2.0 * domain.mu + domain.dim - 1))
    return float(n * (n + domain.dim - 1))


def weight_envelope(domain: Domain, n: int, x) -> np.ndarray | float:
    """Boundary-weight envelope (sqrt(1-|x|^2) + 1/n)^(2*mu); ball domains only."""
    if not domain.is_ball:
        raise ValueError("weight envelope is undefined on the sphere")
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim <= 1
    pts = np.atleast_2d(xs)
    root = np.sqrt(np.clip(1.0 - np.sum(pts * pts, axis=-1), 0.0, None))
    out = (root + 1.0 / n) ** (2.0 * domain.mu)
    return float(out[0]) if scalar else out


def weight_density(domain: Domain, points: np.ndarray) -> np.ndarray:
    """Value of the reference density: b_d^mu (1-|x|^2)^(mu-1/2) on the ball, 1 on the sphere."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if not domain.is_ball:
        return np.ones(pts.shape[0])
    b = weight_normalization(domain)
    return b * np.clip(1.0 - np.sum(pts * pts, axis=-1), 0.0, None) ** (domain.mu - 0.5)
