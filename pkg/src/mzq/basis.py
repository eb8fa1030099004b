"""Orthonormal bases, reproducing kernels, filtered kernels, and expansions.

Column convention: basis functions are ordered lexicographically by
(degree, within), with `within` starting at 1.  All evaluation routines share
this layout, so matrices built here are interchangeable across the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

import numpy as np

from .domains import Domain, as_points, eigenvalue
from .jacobi import disk_angular_norm, orthonormal_jacobi
from .sphharm import sphere_block


@dataclass(frozen=True, order=True)
class BasisIndex:
    degree: int
    within: int


def degree_dim(domain: Domain, n: int) -> int:
    """Dimension of the degree-n orthogonal subspace."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if domain.is_ball:
        return comb(n + domain.dim - 1, n)
    return 1 if n == 0 else 2 * n + 1


def space_dim(domain: Domain, max_degree: int) -> int:
    """Dimension of the full polynomial space of degree <= max_degree."""
    return sum(degree_dim(domain, n) for n in range(max_degree + 1))


def degree_offsets(domain: Domain, max_degree: int) -> np.ndarray:
    """Start offset of each degree block in the column layout (length max_degree+2)."""
    dims = [degree_dim(domain, n) for n in range(max_degree + 1)]
    return np.concatenate([[0], np.cumsum(dims)])


def basis_indices(domain: Domain, max_degree: int) -> list[BasisIndex]:
    out = []
    for n in range(max_degree + 1):
        out.extend(BasisIndex(n, k) for k in range(1, degree_dim(domain, n) + 1))
    return out


def check_index(domain: Domain, idx: BasisIndex) -> None:
    if idx.degree < 0 or not 1 <= idx.within <= degree_dim(domain, idx.degree):
        raise ValueError(f"basis index {idx} out of range for {domain.kind}")


def _interval_block(domain: Domain, max_degree: int, pts: np.ndarray) -> np.ndarray:
    vals = orthonormal_jacobi(domain.mu - 0.5, domain.mu - 0.5, max_degree, pts[:, 0])
    return np.ascontiguousarray(vals.T)


def _disk_block(domain: Domain, max_degree: int, pts: np.ndarray) -> np.ndarray:
    r2 = np.sum(pts * pts, axis=1)
    s = np.clip(2.0 * r2 - 1.0, -1.0, 1.0)
    r = np.sqrt(r2)
    theta = np.arctan2(pts[:, 1], pts[:, 0])
    offsets = degree_offsets(domain, max_degree)
    out = np.empty((pts.shape[0], offsets[-1]))
    r_m = np.ones(pts.shape[0])
    for m in range(max_degree + 1):
        if m > 0:
            r_m = r_m * r
        jmax = (max_degree - m) // 2
        radial = orthonormal_jacobi(domain.mu - 0.5, m, jmax, s)
        cm = disk_angular_norm(domain.mu, m)
        if m == 0:
            for j in range(jmax + 1):
                n = 2 * j
                out[:, offsets[n] + n] = radial[j]  # within = n+1 (last slot)
        else:
            ang_c = cm * r_m * np.cos(m * theta)
            ang_s = cm * r_m * np.sin(m * theta)
            for j in range(jmax + 1):
                n = m + 2 * j
                base = offsets[n] + 2 * j
                out[:, base] = radial[j] * ang_c
                out[:, base + 1] = radial[j] * ang_s
    return out


def eval_basis_block(domain: Domain, max_degree: int, points) -> np.ndarray:
    """Matrix of all basis values: rows are points, columns follow the
    (degree, within) layout.  Points must lie in the domain within tolerance."""
    pts = as_points(domain, points)
    if domain.kind == "interval":
        return _interval_block(domain, max_degree, pts)
    if domain.kind == "disk":
        return _disk_block(domain, max_degree, pts)
    return sphere_block(max_degree, pts)


def eval_basis(domain: Domain, idx: BasisIndex | tuple, x) -> float:
    """Single orthonormal basis function at a single point."""
    if not isinstance(idx, BasisIndex):
        idx = BasisIndex(*idx)
    check_index(domain, idx)
    block = eval_basis_block(domain, idx.degree, np.asarray(x, dtype=float).reshape(1, -1))
    col = degree_offsets(domain, idx.degree)[idx.degree] + idx.within - 1
    return float(block[0, col])


def reproducing_kernel(domain: Domain, n: int, x, y) -> float:
    """Kernel of the degree-n orthogonal subspace: sum_k phi_nk(x) phi_nk(y)."""
    bx = eval_basis_block(domain, n, np.asarray(x, dtype=float).reshape(1, -1))
    by = eval_basis_block(domain, n, np.asarray(y, dtype=float).reshape(1, -1))
    lo = degree_offsets(domain, n)[n]
    return float(np.dot(bx[0, lo:], by[0, lo:]))


# ---------------------------------------------------------------------------
# smooth spectral filter


def _bump(s: np.ndarray) -> np.ndarray:
    out = np.zeros_like(s)
    pos = s > 0
    out[pos] = np.exp(-1.0 / s[pos])
    return out


def _smooth_cutoff(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    out = np.zeros_like(t)
    out[t <= 1.0] = 1.0
    mid = (t > 1.0) & (t < 2.0)
    hi = _bump(2.0 - t[mid])
    lo = _bump(t[mid] - 1.0)
    out[mid] = hi / (hi + lo)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class FilterSpec:
    """Spectral cutoff eta: 1 on [0,1], 0 on [2,inf), smooth in between."""

    func: Callable = _smooth_cutoff

    def __call__(self, t):
        return self.func(t)


def default_filter() -> FilterSpec:
    return FilterSpec()


def filtered_kernel(domain: Domain, filt: FilterSpec, n: int, x, y) -> float:
    """Filtered kernel sum_{k=0}^{2n-1} eta(k/n) P_k(x, y)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nmax = 2 * n - 1
    bx = eval_basis_block(domain, nmax, np.asarray(x, dtype=float).reshape(1, -1))[0]
    by = eval_basis_block(domain, nmax, np.asarray(y, dtype=float).reshape(1, -1))[0]
    offsets = degree_offsets(domain, nmax)
    total = 0.0
    for k in range(nmax + 1):
        lo, hi = offsets[k], offsets[k + 1]
        total += float(filt(k / n)) * float(np.dot(bx[lo:hi], by[lo:hi]))
    return total


# ---------------------------------------------------------------------------
# expansions


@dataclass
class CoefficientVector:
    """Finite expansion f = sum c_nk phi_nk in the (degree, within) layout."""

    domain: Domain
    max_degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        expected = space_dim(self.domain, self.max_degree)
        if self.coeffs.shape != (expected,):
            raise ValueError(
                f"coefficient vector must have length {expected} for max_degree {self.max_degree}"
            )

    @staticmethod
    def from_index_map(domain: Domain, max_degree: int, values: dict) -> "CoefficientVector":
        offsets = degree_offsets(domain, max_degree)
        coeffs = np.zeros(offsets[-1])
        for key, v in values.items():
            idx = key if isinstance(key, BasisIndex) else BasisIndex(*key)
            check_index(domain, idx)
            if idx.degree > max_degree:
                raise ValueError(f"index degree {idx.degree} exceeds max_degree {max_degree}")
            coeffs[offsets[idx.degree] + idx.within - 1] = v
        return CoefficientVector(domain, max_degree, coeffs)

    def eval(self, points, chunk: int = 8192) -> np.ndarray:
        """Pointwise values via basis summation, chunked to bound memory."""
        pts = as_points(self.domain, points)
        out = np.empty(pts.shape[0])
        for lo in range(0, pts.shape[0], chunk):
            hi = min(lo + chunk, pts.shape[0])
            out[lo:hi] = eval_basis_block(self.domain, self.max_degree, pts[lo:hi]) @ self.coeffs
        return out

    def as_callable(self) -> Callable[[np.ndarray], np.ndarray]:
        return lambda pts: self.eval(pts)

    def degree_slice(self, n: int) -> np.ndarray:
        offsets = degree_offsets(self.domain, self.max_degree)
        return self.coeffs[offsets[n]:offsets[n + 1]]

    @property
    def constant_coefficient(self) -> float:
        return float(self.coeffs[0])

    def l2_norm(self) -> float:
        """Norm in the weighted L2 space (Parseval)."""
        return float(np.linalg.norm(self.coeffs))

    def tail_energy(self, n: int) -> float:
        """Squared L2 norm of all components of degree > n."""
        if n >= self.max_degree:
            return 0.0
        offsets = degree_offsets(self.domain, self.max_degree)
        return float(np.sum(self.coeffs[offsets[n + 1]:] ** 2))

    def truncate(self, n: int) -> "CoefficientVector":
        n = min(n, self.max_degree)
        offsets = degree_offsets(self.domain, self.max_degree)
        return CoefficientVector(self.domain, n, self.coeffs[: offsets[n + 1]].copy())

    def padded(self, max_degree: int) -> np.ndarray:
        """Coefficients zero-extended to the layout of the given max_degree."""
        if max_degree < self.max_degree:
            raise ValueError("cannot pad to a smaller degree")
        out = np.zeros(space_dim(self.domain, max_degree))
        out[: self.coeffs.size] = self.coeffs
        return out

    def to_json(self) -> dict:
        items = []
        pos = 0
        for n in range(self.max_degree + 1):
            for k in range(1, degree_dim(self.domain, n) + 1):
                items.append([n, k, float(self.coeffs[pos])])
                pos += 1
        return {"domain": self.domain.to_json(), "max_degree": self.max_degree, "coeffs": items}

    @staticmethod
    def from_json(obj: dict) -> "CoefficientVector":
        domain = Domain.from_json(obj["domain"])
        max_degree = int(obj["max_degree"])
        out = np.zeros(space_dim(domain, max_degree))
        offsets = degree_offsets(domain, max_degree)
        for n, k, v in obj["coeffs"]:
            out[offsets[int(n)] + int(k) - 1] = float(v)
        return CoefficientVector(domain, max_degree, out)


def l2_distance(f: CoefficientVector, g: CoefficientVector) -> float:
    """Weighted L2 distance between two expansions on the same domain (Parseval)."""
    if f.domain != g.domain:
        raise ValueError("expansions live on different domains")
    m = max(f.max_degree, g.max_degree)
    return float(np.linalg.norm(f.padded(m) - g.padded(m)))


def sobolev_norm(f: CoefficientVector, r: float) -> float:
    """Spectral Sobolev norm (sum c^2)^(1/2) + (sum lambda_n^r c^2)^(1/2)."""
    if r <= 0:
        raise ValueError("smoothness r must be positive")
    base = 0.0
    rough = 0.0
    for n in range(f.max_degree + 1):
        e = float(np.sum(f.degree_slice(n) ** 2))
        base += e
        lam = eigenvalue(f.domain, n)
        if lam > 0:
            rough += lam**r * e
    return float(np.sqrt(base) + np.sqrt(rough))


def kernel_coefficients(domain: Domain, n: int, x0) -> CoefficientVector:
    """Expansion of the point-evaluation kernel sum_{m<=n} P_m(., x0).

    These are the sharpest-growth witnesses for sup-norm comparisons when x0
    sits near the boundary.
    """
    block = eval_basis_block(domain, n, np.asarray(x0, dtype=float).reshape(1, -1))
    return CoefficientVector(domain, n, block[0].copy())
