"""Maximal separated point sets, sampling weights, and density diagnostics.

Construction works in lifted coordinates: ball points are mapped to the upper
hemisphere, where the intrinsic metric is the geodesic distance and nearest
neighbors can be resolved through Euclidean (chord) distances with a KD-tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import qmc

from .domains import Domain, lift, metric
from .oracle import OracleGrid, oracle_grid_by_size

#: fixed seed for probe grids so suprema checks are reproducible
PROBE_SEED = 9001

_BATCH0 = 4096


def chord(eps: float) -> float:
    """Euclidean distance in lifted coordinates equivalent to geodesic eps."""
    return 2.0 * math.sin(min(eps, math.pi) / 2.0)


def _halton(dim: int, count: int, seed: int) -> np.ndarray:
    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    return sampler.random(count)


def _map_to_domain(domain: Domain, u: np.ndarray) -> np.ndarray:
    """Area-preserving map of unit-cube samples onto the (lifted) domain."""
    if domain.kind == "interval":
        return np.cos(math.pi * u[:, 0])[:, None]
    if domain.kind == "disk":
        z = u[:, 0]  # hemisphere height; uniform in z <=> uniform surface measure
        rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        phi = 2.0 * math.pi * u[:, 1]
        return np.column_stack([rho * np.cos(phi), rho * np.sin(phi)])
    z = 2.0 * u[:, 0] - 1.0
    rho = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = 2.0 * math.pi * u[:, 1]
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def quasi_uniform_points(domain: Domain, count: int, seed: int = PROBE_SEED) -> np.ndarray:
    """Low-discrepancy point stream on the domain (deterministic per seed)."""
    u = _halton(min(domain.ambient_dim, 2), count, seed)
    return _map_to_domain(domain, u)


@dataclass
class PointSet:
    domain: Domain
    epsilon: float
    points: np.ndarray

    def __post_init__(self):
        self.points = np.atleast_2d(np.asarray(self.points, dtype=float))

    def __len__(self) -> int:
        return self.points.shape[0]

    def lifted(self) -> np.ndarray:
        return lift(self.domain, self.points)

    def min_separation(self) -> float:
        tree = cKDTree(self.lifted())
        d, _ = tree.query(self.lifted(), k=2, workers=-1)
        c = np.clip(d[:, 1] / 2.0, 0.0, 1.0)
        return float(np.min(2.0 * np.arcsin(c)))

    def covering_radius(self, probes: np.ndarray) -> float:
        tree = cKDTree(self.lifted())
        d, _ = tree.query(lift(self.domain, probes), k=1, workers=-1)
        c = np.clip(d / 2.0, 0.0, 1.0)
        return float(np.max(2.0 * np.arcsin(c)))

    def to_json(self, tau: np.ndarray | None = None) -> dict:
        obj = {
            "domain": self.domain.to_json(),
            "epsilon": self.epsilon,
            "points": [[float(c) for c in p] for p in self.points],
        }
        if tau is not None:
            obj["tau"] = [float(t) for t in tau]
        return obj

    @staticmethod
    def from_json(obj: dict) -> "PointSet":
        return PointSet(
            Domain.from_json(obj["domain"]),
            float(obj["epsilon"]),
            np.asarray(obj["points"], dtype=float),
        )


def maximal_separated_set(domain: Domain, epsilon: float, seed: int) -> PointSet:
    """Greedy maximal epsilon-separated set from a seeded low-discrepancy stream.

    Candidates are consumed in batches; a candidate is accepted iff it keeps
    distance >= epsilon to every accepted point.  The stream stops once a full
    batch yields no acceptance, at which point the set is both separated and
    (empirically) covering at scale epsilon.
    """
    if not 0.0 < epsilon <= math.pi:
        raise ValueError("epsilon must lie in (0, pi]")
    sampler = qmc.Halton(d=min(domain.ambient_dim, 2), scramble=True, seed=seed)
    c_eps = chord(epsilon)
    accepted: list[np.ndarray] = []
    accepted_lift: list[np.ndarray] = []
    while True:
        batch = max(_BATCH0, len(accepted))
        cand = _map_to_domain(domain, sampler.random(batch))
        cand_lift = lift(domain, cand)
        if accepted:
            tree = cKDTree(np.asarray(accepted_lift))
            dist, _ = tree.query(cand_lift, k=1, workers=-1)
            survivors = np.nonzero(dist >= c_eps)[0]
        else:
            survivors = np.arange(batch)
        added = 0
        fresh: list[np.ndarray] = []
        for i in survivors:
            p = cand_lift[i]
            ok = True
            for qv in fresh:
                if np.linalg.norm(p - qv) < c_eps:
                    ok = False
                    break
            if ok:
                fresh.append(p)
                accepted.append(cand[i])
                accepted_lift.append(p)
                added += 1
        if added == 0 and accepted:
            break
    return PointSet(domain, epsilon, np.asarray(accepted))


def covering_multiplicity(point_set: PointSet, probes: np.ndarray) -> tuple[int, int]:
    """Min and max over probes of the number of set points within epsilon."""
    probes = np.atleast_2d(np.asarray(probes, dtype=float))
    if probes.shape[0] == 0:
        raise ValueError("probe set is empty")
    tree = cKDTree(point_set.lifted())
    counts = tree.query_ball_point(
        lift(point_set.domain, probes), r=chord(point_set.epsilon), workers=-1,
        return_length=True,
    )
    return int(np.min(counts)), int(np.max(counts))


def assign_tau(point_set: PointSet, min_nodes: int = 100_000) -> np.ndarray:
    """Reference-measure of each point's metric Voronoi cell, estimated by
    classifying a dense weighted grid by nearest lifted neighbor.

    The weights are positive and sum to the total measure 1 (up to the grid's
    own normalization error).
    """
    l = len(point_set)
    grid = oracle_grid_by_size(point_set.domain, max(min_nodes, 40 * l))
    tree = cKDTree(point_set.lifted())
    _, owner = tree.query(lift(point_set.domain, grid.points), k=1, workers=-1)
    tau = np.bincount(owner, weights=grid.weights, minlength=l)
    if np.any(tau <= 0.0):
        k = int(np.argmin(tau))
        raise ValueError(
            f"degenerate Voronoi cell at point index {k} "
            f"({point_set.points[k].tolist()}): no grid mass assigned"
        )
    return tau


def regularity_constant(
    point_set: PointSet,
    tau: np.ndarray,
    n: int,
    probes: np.ndarray | None = None,
    grid: OracleGrid | None = None,
) -> float:
    """Empirical constant N comparing the sampling measure of metric balls of
    radius 1/n with their reference measure.

    Probe centers default to a quasi-uniform grid plus the set's own points;
    ball measures in the denominator come from a dense weighted grid.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    tau = np.asarray(tau, dtype=float)
    if tau.shape[0] != len(point_set):
        raise ValueError("tau length does not match the point set")
    domain = point_set.domain
    if probes is None:
        probes = quasi_uniform_points(domain, 10_000)
    centers = np.vstack([np.atleast_2d(probes), point_set.points])
    if grid is None:
        grid = oracle_grid_by_size(domain, max(100_000, 40 * len(point_set)))
    radius = chord(1.0 / n)
    centers_lift = lift(domain, centers)
    family_tree = cKDTree(point_set.lifted())
    grid_tree = cKDTree(lift(domain, grid.points))
    worst = 0.0
    for lo in range(0, centers_lift.shape[0], 2048):
        block = centers_lift[lo : lo + 2048]
        fam_hits = family_tree.query_ball_point(block, r=radius, workers=-1)
        grid_hits = grid_tree.query_ball_point(block, r=radius, workers=-1)
        for fh, gh in zip(fam_hits, grid_hits):
            denom = float(np.sum(grid.weights[gh])) if gh else 0.0
            if denom <= 0.0:
                continue
            num = float(np.sum(tau[fh])) if fh else 0.0
            worst = max(worst, num / denom)
    return worst
