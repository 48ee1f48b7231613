"""Orbit iteration, critical points, basin grids and the numerical evidence
reports for connectivity (internal disks) and total disconnection.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .newton import FixedPointRecord, fixed_points
from .poly import Poly, roots
from .rational import INF, INFINITY_THRESHOLD, RationalMap, is_infinity, maps_equal

__all__ = [
    "OrbitResult",
    "BasinGrid",
    "CriticalReport",
    "critical_points",
    "iterate_orbit",
    "internal_disk_radius",
    "critical_report",
    "n0_map",
    "n1_map",
    "n2_map",
    "disconnection_family",
    "disconnection_evidence",
    "symmetry_check",
    "basin_grid",
    "attracting_records",
]

CONVERGENCE_TOL = 1e-9
DEFAULT_CAP = 1000


@dataclass(frozen=True)
class OrbitResult:
    fate: str  # converged | escaped | undecided
    target: object = None  # sphere point when converged
    fp_index: int | None = None
    iterations: int = 0
    final_point: object = None


def attracting_records(n_map):
    """The attracting fixed points of a map, in deterministic order."""
    recs = [r for r in fixed_points(n_map) if r.is_attracting]

    def key(rec):
        if is_infinity(rec.location):
            return (1, 0.0, 0.0)
        return (0, round(rec.location.real, 9), round(rec.location.imag, 9))

    recs.sort(key=key)
    return recs


def critical_points(n_map):
    """Finite critical points with multiplicity, plus the one at infinity.

    Finite critical points (including multiple poles) are the roots of
    W = num' den - num den'; the sphere total is 2 deg - 2, so infinity
    carries whatever W does not account for.
    """
    if n_map.degree < 2:
        raise ValueError("critical points require degree >= 2")
    p, q = n_map.num, n_map.den
    w = p.derivative() * q - p * q.derivative()
    finite = roots(w) if w.degree > 0 else []
    inf_mult = 2 * n_map.degree - 2 - sum(m for _, m in finite)
    return finite, inf_mult


def iterate_orbit(n_map, z0, targets, cap=DEFAULT_CAP, tol=CONVERGENCE_TOL):
    """Iterate until the orbit locks onto an attracting target or gives up."""
    inf_idx = None
    finite_targets = []
    for j, rec in enumerate(targets):
        if is_infinity(rec.location):
            inf_idx = j
        else:
            finite_targets.append((j, rec.location))
    z = z0
    for it in range(cap + 1):
        if is_infinity(z) or abs(z) > INFINITY_THRESHOLD:
            if inf_idx is not None:
                return OrbitResult("converged", INF, inf_idx, it, INF)
            if is_infinity(z):
                return OrbitResult("undecided", iterations=it, final_point=INF)
            # a huge finite value may still return; keep going on the sphere
            z = n_map(z)
            continue
        for j, loc in finite_targets:
            if abs(z - loc) <= tol:
                return OrbitResult("converged", loc, j, it, z)
        if it == cap:
            break
        z = n_map(z)
    return OrbitResult("undecided", iterations=cap, final_point=z)


def internal_disk_radius(p):
    """Radius of a disk around 0 inside the immediate basin of the origin.

    For a polynomial with attracting fixed point 0, the radius is
    (1 - |p'(0)|)/(L(p) - |p'(0)|), taken to the 1/(d-1) power when the
    coefficient length L(p) is below 1.
    """
    if not isinstance(p, Poly):
        raise TypeError("expected a Poly")
    d = p.degree
    if d < 2:
        raise ValueError("degree must be at least 2")
    if p(0) != 0:
        raise ValueError("origin must be a fixed point (p(0) = 0)")
    lam = abs(p.derivative()(0))
    if lam >= 1:
        raise ValueError("origin must be attracting (|p'(0)| < 1)")
    length = p.length()
    base = (1.0 - lam) / (length - lam)
    if length >= 1.0:
        return base
    return base ** (1.0 / (d - 1))


@dataclass(frozen=True)
class CriticalEntry:
    point: complex
    value: object  # N(c): complex or INF
    value_modulus: float
    orbit: OrbitResult
    inside_internal_disk: bool | None
    steps_to_disk: int | None


@dataclass(frozen=True)
class CriticalReport:
    entries: tuple
    disk_radius: float | None


def critical_report(n_map, p_for_disk=None, cap=DEFAULT_CAP, disk_cap=50):
    """Critical values, their orbits, and internal-disk membership.

    When the map is a polynomial with attracting origin (or p_for_disk is
    given), each critical value is checked against the internal disk and,
    failing that, the first iterate count that enters it is recorded.
    """
    if p_for_disk is None and n_map.is_polynomial:
        p_for_disk = n_map.num
    radius = None
    if p_for_disk is not None:
        radius = internal_disk_radius(p_for_disk)
    targets = attracting_records(n_map)
    finite, _ = critical_points(n_map)
    entries = []
    for c, _mult in finite:
        value = n_map(c)
        vmod = float("inf") if is_infinity(value) else abs(value)
        orbit = iterate_orbit(n_map, c, targets, cap=cap)
        inside = None
        steps = None
        if radius is not None:
            inside = vmod < radius
            if not inside:
                z = value
                for k in range(1, disk_cap + 1):
                    z = n_map(z)
                    if is_infinity(z):
                        break
                    if abs(z) < radius:
                        steps = k
                        break
        entries.append(CriticalEntry(c, value, vmod, orbit, inside, steps))
    return CriticalReport(tuple(entries), radius)


# -- the three totally-disconnected families --------------------------


def n0_map(m, n):
    """z((m+n+1)z - (m+1)) / ((m+n)z - m), from p with exactly two roots."""
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1 required")
    return RationalMap(Poly([m + n + 1, -(m + 1), 0]), Poly([m + n, -m]))


def n1_map(n):
    """((n+1)z^n + 1) / (n z^(n-1)), from unicritical p = z^n + 1."""
    if n < 2:
        raise ValueError("n >= 2 required")
    num = Poly([n + 1] + [0] * (n - 1) + [1])
    den = Poly([n] + [0] * (n - 1))
    return RationalMap(num, den)


def n2_map(n):
    """z((n+2)z^n + 2) / ((n+1)z^n + 1), from p = z(z^n + a)."""
    if n < 2:
        raise ValueError("n >= 2 required")
    num = Poly([n + 2] + [0] * (n - 1) + [2, 0])
    den = Poly([n + 1] + [0] * (n - 1) + [1])
    return RationalMap(num, den)


def disconnection_family(kind, m=None, n=None):
    """Dispatch N0(m, n) / N1(n) / N2(n) by name."""
    kind = kind.upper()
    if kind == "N0":
        return n0_map(m, n)
    if kind == "N1":
        return n1_map(n)
    if kind == "N2":
        return n2_map(n)
    raise ValueError("kind must be one of N0, N1, N2")


def disconnection_evidence(n_map, cap=10_000):
    """Iterate every finite critical point toward the single attracting point.

    Numerical evidence for a totally disconnected Julia set: the map must
    have exactly one attracting fixed point with nonzero multiplier, and
    every critical orbit must reach it.  This is evidence, not a proof.
    """
    att = attracting_records(n_map)
    if len(att) != 1:
        raise ValueError(f"expected one attracting fixed point, found {len(att)}")
    star = att[0]
    if star.klass == "superattracting":
        raise ValueError("single attracting fixed point cannot be superattracting")
    finite, _ = critical_points(n_map)
    undecided = []
    orbits = []
    for c, _m in finite:
        orb = iterate_orbit(n_map, c, att, cap=cap)
        orbits.append((c, orb))
        if orb.fate != "converged":
            undecided.append(c)
    return {
        "attractor": star,
        "critical_count": len(finite),
        "orbits": orbits,
        "evidence_complete": not undecided,
        "undecided": undecided,
    }


def symmetry_check(n_map, order, tol=1e-9):
    """True when N(mu z) = mu N(z) for the primitive order-th root of unity."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if order == 1:
        return True
    mu = complex(np.exp(2j * np.pi / order))
    rotated = n_map.compose_poly(Poly([mu, 0])).scale(1.0 / mu)
    return maps_equal(rotated, n_map, tol=tol)


# -- basin grids ------------------------------------------------------


@dataclass(frozen=True)
class BasinGrid:
    center: complex
    half_width: float
    half_height: float
    width: int
    height: int
    labels: np.ndarray  # (height, width) int16; -1 = undecided
    fp_table: tuple  # FixedPointRecord per label index

    UNDECIDED = -1

    def pixel_centers(self):
        xs = self.center.real + np.linspace(
            -self.half_width, self.half_width, self.width
        )
        ys = self.center.imag + np.linspace(
            -self.half_height, self.half_height, self.height
        )
        return xs, ys

    @property
    def undecided_count(self):
        return int(np.sum(self.labels == self.UNDECIDED))

    def component_of(self, z0):
        """Flood-filled same-label component containing z0 (grid stand-in
        for the immediate basin)."""
        xs, ys = self.pixel_centers()
        col = int(np.argmin(np.abs(xs - z0.real)))
        row = int(np.argmin(np.abs(ys - z0.imag)))
        lab = self.labels[row, col]
        mask = np.zeros_like(self.labels, dtype=bool)
        if lab == self.UNDECIDED:
            return mask
        stack = [(row, col)]
        mask[row, col] = True
        while stack:
            r, c = stack.pop()
            for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if 0 <= rr < self.height and 0 <= cc < self.width:
                    if not mask[rr, cc] and self.labels[rr, cc] == lab:
                        mask[rr, cc] = True
                        stack.append((rr, cc))
        return mask

    def sidecar(self):
        return {
            "window": {
                "center": [self.center.real, self.center.imag],
                "half_width": self.half_width,
                "half_height": self.half_height,
            },
            "resolution": [self.width, self.height],
            "fp_table": [
                {
                    "location": (
                        "inf"
                        if is_infinity(rec.location)
                        else [rec.location.real, rec.location.imag]
                    ),
                    "multiplier": [rec.multiplier.real, rec.multiplier.imag],
                    "class": rec.klass,
                }
                for rec in self.fp_table
            ],
            "undecided_count": self.undecided_count,
        }


def _worker_count():
    raw = os.environ.get("NEWTON_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _iterate_block(n_map, z, finite_targets, inf_target, cap, tol):
    labels = np.full(z.shape, BasinGrid.UNDECIDED, dtype=np.int16)
    active = np.ones(z.shape, dtype=bool)
    num_c, den_c = n_map.num.c, n_map.den.c
    for _ in range(cap + 1):
        if not active.any():
            break
        za = z[active]
        hit_any = np.zeros(za.shape, dtype=bool)
        lab = np.full(za.shape, BasinGrid.UNDECIDED, dtype=np.int16)
        for j, loc in finite_targets:
            hit = np.abs(za - loc) <= tol
            lab[hit & ~hit_any] = j
            hit_any |= hit
        big = ~np.isfinite(za) | (np.abs(za) > INFINITY_THRESHOLD)
        if inf_target is not None:
            lab[big & ~hit_any] = inf_target
            hit_any |= big
        else:
            # runaway orbit with no attracting infinity: give up on it
            hit_any |= big
        idx = np.flatnonzero(active)
        labels.flat[idx[hit_any]] = lab[hit_any]
        active.flat[idx[hit_any]] = False
        if not active.any():
            break
        za = z[active]
        with np.errstate(all="ignore"):
            z[active] = np.polyval(num_c, za) / np.polyval(den_c, za)
    return labels


def basin_grid(n_map, window, resolution, cap=DEFAULT_CAP, tol=CONVERGENCE_TOL):
    """Label each pixel of a rectangular window with the attracting fixed
    point its orbit reaches; -1 marks undecided pixels.

    window is (center, half_width, half_height); resolution is (W, H).
    The Julia set is approximated by the boundaries between labels.
    """
    center, hw, hh = window
    width, height = resolution
    if width < 16 or height < 16:
        raise ValueError("resolution must be at least 16x16")
    targets = attracting_records(n_map)
    if not targets:
        raise ValueError("map has no attracting fixed point")
    finite_targets = [
        (j, rec.location) for j, rec in enumerate(targets) if not is_infinity(rec.location)
    ]
    inf_target = next(
        (j for j, rec in enumerate(targets) if is_infinity(rec.location)), None
    )
    xs = center.real + np.linspace(-hw, hw, width)
    ys = center.imag + np.linspace(-hh, hh, height)
    z = xs[None, :] + 1j * ys[:, None]
    z = z.astype(complex)

    workers = _worker_count()
    if workers == 1 or height < 2 * workers:
        labels = _iterate_block(n_map, z, finite_targets, inf_target, cap, tol)
    else:
        from concurrent.futures import ThreadPoolExecutor

        chunks = np.array_split(np.arange(height), workers)
        labels = np.empty((height, width), dtype=np.int16)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futs = [
                pool.submit(
                    _iterate_block,
                    n_map,
                    z[rows].copy(),
                    finite_targets,
                    inf_target,
                    cap,
                    tol,
                )
                for rows in chunks
            ]
            for rows, fut in zip(chunks, futs):
                labels[rows] = fut.result()
    return BasinGrid(
        center=complex(center),
        half_width=float(hw),
        half_height=float(hh),
        width=int(width),
        height=int(height),
        labels=labels,
        fp_table=tuple(targets),
    )
