"""Newton maps of rational functions: construction, fixed-point analysis,
residue indices, the Newton-map characterization and exceptional points.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .poly import Poly, poly_from_roots, roots
from .rational import INF, RationalMap, is_infinity

__all__ = [
    "FixedPointRecord",
    "CharacterizationReport",
    "NonSimpleFixedPointError",
    "newton_map",
    "expected_degree",
    "fixed_points",
    "residue_sum",
    "characterize",
    "exceptional_points",
    "count_attracting",
]

_INDIFFERENT_BAND = 1e-9


class NonSimpleFixedPointError(ValueError):
    """A fixed point with multiplier ~1 makes 1/(1-lambda) meaningless."""


@dataclass(frozen=True)
class FixedPointRecord:
    location: object  # complex or INF
    multiplier: complex
    klass: str  # superattracting | attracting | indifferent | repelling
    residue_index: complex | None  # None when the point is not simple
    origin: str = "plain"  # root-of-R | pole-of-R | infinity | plain
    origin_multiplicity: int | None = None

    @property
    def is_attracting(self):
        return self.klass in ("attracting", "superattracting")

    @property
    def is_simple(self):
        return abs(self.multiplier - 1.0) > _INDIFFERENT_BAND


def _classify(lam):
    mod = abs(lam)
    if mod <= _INDIFFERENT_BAND:
        return "superattracting"
    if abs(mod - 1.0) <= _INDIFFERENT_BAND:
        return "indifferent"
    if mod < 1.0:
        return "attracting"
    return "repelling"


def _record(location, lam, origin="plain", origin_mult=None):
    lam = complex(lam)
    residue = None
    if abs(lam - 1.0) > _INDIFFERENT_BAND:
        residue = 1.0 / (1.0 - lam)
    return FixedPointRecord(location, lam, _classify(lam), residue, origin, origin_mult)


def newton_map(r):
    """N_R = z - R/R' as a reduced rational map.

    Built in factored form: with distinct roots a_i (mult k_i) and poles
    b_j (mult l_j), the logarithmic derivative gives

        N = (z W - pq) / W,  W = sum_i k_i (p/(z-a_i)) q - sum_j l_j p (q/(z-b_j))

    over the squarefree parts p, q.  W shares no root with z W - pq, so
    no numerical GCD cancellation is needed and the coefficients stay as
    accurate as the computed roots.
    """
    if not isinstance(r, RationalMap):
        r = RationalMap(r)
    if r.is_constant:
        raise ValueError("Newton map of a constant function is undefined")
    zeros, poles = r.roots_and_poles()
    p = poly_from_roots([(a, 1) for a, _ in zeros])
    q = poly_from_roots([(b, 1) for b, _ in poles])
    w = Poly([0])
    for i, (_, k) in enumerate(zeros):
        part = poly_from_roots([(a, 1) for t, (a, _) in enumerate(zeros) if t != i])
        w = w + k * part * q
    for j, (_, l) in enumerate(poles):
        part = poly_from_roots([(b, 1) for t, (b, _) in enumerate(poles) if t != j])
        w = w - l * p * part
    if w.is_zero:
        raise ValueError("R has vanishing logarithmic derivative")
    num = Poly([1, 0]) * w - p * q
    return RationalMap(num, w, reduce=False)


def expected_degree(r):
    """Degree of N_R from the distinct-root/pole counts of R."""
    zs, ps = r.roots_and_poles()
    m, n = len(zs), len(ps)
    d, e = r.num.degree, r.den.degree
    if d == e + 1:
        return m + n - 1
    return m + n


def fixed_points(n_map):
    """All fixed points of a rational map with multiplier, class and index.

    Finite fixed points are the roots of z*den - num; infinity is fixed
    exactly when deg num > deg den, with its multiplier read off in the
    w = 1/z chart from the leading coefficients.
    """
    if n_map.degree < 1:
        raise ValueError("fixed points of a constant map are undefined")
    fp_poly = Poly([1, 0]) * n_map.den - n_map.num
    deriv = n_map.derivative()
    records = []
    if fp_poly.degree > 0:
        for z0, mult in roots(fp_poly):
            if mult > 1:
                lam = 1.0 + 0j  # multiple root of N(z) - z forces multiplier 1
            else:
                lam = deriv(z0)
                if is_infinity(lam):
                    lam = complex("inf")
            records.append(_record(z0, lam))
    elif fp_poly.is_zero:
        raise ValueError("identity map has no isolated fixed points")
    lam_inf = n_map.multiplier_at_infinity()
    if lam_inf is not None:
        records.append(_record(INF, lam_inf, origin="infinity"))
    return records


def residue_sum(n_map):
    """Sum of residue fixed point indices 1/(1 - lambda) over the sphere.

    Equals 1 for every rational map of degree >= 2 with simple fixed
    points; refuses maps with a multiplier within 1e-9 of 1.
    """
    if n_map.degree < 2:
        raise ValueError("residue sum requires degree >= 2")
    total = 0j
    for rec in fixed_points(n_map):
        if rec.residue_index is None:
            raise NonSimpleFixedPointError(
                f"fixed point {rec.location} has multiplier ~1"
            )
        total += rec.residue_index
    return total


def _best_fraction(lam, s_max):
    """Closest r/s with |r - s| = 1, r >= 0, s in 1..s_max, and its error."""
    best = None
    best_err = np.inf
    for s in range(1, s_max + 1):
        for r in (s - 1, s + 1):
            err = abs(lam - r / s)
            if err < best_err:
                best_err = err
                best = (r, s)
    return best, best_err


@dataclass
class CharacterizationReport:
    is_newton: bool
    witnesses: list = field(default_factory=list)  # (record, (r, s) | None, reason)
    reconstructed: RationalMap | None = None
    failure: str | None = None


def characterize(n_map, tol=1e-6):
    """Decide whether a rational map is a Newton map and reconstruct R.

    Every fixed point must be simple and all but one multiplier must match
    a fraction r/s with |r - s| = 1; matched finite points rebuild R as a
    product of (z - a)^s factors (roots when r < s, poles when r > s).
    """
    if n_map.degree < 2:
        raise ValueError("characterization requires degree >= 2")
    recs = fixed_points(n_map)
    report = CharacterizationReport(is_newton=False)
    for rec in recs:
        if not rec.is_simple:
            report.witnesses.append((rec, None, "non-simple fixed point"))
            report.failure = "non-simple fixed point"
            return report
    s_max = 2 * n_map.degree
    unmatched = 0
    matched = []
    for rec in recs:
        frac, err = _best_fraction(rec.multiplier, s_max)
        if err < tol:
            report.witnesses.append((rec, frac, "matched"))
            matched.append((rec, frac))
        else:
            unmatched += 1
            report.witnesses.append((rec, None, f"no r/s within {tol:g}"))
    if unmatched > 1:
        report.failure = f"{unmatched} fixed points fail the multiplier test"
        return report
    root_factors = []
    pole_factors = []
    for rec, (r, s) in matched:
        if is_infinity(rec.location):
            continue
        if r < s:
            root_factors.append((rec.location, s))
        else:
            pole_factors.append((rec.location, s))
    num = poly_from_roots(root_factors)
    den = poly_from_roots(pole_factors)
    report.is_newton = True
    report.reconstructed = RationalMap(num, den, reduce=False)
    return report


def _is_scaled_power(h, w, tol=1e-8):
    """True when h(z) is lead * (z - w)**deg(h) within tolerance."""
    model = h.lead * Poly([1, -w]) ** h.degree
    diff = h - model
    scale = max(np.max(np.abs(h.c)), np.max(np.abs(model.c)))
    if diff.is_zero:
        return True
    return bool(np.max(np.abs(diff.c)) <= tol * scale)


def exceptional_points(n_map):
    """Fixed points whose full backward orbit is themselves alone.

    A finite fixed point w qualifies when num - w*den = c (z - w)^D with D
    the map degree (no degree drop, so infinity is not a preimage).  The
    point at infinity qualifies when the map is a polynomial.  At most two
    points can qualify.
    """
    D = n_map.degree
    if D < 2:
        raise ValueError("exceptional points require degree >= 2")
    out = []
    for rec in fixed_points(n_map):
        w = rec.location
        if is_infinity(w):
            if n_map.is_polynomial:
                out.append(INF)
            continue
        h = n_map.num - w * n_map.den
        if h.degree == D and _is_scaled_power(h, w):
            out.append(w)
    return out


def count_attracting(n_map):
    """(attracting, repelling) fixed point counts (super counts as attracting)."""
    att = rep = 0
    for rec in fixed_points(n_map):
        if rec.is_attracting:
            att += 1
        elif rec.klass == "repelling":
            rep += 1
    return att, rep
