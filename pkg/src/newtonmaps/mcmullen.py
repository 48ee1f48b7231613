"""Newton maps of the family f(z) = (z^(m+n) - lam) / z^n.

The Newton map of any member is affinely conjugate to the lam = 1 map, so
the analysis is done once per (m, n) and transported.  The free critical
points split into three cases by the sign of m - n - 1, which controls
where the extra critical values fall relative to the basin of z = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conjugacy import AffineScaling
from .dynamics import attracting_records, critical_points, iterate_orbit, symmetry_check
from .newton import newton_map
from .poly import Poly
from .rational import RationalMap, is_infinity

__all__ = [
    "McMullenParams",
    "mcmullen_map",
    "newton_mcmullen",
    "lambda_scaling",
    "free_critical",
    "nf_at_free_critical",
    "case_of",
    "symmetry_group_order",
    "basin_evidence",
]


@dataclass(frozen=True)
class McMullenParams:
    m: int
    n: int
    lam: complex = 1.0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m, n >= 1 required")
        if self.lam == 0:
            raise ValueError("lam must be nonzero")


def mcmullen_map(m, n, lam=1.0):
    """f(z) = (z^(m+n) - lam) / z^n."""
    McMullenParams(m, n, lam)
    num = Poly([1] + [0] * (m + n - 1) + [-lam])
    den = Poly([1] + [0] * n)
    return RationalMap(num, den)


def newton_mcmullen(m, n):
    """Closed form of the Newton map of f at lam = 1:

        N(z) = z ((m-1) z^(m+n) + (n+1)) / (m z^(m+n) + n).
    """
    McMullenParams(m, n)
    k = m + n
    num = Poly([m - 1] + [0] * (k - 1) + [n + 1, 0])
    den = Poly([m] + [0] * (k - 1) + [n])
    return RationalMap(num, den)


def lambda_scaling(m, n, lam):
    """Affine change T(z) = lam^(1/(m+n)) z with prefactor lam^(-m/(m+n)).

    Scaling f_1 through it gives f_lam, so T conjugates N_{f_lam} to
    N_{f_1} and the lam = 1 dynamics is the general case.
    """
    McMullenParams(m, n, lam)
    k = m + n
    a = complex(lam) ** (1.0 / k)
    pref = complex(lam) ** (-m / k)
    return AffineScaling(a=a, b=0.0, lam=pref)


def free_critical(m, n):
    """Critical points of N that are not roots of f: z^(m+n) = n(n+1)/(m(m-1)).

    Returns (c, all_points) where c > 0 is the real representative; for
    m = 1 there are none and the result is (None, []).
    """
    McMullenParams(m, n)
    if m == 1:
        return None, []
    k = m + n
    rho = (n * (n + 1) / (m * (m - 1))) ** (1.0 / k)
    pts = [rho * np.exp(2j * np.pi * j / k) for j in range(k)]
    return rho, pts


def nf_at_free_critical(m, n):
    """N(c) = c (1 + (m - n - 1)/(m n)) at the positive free critical point."""
    c, _ = free_critical(m, n)
    if c is None:
        raise ValueError("m = 1 has no free critical points")
    return c * (1.0 + (m - n - 1) / (m * n))


def case_of(m, n):
    """'I' when m > n + 1, 'II' when m = n + 1, 'III' when m < n + 1.

    In case II the free critical points are fixed; in I the critical value
    moves outward, in III inward.
    """
    McMullenParams(m, n)
    if m > n + 1:
        return "I"
    if m == n + 1:
        return "II"
    return "III"


def symmetry_group_order(m, n):
    """Largest rotation order k <= 2(m+n) with N(mu z) = mu N(z).

    For m + n > 2 the answer is m + n; the degenerate m = n = 1 map only
    admits order 2.
    """
    N = newton_mcmullen(m, n)
    cap = 2 * (m + n)
    for k in range(cap, 0, -1):
        if symmetry_check(N, k):
            return k
    return 1


def basin_evidence(m, n, cap=1000, samples=100):
    """Numerical evidence that the free critical orbits land in root basins.

    Iterates every free critical point and a radial sample of (0, c) toward
    the attracting fixed points (the m+n roots of unity); reports which
    target each orbit reaches.  Evidence only, not a proof.
    """
    N = newton_mcmullen(m, n)
    targets = attracting_records(N)
    c, pts = free_critical(m, n)
    orbits = []
    for z0 in pts:
        orbits.append((z0, iterate_orbit(N, z0, targets, cap=cap)))
    segment = []
    if c is not None:
        for t in np.linspace(0.0, 1.0, samples + 2)[1:-1]:
            z0 = t * c
            segment.append((z0, iterate_orbit(N, z0, targets, cap=cap)))
    all_converged = all(o.fate == "converged" for _, o in orbits + segment)
    return {
        "m": m,
        "n": n,
        "case": case_of(m, n),
        "free_critical": c,
        "targets": targets,
        "free_orbits": orbits,
        "segment_orbits": segment,
        "evidence_complete": all_converged,
    }
