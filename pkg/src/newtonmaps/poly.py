"""Complex polynomials: arithmetic, evaluation, roots with multiplicities,
numeric GCD and the coefficient-length functional.

Coefficients are stored highest degree first, as in ``numpy.polyval``.
Root finding uses Aberth-Ehrlich simultaneous iteration followed by a
multiplicity-aware clustering step, so repeated roots are reported once
with their multiplicity and a polished centroid.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Poly",
    "RootFindingError",
    "roots",
    "gcd_numeric",
    "poly_from_roots",
]

_EPS = np.finfo(float).eps
# leading coefficients below this (relative to the largest one) are noise
_TRIM_REL = 1e-12


class RootFindingError(RuntimeError):
    """Raised when the simultaneous iteration fails to settle within its cap."""


class Poly:
    """Immutable complex-coefficient polynomial, highest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        scale = np.max(np.abs(c))
        if scale == 0.0:
            c = np.zeros(1, dtype=complex)
        else:
            keep = np.abs(c) > _TRIM_REL * scale
            first = int(np.argmax(keep))  # first non-negligible coefficient
            c = c[first:].copy()
            c[np.abs(c) <= _TRIM_REL * scale] = 0.0
            if c.size == 0 or np.max(np.abs(c)) == 0.0:
                c = np.zeros(1, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def degree(self):
        """Degree after trimming; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return self.c.size - 1

    @property
    def is_zero(self):
        return self.c.size == 1 and self.c[0] == 0

    @property
    def is_constant(self):
        return self.c.size == 1

    @property
    def lead(self):
        return complex(self.c[0])

    def coeff(self, k):
        """Coefficient of z**k (0 beyond the degree)."""
        if k < 0 or k >= self.c.size:
            return 0j
        return complex(self.c[self.c.size - 1 - k])

    def __repr__(self):
        return f"Poly({list(self.c)})"

    # -- evaluation and calculus --------------------------------------

    def __call__(self, z):
        return np.polyval(self.c, z)

    def derivative(self):
        if self.c.size == 1:
            return Poly([0])
        n = self.c.size - 1
        return Poly(self.c[:-1] * np.arange(n, 0, -1))

    def length(self):
        """Sum of the absolute values of all coefficients."""
        return float(np.sum(np.abs(self.c)))

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        n = max(self.c.size, q.c.size)
        a = np.zeros(n, dtype=complex)
        a[n - self.c.size:] += self.c
        a[n - q.c.size:] += q.c
        return Poly(a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-self.c)

    def __sub__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Poly([0])
        return Poly(np.convolve(self.c, q.c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return Poly(self.c / scalar)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monic(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        return Poly(self.c / self.c[0])

    def shift_mul_z(self, k=1):
        """Multiply by z**k."""
        if self.is_zero:
            return self
        return Poly(np.concatenate([self.c, np.zeros(k, dtype=complex)]))

    def divide_out(self, divisor):
        """Exact-in-spirit polynomial division, discarding a small remainder."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant:
            return Poly(self.c / divisor.c[0])
        if self.degree < divisor.degree:
            return Poly([0])
        q, _ = np.polydiv(self.c, divisor.c)
        return Poly(q)


def poly_from_roots(root_list, lead=1.0):
    """Build lead * prod (z - r)**m from (root, multiplicity) pairs."""
    p = Poly([lead])
    for r, m in root_list:
        p = p * Poly([1, -r]) ** m
    return p


# -- root finding -----------------------------------------------------


def _aberth(c, tol, max_iter):
    """Aberth-Ehrlich pass on monic coefficients c; returns raw roots."""
    n = len(c) - 1
    radius = 1.0 + np.max(np.abs(c[1:]))
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.7
    z = radius * np.exp(1j * angles)
    dc = c[:-1] * np.arange(n, 0, -1)
    absc = np.abs(c)
    for _ in range(max_iter):
        pv = np.polyval(c, z)
        dv = np.polyval(dc, z)
        # roundoff floor of the evaluation; below it the value is noise
        noise = 4.0 * _EPS * np.polyval(absc, np.abs(z))
        done_value = np.abs(pv) <= noise
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.where(done_value, 0.0, pv / np.where(dv == 0, 1.0, dv))
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            rep = np.sum(inv, axis=1)
            corr = w / (1.0 - w * rep)
        corr = np.where(np.isfinite(corr), corr, 0.1 * radius)
        z = z - corr
        if np.all(done_value | (np.abs(corr) <= tol * (1.0 + np.abs(z)))):
            return z
    raise RootFindingError("Aberth-Ehrlich iteration did not converge")


def _refine(p, z0, mult):
    """Polish a multiplicity-`mult` root as a simple root of p^(mult-1).

    Keeps the best iterate seen; near a higher-multiplicity root the
    Newton steps are noise-driven and must not be allowed to wander off.
    """
    q = p
    for _ in range(mult - 1):
        q = q.derivative()
    dq = q.derivative()
    absq = np.abs(q.c)
    z = z0
    best = z0
    best_val = abs(q(z0))
    for _ in range(80):
        qv = q(z)
        if abs(qv) < best_val:
            best, best_val = z, abs(qv)
        if abs(qv) <= 8.0 * _EPS * np.polyval(absq, abs(z)):
            return z
        dv = dq(z)
        if dv == 0:
            break
        step = qv / dv
        z = z - step
        if abs(step) <= 1e-16 * (1.0 + abs(z)):
            break
    qv = abs(q(z))
    return z if qv < best_val else best


def _deriv_chain_ok(derivs, z, m):
    """True when p and its first m-1 derivatives all vanish at z (to noise)."""
    for j in range(m):
        dj = derivs[j]
        bound = np.polyval(np.abs(dj.c), abs(z))
        if abs(dj(z)) > 1e-9 * max(bound, 1.0):
            return False
    return True


def roots(p, tol=1e-12, cluster_tol=1e-6, max_iter=500):
    """All roots of p with multiplicities, as a list of (root, mult) pairs.

    Repeated roots are recovered by clustering the raw Aberth output and
    validating candidate multiplicities against the derivative chain of p,
    since double precision scatters an m-fold root over a radius ~eps**(1/m).
    """
    if p.is_constant:
        raise ValueError("roots of a constant polynomial are undefined")
    c = p.monic().c
    raw = _aberth(c, tol, max_iter)

    # single-linkage clustering at the base radius
    order = np.argsort(raw.real, kind="stable")
    clusters = []  # list of lists of raw roots
    for idx in order:
        z = raw[idx]
        for cl in clusters:
            if abs(z - cl[-1]) <= cluster_tol * (1.0 + abs(z)):
                cl.append(z)
                break
        else:
            clusters.append([z])

    derivs = [p]
    for _ in range(p.degree):
        derivs.append(derivs[-1].derivative())

    centers = [_refine(p, np.mean(cl), len(cl)) for cl in clusters]

    # merge clusters that belong to one multiple root
    merged = True
    while merged and len(clusters) > 1:
        merged = False
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                ci, cj = centers[i], centers[j]
                gate = 0.05 * (1.0 + abs(ci))
                if abs(ci - cj) > gate:
                    continue
                m = len(clusters[i]) + len(clusters[j])
                cand = _refine(p, (len(clusters[i]) * ci + len(clusters[j]) * cj) / m, m)
                if not _deriv_chain_ok(derivs, cand, m):
                    continue
                clusters[i] = clusters[i] + clusters[j]
                centers[i] = cand
                del clusters[j], centers[j]
                merged = True
                break
            if merged:
                break

    out = [(complex(centers[k]), len(clusters[k])) for k in range(len(clusters))]
    out.sort(key=lambda rm: (round(rm[0].real, 9), round(rm[0].imag, 9)))
    return out


def gcd_numeric(p, q, tol=1e-6):
    """Monic approximate GCD via mutual root matching.

    Returns the constant 1 when there is no common root within tolerance.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.is_constant or q.is_constant:
        return Poly([1])
    rp = roots(p)
    rq = roots(q)
    common = []
    used = [False] * len(rq)
    for r, m in rp:
        for k, (s, mm) in enumerate(rq):
            if used[k]:
                continue
            if abs(r - s) <= tol * (1.0 + abs(r)):
                common.append(((r + s) / 2.0, min(m, mm)))
                used[k] = True
                break
    if not common:
        return Poly([1])
    return poly_from_roots(common)
