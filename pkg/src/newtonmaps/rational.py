"""Rational maps on the Riemann sphere and Mobius transformations.

A RationalMap is stored as a reduced quotient num/den with a monic
denominator (den = 1 in the polynomial case), which fixes the scalar
gauge and makes coefficient-wise comparison meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import Poly, gcd_numeric, poly_from_roots, roots

__all__ = [
    "INF",
    "is_infinity",
    "points_close",
    "Mobius",
    "RationalMap",
    "maps_equal",
]

#: promotion threshold used by orbit iteration, never by coefficient algebra
INFINITY_THRESHOLD = 1e12


class _Infinity:
    """The point at infinity on the Riemann sphere (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


def is_infinity(z):
    return z is INF or (isinstance(z, complex) and not np.isfinite(z))


def points_close(z, w, tol=1e-9):
    """Equality of sphere points; finite points compared within tol."""
    zi, wi = is_infinity(z), is_infinity(w)
    if zi or wi:
        return zi and wi
    return abs(z - w) <= tol * (1.0 + abs(z))


@dataclass(frozen=True)
class Mobius:
    """z -> (a z + b) / (c z + d) with ad - bc != 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("degenerate Mobius transform (ad - bc = 0)")

    @staticmethod
    def identity():
        return Mobius(1, 0, 0, 1)

    @staticmethod
    def affine(a, b):
        """z -> a z + b."""
        return Mobius(a, b, 0, 1)

    @staticmethod
    def inversion():
        return Mobius(0, 1, 1, 0)

    def __call__(self, z):
        if is_infinity(z):
            if self.c == 0:
                return INF
            return self.a / self.c
        num = self.a * z + self.b
        den = self.c * z + self.d
        if den == 0:
            return INF
        return num / den

    def inverse(self):
        return Mobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        """self o other as a Mobius transform."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def is_identity(self, tol=1e-9):
        scale = max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))
        return (
            abs(self.b) <= tol * scale
            and abs(self.c) <= tol * scale
            and abs(self.a - self.d) <= tol * scale
        )


class RationalMap:
    """Reduced quotient of two complex polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly([1]), reduce=True):
        if not isinstance(num, Poly):
            num = Poly(num)
        if not isinstance(den, Poly):
            den = Poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero and not den.is_constant:
            num, den = _reduce_fraction(num, den)
        # monic-denominator gauge; polynomial case keeps den = 1
        lead = den.lead
        num = num / lead
        den = den / lead
        if den.is_constant:
            den = Poly([1])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    def __repr__(self):
        return f"RationalMap({self.num!r}, {self.den!r})"

    # -- queries ------------------------------------------------------

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    @property
    def is_polynomial(self):
        return self.den.is_constant

    @property
    def is_constant(self):
        return self.num.degree <= 0 and self.den.is_constant

    # -- evaluation ---------------------------------------------------

    def __call__(self, z):
        """Value on the sphere: complex or INF."""
        if is_infinity(z):
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return 0j
            return self.num.lead / self.den.lead
        n = self.num(z)
        d = self.den(z)
        if d == 0 or not np.isfinite(abs(d)):
            if n == 0:
                # reduced maps should not hit 0/0; fall back to a nudge
                return self(z + 1e-9 * (1.0 + abs(z)))
            return INF
        v = n / d
        if not np.isfinite(abs(v)):
            return INF
        return complex(v)

    def eval_many(self, z):
        """Vectorized finite evaluation (no sphere handling)."""
        return self.num(z) / self.den(z)

    # -- calculus and structure ---------------------------------------

    def derivative(self):
        p, q = self.num, self.den
        w = p.derivative() * q - p * q.derivative()
        return RationalMap(w, q * q)

    def roots_and_poles(self):
        """(roots of num, roots of den) with multiplicities, finite only.

        Degree comparison decides the point at infinity: a root there when
        deg num < deg den, a pole when deg num > deg den.
        """
        zs = roots(self.num) if self.num.degree > 0 else []
        ps = roots(self.den) if self.den.degree > 0 else []
        return zs, ps

    def multiplier_at_infinity(self):
        """Derivative at infinity in the w = 1/z chart; None if INF not fixed."""
        dn, dd = self.num.degree, self.den.degree
        if dn <= dd:
            return None
        if dn - dd == 1:
            return self.den.lead / self.num.lead
        return 0j

    # -- transforms ---------------------------------------------------

    def compose_poly(self, t):
        """self o t for a polynomial t (substitution z -> t(z))."""
        num = _subst(self.num, t)
        den = _subst(self.den, t)
        return RationalMap(num, den)

    def conjugate(self, phi):
        """phi^{-1} o self o phi for a Mobius transform phi."""
        a, b, c, d = phi.a, phi.b, phi.c, phi.d
        D = self.degree
        az_b = Poly([a, b])
        cz_d = Poly([c, d])
        A = _blend(self.num, az_b, cz_d, D)
        B = _blend(self.den, az_b, cz_d, D)
        num = d * A - b * B
        den = -c * A + a * B
        if den.is_zero:
            raise ZeroDivisionError("conjugation collapsed the denominator")
        return RationalMap(num, den)

    def scale(self, factor):
        """factor * self."""
        return RationalMap(self.num * factor, self.den, reduce=False)


def _subst(p, t):
    """p(t(z)) for polynomials p, t by Horner on polynomial values."""
    out = Poly([0])
    for coef in p.c:
        out = out * t + coef
    return out


def _blend(p, u, v, D):
    """sum_k p_k * u**k * v**(D - k), the homogenized substitution."""
    out = Poly([0])
    n = p.c.size - 1
    for k in range(p.c.size):  # k indexes power of u
        coef = p.c[n - k]
        if coef == 0:
            continue
        out = out + coef * (u ** k) * (v ** (D - k))
    return out


def _reduce_fraction(num, den, tol=1e-6):
    """Cancel common roots of num and den.

    Both polynomials are factored with polished roots; when common roots
    exist, the reduced parts are rebuilt from the remaining factors, which
    is far more accurate than dividing out an approximate GCD.
    """
    if num.is_constant:
        return num, den
    rn = roots(num)
    rd = roots(den)
    used = [0] * len(rd)
    keep_n = []
    any_common = False
    for r, mn in rn:
        hit = None
        for k, (s, md) in enumerate(rd):
            if used[k] < md and abs(r - s) <= tol * (1.0 + abs(r)):
                hit = k
                break
        if hit is None:
            keep_n.append((r, mn))
        else:
            g = min(mn, rd[hit][1] - used[hit])
            used[hit] += g
            any_common = True
            if mn > g:
                keep_n.append((r, mn - g))
    if not any_common:
        return num, den
    keep_d = [(s, md - u) for (s, md), u in zip(rd, used) if md - u > 0]
    return (
        poly_from_roots(keep_n, lead=num.lead),
        poly_from_roots(keep_d, lead=den.lead),
    )


def maps_equal(r1, r2, tol=1e-9):
    """Cross-multiplied coefficient comparison of two rational maps."""
    lhs = r1.num * r2.den
    rhs = r2.num * r1.den
    diff = lhs - rhs
    scale = max(
        np.max(np.abs(lhs.c)) if not lhs.is_zero else 0.0,
        np.max(np.abs(rhs.c)) if not rhs.is_zero else 0.0,
        1e-300,
    )
    if diff.is_zero:
        return True
    return bool(np.max(np.abs(diff.c)) <= tol * scale)
