"""Affine scaling of source functions and Mobius normal forms for Newton maps.

The scaling device: for T(z) = az + b and S(z) = lam * R(T(z)), the Newton
maps satisfy T o N_S o T^{-1} = N_R, so dynamics can be studied in any
convenient affine frame.  Normal-form helpers return both the transformed
map and the transform used, so basins and points can be mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .newton import fixed_points
from .poly import Poly
from .rational import INF, Mobius, RationalMap, is_infinity

__all__ = [
    "AffineScaling",
    "scale_source",
    "normalize_two_fixed",
    "to_polynomial_newton",
    "transport_symmetry",
]


@dataclass(frozen=True)
class AffineScaling:
    """S(z) = lam * R(a z + b) with a, lam nonzero."""

    a: complex
    b: complex
    lam: complex = 1.0

    def __post_init__(self):
        if self.a == 0 or self.lam == 0:
            raise ValueError("a and lam must be nonzero")

    @property
    def transform(self):
        """T(z) = a z + b as a Mobius map."""
        return Mobius.affine(self.a, self.b)


def scale_source(r, scaling):
    """S(z) = lam * R(a z + b); N_S is T^{-1} o N_R o T for T = az + b."""
    t = Poly([scaling.a, scaling.b])
    return r.compose_poly(t).scale(scaling.lam)


def _mobius_to_pair(n_map, z1, z2):
    """Mobius phi with phi(z1) = 0 and phi(z2) = INF."""
    if is_infinity(z1) and is_infinity(z2):
        raise ValueError("fixed points must be distinct")
    if is_infinity(z2):
        return Mobius.affine(1.0, -z1)  # z - z1
    if is_infinity(z1):
        return Mobius(0, 1, 1, -z2)  # 1/(z - z2)
    if z1 == z2:
        raise ValueError("fixed points must be distinct")
    return Mobius(1, -z1, 1, -z2)  # (z - z1)/(z - z2)


def normalize_two_fixed(n_map, z1, z2):
    """Conjugate so the fixed points z1, z2 land on 0 and infinity.

    Returns (map, phi) with map = phi o N o phi^{-1}; multipliers carry over.
    """
    phi = _mobius_to_pair(n_map, z1, z2)
    return n_map.conjugate(phi.inverse()), phi


def to_polynomial_newton(n_map):
    """Move the unique repelling fixed point to infinity.

    A Newton map with exactly one repelling fixed point is conjugate to the
    Newton map of a polynomial; this returns (conjugated map, psi) where
    psi is the identity when the repelling point already sits at infinity.
    """
    repelling = [rec for rec in fixed_points(n_map) if rec.klass == "repelling"]
    if len(repelling) != 1:
        raise ValueError(
            f"expected exactly one repelling fixed point, found {len(repelling)}"
        )
    z0 = repelling[0].location
    if is_infinity(z0):
        return n_map, Mobius.identity()
    psi = Mobius(0, 1, 1, -z0)  # 1/(z - z0), sends z0 to INF
    return n_map.conjugate(psi.inverse()), psi


def transport_symmetry(phis, t):
    """Conjugate each symmetry: {T^{-1} o phi o T} for an affine T."""
    if isinstance(t, AffineScaling):
        t = t.transform
    t_inv = t.inverse()
    return [t_inv.compose(phi).compose(t) for phi in phis]
