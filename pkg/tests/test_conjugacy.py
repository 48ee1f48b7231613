import numpy as np
import pytest

from newtonmaps.conjugacy import (
    AffineScaling,
    normalize_two_fixed,
    scale_source,
    to_polynomial_newton,
    transport_symmetry,
)
from newtonmaps.newton import fixed_points, newton_map
from newtonmaps.poly import Poly
from newtonmaps.rational import INF, Mobius, RationalMap, is_infinity, maps_equal


def test_scaling_identity_pointwise():
    # N of lam*R(az+b) equals T^{-1} o N_R o T with T = az + b
    r = RationalMap(Poly([1, 2, -1]), Poly([1, 0]))
    sc = AffineScaling(a=1.5 - 0.5j, b=0.7j, lam=-2.0)
    n_r = newton_map(r)
    n_s = newton_map(scale_source(r, sc))
    t = sc.transform
    for z in [0.3 + 0.1j, -1.2, 2.0 - 0.4j]:
        assert abs(t(n_s(z)) - n_r(t(z))) < 1e-9


def test_scaling_rejects_degenerate():
    with pytest.raises(ValueError):
        AffineScaling(a=0, b=1)
    with pytest.raises(ValueError):
        AffineScaling(a=1, b=0, lam=0)


def test_normalize_two_fixed_finite():
    n = newton_map(RationalMap(Poly([1, 0, -1])))  # fixed at 1, -1, inf
    moved, phi = normalize_two_fixed(n, 1.0, -1.0)
    assert abs(phi(1.0)) < 1e-12
    assert is_infinity(phi(-1.0))
    # 0 and infinity are fixed for the conjugated map
    assert abs(moved(0.0)) < 1e-9
    assert is_infinity(moved(INF))


def test_normalize_with_infinity():
    n = newton_map(RationalMap(Poly([1, 0, -1])))
    moved, phi = normalize_two_fixed(n, 1.0, INF)
    assert abs(moved(0.0)) < 1e-9
    # multipliers are conjugacy invariants
    src = {k.klass for k in fixed_points(n)}
    dst = {k.klass for k in fixed_points(moved)}
    assert src == dst


def test_to_polynomial_newton():
    # start from a polynomial Newton map, hide the repelling point, recover
    n = newton_map(RationalMap(Poly([1, 0, -1])))
    phi = Mobius(1, 1, 1, -1)
    hidden = n.conjugate(phi)
    back, psi = to_polynomial_newton(hidden)
    # the repelling fixed point now sits at infinity and the reconstructed
    # source function is a polynomial
    rep = [r for r in fixed_points(back) if r.klass == "repelling"]
    assert len(rep) == 1 and is_infinity(rep[0].location)
    from newtonmaps.newton import characterize

    ch = characterize(back)
    assert ch.is_newton
    assert ch.reconstructed.den.is_constant


def test_to_polynomial_newton_identity_when_already():
    n = newton_map(RationalMap(Poly([1, 0, 0, -1])))
    same, psi = to_polynomial_newton(n)
    assert psi.is_identity()
    assert maps_equal(same, n)


def test_transport_symmetry():
    mu = np.exp(2j * np.pi / 3)
    rot = Mobius.affine(mu, 0)
    t = Mobius.affine(2.0, 1.0)
    (moved,) = transport_symmetry([rot], t)
    z = 0.4 - 0.9j
    assert abs(moved(z) - t.inverse()(rot(t(z)))) < 1e-12
