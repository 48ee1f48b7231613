import numpy as np
import pytest

from newtonmaps.mcmullen import (
    McMullenParams,
    basin_evidence,
    case_of,
    free_critical,
    lambda_scaling,
    mcmullen_map,
    newton_mcmullen,
    nf_at_free_critical,
    symmetry_group_order,
)
from newtonmaps.newton import fixed_points, newton_map
from newtonmaps.poly import Poly
from newtonmaps.rational import Mobius, RationalMap, is_infinity, maps_equal


def test_params_validation():
    with pytest.raises(ValueError):
        McMullenParams(0, 1)
    with pytest.raises(ValueError):
        McMullenParams(1, 1, 0.0)


@pytest.mark.parametrize("m,n", [(2, 1), (3, 2), (1, 3), (4, 2), (2, 3), (5, 5)])
def test_closed_form_matches_direct(m, n):
    assert maps_equal(newton_map(mcmullen_map(m, n)), newton_mcmullen(m, n))


def test_degree():
    assert newton_mcmullen(2, 3).degree == 6
    assert newton_mcmullen(1, 3).degree == 4  # leading coefficient vanishes


def test_derivative_factorization():
    # N' = (z^k - 1)(m(m-1)z^k - n(n+1)) / (m z^k + n)^2
    m, n = 3, 2
    k = m + n
    N = newton_mcmullen(m, n)
    dN = N.derivative()
    rng = np.random.default_rng(5)
    for _ in range(50):
        z = complex(rng.normal(), rng.normal())
        zk = z ** k
        want = (zk - 1) * (m * (m - 1) * zk - n * (n + 1)) / (m * zk + n) ** 2
        assert abs(dN(z) - want) <= 1e-9 * max(1.0, abs(want))


def test_roots_of_unity_superattracting():
    m, n = 2, 3
    N = newton_mcmullen(m, n)
    k = m + n
    recs = fixed_points(N)
    for j in range(k):
        w = np.exp(2j * np.pi * j / k)
        rec = min(
            (r for r in recs if not is_infinity(r.location)),
            key=lambda r: abs(r.location - w),
        )
        assert abs(rec.location - w) < 1e-9
        assert rec.klass == "superattracting"


def test_zero_and_infinity_multipliers():
    m, n = 3, 2
    N = newton_mcmullen(m, n)
    for rec in fixed_points(N):
        if is_infinity(rec.location):
            assert abs(rec.multiplier - m / (m - 1)) < 1e-9
        elif abs(rec.location) < 1e-9:
            assert abs(rec.multiplier - (n + 1) / n) < 1e-9


def test_lambda_conjugacy():
    rng = np.random.default_rng(9)
    for m, n in [(2, 1), (3, 2), (2, 3)]:
        N1 = newton_mcmullen(m, n)
        for _ in range(3):
            lam = complex(rng.normal(), rng.normal()) + 1.0
            sc = lambda_scaling(m, n, lam)
            n_lam = newton_map(mcmullen_map(m, n, lam))
            # conjugating N_lam by T(z) = lam^{1/(m+n)} z recovers N_1
            assert maps_equal(n_lam.conjugate(sc.transform), N1, tol=1e-8)


def test_free_critical():
    c, pts = free_critical(3, 2)
    assert c == pytest.approx((2 * 3 / (3 * 2)) ** 0.2)  # n(n+1)/(m(m-1)) = 1
    assert len(pts) == 5
    N = newton_mcmullen(3, 2)
    dN = N.derivative()
    for p in pts:
        assert abs(dN(p)) < 1e-9
    assert free_critical(1, 4) == (None, [])


def test_nf_at_free_critical_formula():
    for m, n in [(3, 2), (4, 2), (2, 3)]:
        c, _ = free_critical(m, n)
        N = newton_mcmullen(m, n)
        assert abs(N(complex(c)) - nf_at_free_critical(m, n)) < 1e-9


def test_cases():
    assert case_of(4, 2) == "I"
    assert case_of(3, 2) == "II"
    assert case_of(2, 3) == "III"


def test_case_two_fixes_free_critical():
    # m = n + 1: the free critical points are fixed
    c, pts = free_critical(3, 2)
    N = newton_mcmullen(3, 2)
    for p in pts:
        assert abs(N(p) - p) < 1e-9


def test_symmetry_group_order():
    assert symmetry_group_order(2, 3) == 5
    assert symmetry_group_order(3, 2) == 5
    assert symmetry_group_order(1, 2) == 3
    assert symmetry_group_order(1, 1) == 2


def test_m1_inversion_duality():
    # 1/N_f(1/z) is the Newton map of z^(n+1) - 1
    n = 3
    Nf = newton_mcmullen(1, n)
    lhs = Nf.conjugate(Mobius.inversion())
    rhs = newton_map(RationalMap(Poly([1] + [0] * n + [-1])))
    assert maps_equal(lhs, rhs)
    # N maps infinity to 0
    from newtonmaps.rational import INF

    assert Nf(INF) == 0


def test_basin_evidence():
    ev = basin_evidence(2, 3, samples=20)
    assert ev["evidence_complete"]
    k = 5
    for z0, orbit in ev["free_orbits"]:
        assert orbit.fate == "converged"
        assert abs(orbit.target ** k - 1) < 1e-6
    for z0, orbit in ev["segment_orbits"]:
        assert abs(orbit.target - 1.0) < 1e-6
