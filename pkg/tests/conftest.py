"""Shared fixtures: a reproducible corpus of random rational source
functions with well-separated roots and poles.
"""

import numpy as np
import pytest

from newtonmaps.poly import poly_from_roots
from newtonmaps.rational import RationalMap

SEPARATION = 0.3


def random_source(rng, max_newton_degree=8):
    """A random R = prod(z-a)^k / prod(z-b)^l with separated points.

    The Newton map degree (distinct roots + distinct poles, minus one when
    deg num = deg den + 1) stays within max_newton_degree.
    """
    while True:
        m = int(rng.integers(1, 5))
        n = int(rng.integers(0, 4))
        if m + n < 2:
            continue
        if m + n > max_newton_degree:
            continue
        pts = []
        tries = 0
        while len(pts) < m + n and tries < 200:
            cand = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            tries += 1
            if all(abs(cand - p) >= SEPARATION for p in pts):
                pts.append(cand)
        if len(pts) < m + n:
            continue
        root_mults = [int(rng.integers(1, 4)) for _ in range(m)]
        pole_mults = [int(rng.integers(1, 4)) for _ in range(n)]
        d = sum(root_mults)
        e = sum(pole_mults)
        newton_degree = m + n - 1 if d == e + 1 else m + n
        if newton_degree < 2:
            continue
        roots = list(zip(pts[:m], root_mults))
        poles = list(zip(pts[m:], pole_mults))
        num = poly_from_roots(roots)
        den = poly_from_roots(poles)
        r = RationalMap(num, den, reduce=False)
        return r, roots, poles


def random_rational_map(rng, degree):
    """A rational map with random coefficients (almost surely not Newton)."""
    num = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    den = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
    return RationalMap(num, den)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def corpus():
    """200 random Newton-map sources, fixed seed."""
    gen = np.random.default_rng(777)
    return [random_source(gen) for _ in range(200)]
