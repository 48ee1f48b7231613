"""Enumeration of Newton maps with exactly two attracting fixed points, one
of which is exceptional.

Such a map is conjugate to N_{z^d/p} for a monic degree-d polynomial p with
p(0) != 0, and is a polynomial precisely when

    g(z) = d * prod(z - a_i) - z * sum_i m_i * prod_{j != i} (z - a_j)

is a nonzero constant, where a_i are the distinct roots of p with
multiplicities m_i.  For each multiplicity pattern the vanishing of the
non-constant coefficients of g is a small polynomial system in the free
roots, solved exactly per pattern (the gauge pins a multiple root at 1;
the all-simple pattern uses the normal form p = z^d - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy as sp

from .newton import newton_map
from .poly import Poly, poly_from_roots, roots
from .rational import RationalMap, maps_equal

__all__ = [
    "MultiplicityPattern",
    "ClassificationResult",
    "g_polynomial",
    "is_exceptional_family",
    "generic_newton",
    "enumerate_maps",
    "verify_table",
    "TABLE_COUNTS",
]

TABLE_COUNTS = {3: 3, 4: 5, 5: 8}

_DISTINCT_TOL = 1e-8


@dataclass(frozen=True)
class MultiplicityPattern:
    parts: tuple  # descending positive integers summing to d

    def __post_init__(self):
        if tuple(sorted(self.parts, reverse=True)) != tuple(self.parts):
            raise ValueError("parts must be sorted descending")
        if any(m < 1 for m in self.parts):
            raise ValueError("parts must be positive")

    @property
    def d(self):
        return sum(self.parts)

    @property
    def is_generic(self):
        return all(m == 1 for m in self.parts)

    def __str__(self):
        return "+".join(str(m) for m in self.parts)


@dataclass(frozen=True)
class ClassificationResult:
    d: int
    pattern: MultiplicityPattern
    solved_roots: tuple  # ((root, multiplicity), ...)
    p: Poly
    newton: RationalMap
    row_id: str


def g_polynomial(d, root_list):
    """g(z) = d prod(z - a_i) - z sum m_i prod_{j!=i}(z - a_j)."""
    alphas = [r for r, _ in root_list]
    mults = [m for _, m in root_list]
    if sum(mults) != d:
        raise ValueError("multiplicities must sum to d")
    if any(a == 0 for a in alphas):
        raise ValueError("roots must be nonzero")
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if alphas[i] == alphas[j]:
                raise ValueError("roots must be distinct")
    full = poly_from_roots([(a, 1) for a in alphas])
    acc = Poly([0])
    for i, (a, m) in enumerate(root_list):
        part = poly_from_roots([(aj, 1) for j, aj in enumerate(alphas) if j != i])
        acc = acc + m * part
    return d * full - Poly([1, 0]) * acc


def is_exceptional_family(p, tol=1e-8):
    """True when N_{z^d/p} is a polynomial: g from p's roots is a nonzero constant."""
    d = p.degree
    if d < 1:
        raise ValueError("p must be nonconstant")
    if p(0) == 0:
        raise ValueError("p(0) must be nonzero")
    g = g_polynomial(d, roots(p.monic()))
    if g.is_zero:
        return False
    scale = float(np.max(np.abs(g.c)))
    if g.degree == 0:
        return True
    return bool(np.max(np.abs(g.c[:-1])) <= tol * scale) and abs(g.c[-1]) > tol * scale


def generic_newton(d):
    """(z^(d+1) + (d-1) z) / d, the unique map from a generic p."""
    if d < 1:
        raise ValueError("d must be positive")
    c = np.zeros(d + 2, dtype=complex)
    c[0] = 1.0 / d
    c[-2] = (d - 1) / d
    return RationalMap(Poly(c))


def _partitions(d, cap=None):
    if cap is None:
        cap = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, cap), 0, -1):
        for rest in _partitions(d - first, first):
            yield (first,) + rest


def _solve_pattern(d, parts):
    """Solve the g-vanishing conditions for one non-generic pattern.

    Gauge: the first (largest) part is the root pinned at 1; remaining
    multiple parts get symbolic roots; the simple parts are a monic block
    with symbolic coefficients.  Returns numeric root assignments.
    """
    z = sp.Symbol("z")
    multi = [m for m in parts if m > 1]
    k_simple = sum(1 for m in parts if m == 1)
    root_syms = sp.symbols(f"a0:{len(multi) - 1}") if len(multi) > 1 else ()
    coef_syms = sp.symbols(f"c0:{k_simple}") if k_simple else ()
    p = (z - 1) ** multi[0]
    core = (z - 1) ** (multi[0] - 1)
    for sym, m in zip(root_syms, multi[1:]):
        p *= (z - sym) ** m
        core *= (z - sym) ** (m - 1)
    if k_simple:
        block = z ** k_simple + sum(
            coef_syms[j] * z ** j for j in range(k_simple)
        )
        p *= block
    g = sp.cancel((d * p - z * sp.diff(p, z)) / core)
    eqs = sp.Poly(g, z).all_coeffs()[:-1]
    unknowns = list(root_syms) + list(coef_syms)
    if not eqs:
        sols = [dict()]
    elif not unknowns:
        return []  # non-trivial condition with nothing to solve: no maps
    else:
        sols = sp.solve(eqs, unknowns, dict=True)
    results = []
    for sol in sols:
        pinned = [(1.0 + 0j, multi[0])]
        other = [(complex(sp.N(sol[s], 20)), m) for s, m in zip(root_syms, multi[1:])]
        simple = []
        if k_simple:
            coeffs = [1.0] + [
                complex(sp.N(sol[c], 20)) for c in coef_syms[::-1]
            ]
            simple = [(complex(r), 1) for r in np.roots(coeffs)]
        assignment = pinned + other + simple
        if _valid_roots(assignment):
            results.append(tuple(assignment))
    return results


def _valid_roots(assignment):
    pts = [r for r, _ in assignment]
    for i, r in enumerate(pts):
        if abs(r) <= _DISTINCT_TOL:
            return False
        for s in pts[i + 1:]:
            if abs(r - s) <= _DISTINCT_TOL * (1.0 + abs(r)):
                return False
    return True


def enumerate_maps(d):
    """All Newton maps N_{z^d/p} with an exceptional point, for 3 <= d <= 5."""
    if d not in TABLE_COUNTS:
        raise ValueError("enumeration is implemented for d in {3, 4, 5}")
    out = []
    for parts in _partitions(d):
        pattern = MultiplicityPattern(parts)
        if pattern.is_generic:
            p = Poly([1] + [0] * (d - 1) + [-1])  # z^d - 1
            assignments = [tuple((r, m) for r, m in roots(p))]
        else:
            assignments = _solve_pattern(d, parts)
        for idx, assignment in enumerate(assignments):
            p = poly_from_roots(assignment)
            r = RationalMap(Poly([1] + [0] * d), p)
            n = newton_map(r)
            suffix = f"#{idx + 1}" if len(assignments) > 1 else ""
            out.append(
                ClassificationResult(
                    d=d,
                    pattern=pattern,
                    solved_roots=tuple(assignment),
                    p=p,
                    newton=n,
                    row_id=f"d={d} pattern {pattern}{suffix}",
                )
            )
    return out


def _golden_rows(d):
    """Published coefficient vectors (numerator, constant divisor)."""
    s5 = np.sqrt(5.0)
    if d == 3:
        return [
            ("z(z^3+2)/3", Poly([1, 0, 0, 2, 0]) / 3),
            ("z(z^2+z+4)/6", Poly([1, 1, 4, 0]) / 6),
            ("z(z+2)/3", Poly([1, 2, 0]) / 3),
        ]
    if d == 4:
        return [
            ("z(z^4+3)/4", Poly([1, 0, 0, 0, 3, 0]) / 4),
            ("z(z^3+z^2+z+9)/12", Poly([1, 1, 1, 9, 0]) / 12),
            ("z(z^2+3)/4", Poly([1, 0, 3, 0]) / 4),
            ("z(z^2+2z+9)/12", Poly([1, 2, 9, 0]) / 12),
            ("z(z+3)/4", Poly([1, 3, 0]) / 4),
        ]
    if d == 5:
        f3 = Poly([-9j, 3 * s5 - 3j, -s5 - 2j, 8 * s5 - 56j, 0]) / (10 * (s5 - 7j))
        f4 = Poly([9j, 3 * s5 + 3j, -s5 + 2j, 8 * s5 + 56j, 0]) / (10 * (s5 + 7j))
        return [
            ("z(z^5+4)/5", Poly([1, 0, 0, 0, 0, 4, 0]) / 5),
            ("z(z^4+z^3+z^2+z+16)/20", Poly([1, 1, 1, 1, 16, 0]) / 20),
            ("F_3 complex row", f3),
            ("F_4 complex row", f4),
            ("z(z^3+2z^2+3z+24)/30", Poly([1, 2, 3, 24, 0]) / 30),
            ("z(2z^2+z+12)/15", Poly([2, 1, 12, 0]) / 15),
            ("z(z^2+3z+16)/20", Poly([1, 3, 16, 0]) / 20),
            ("z(z+4)/5", Poly([1, 4, 0]) / 5),
        ]
    raise ValueError("golden rows exist for d in {3, 4, 5}")


def verify_table(d, tol=1e-9):
    """Compare enumerate_maps(d) against the published rows.

    Returns {"d": d, "rows": [...], "all_match": bool}; each row records the
    pattern, solved parameters, Newton coefficients, and the match verdict.
    """
    results = enumerate_maps(d)
    golden = _golden_rows(d)
    rows = []
    used = [False] * len(results)
    for label, num in golden:
        target = RationalMap(num)
        hit = None
        for k, res in enumerate(results):
            if not used[k] and maps_equal(res.newton, target, tol=tol):
                hit = k
                used[k] = True
                break
        entry = {
            "golden": label,
            "matched": hit is not None,
        }
        if hit is not None:
            res = results[hit]
            entry["pattern"] = str(res.pattern)
            entry["params"] = [
                [r.real, r.imag, m] for r, m in res.solved_roots
            ]
            entry["newton_coeffs"] = [[c.real, c.imag] for c in res.newton.num.c]
        rows.append(entry)
    return {
        "d": d,
        "count": len(results),
        "expected_count": TABLE_COUNTS[d],
        "rows": rows,
        "all_match": all(r["matched"] for r in rows) and len(results) == TABLE_COUNTS[d],
    }
