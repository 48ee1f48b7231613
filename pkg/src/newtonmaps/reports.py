"""JSON report builders and the built-in verification suites.

All reports carry "schema": "1" and serialize complex numbers as
[re, im] pairs (the string "inf" for the point at infinity), so the
output round-trips without Python-specific types.
"""

from __future__ import annotations

import json

import numpy as np

from . import classify, mcmullen
from .conjugacy import AffineScaling, scale_source
from .dynamics import (
    critical_report,
    disconnection_evidence,
    internal_disk_radius,
    n0_map,
    n1_map,
    n2_map,
)
from .newton import (
    characterize,
    count_attracting,
    exceptional_points,
    expected_degree,
    fixed_points,
    newton_map,
    residue_sum,
)
from .poly import Poly
from .rational import RationalMap, is_infinity, maps_equal

__all__ = [
    "SCHEMA",
    "cnum",
    "dumps",
    "analyze_report",
    "classify_report",
    "table3_data",
    "verify_suite",
    "SUITES",
]

SCHEMA = "1"

_SQ5 = float(np.sqrt(5.0))

# the five distinguished polynomial maps with an exceptional attractor
SPECIAL_MAPS = {
    "F1": Poly([1, 1, 1, 9, 0]) / 12,
    "F2": Poly([1, 1, 1, 1, 16, 0]) / 20,
    "F3": Poly([-9j, 3 * _SQ5 - 3j, -_SQ5 - 2j, 8 * _SQ5 - 56j, 0]) / (10 * (_SQ5 - 7j)),
    "F4": Poly([9j, 3 * _SQ5 + 3j, -_SQ5 + 2j, 8 * _SQ5 + 56j, 0]) / (10 * (_SQ5 + 7j)),
    "F5": Poly([1, 2, 3, 24, 0]) / 30,
}

# published 6-digit non-real critical data: (c, c_star, |c_star|) per map
TABLE3_GOLDEN = {
    "F1": [
        (0.355697 - 1.18874j, 0.115994 - 0.678307j, 0.688153),
        (0.355697 + 1.18874j, 0.115994 + 0.678307j, 0.688153),
    ],
    "F2": [
        (0.692438 - 1.01941j, 0.373036 - 0.68711j, 0.781841),
        (0.692438 + 1.01941j, 0.373036 + 0.68711j, 0.781841),
        (-1.09244 - 0.955874j, -0.69979 - 0.5884j, 0.914285),
        (-1.09244 + 0.955874j, -0.69979 + 0.5884j, 0.914285),
    ],
    "F3": [
        (0.426365 + 0.953382j, 0.253282 + 0.566356j, 0.620412),
        (0.516900 - 1.138604j, 0.237926 - 0.699289j, 0.73866),
        (-1.193265 - 0.373795j, -0.67984 - 0.28885j, 0.73866),
    ],
    "F4": [
        (0.426365 - 0.953382j, 0.253282 - 0.566356j, 0.620412),
        (0.516900 + 1.138604j, 0.237926 + 0.699289j, 0.73866),
        (-1.193265 + 0.373795j, -0.67984 + 0.28885j, 0.73866),
    ],
    "F5": [
        (0.311937 + 1.65158j, 0.01360 + 0.975419j, 0.97551),
        (0.311937 - 1.65158j, 0.01360 - 0.975419j, 0.97551),
    ],
}


def cnum(z):
    """Serialize a sphere point: [re, im] or the string "inf"."""
    if is_infinity(z):
        return "inf"
    z = complex(z)
    return [z.real, z.imag]


def dumps(report):
    """Canonical JSON text: sorted keys, no trailing whitespace."""
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def analyze_report(n_or_r, already_newton=False, tol=1e-6):
    """Full fixed-point analysis of a map (or of the Newton map of R)."""
    r = n_or_r if isinstance(n_or_r, RationalMap) else RationalMap(n_or_r)
    report = {"schema": SCHEMA, "already_newton": bool(already_newton)}
    if already_newton:
        n = r
    else:
        n = newton_map(r)
        report["expected_degree"] = expected_degree(r)
    report["degree"] = n.degree
    report["num"] = [cnum(c) for c in n.num.c]
    report["den"] = [cnum(c) for c in n.den.c]
    if n.degree < 2:
        report["warning"] = "map has degree < 2; dynamics is trivial"
        return report
    recs = fixed_points(n)
    report["fixed_points"] = [
        {
            "location": cnum(rec.location),
            "multiplier": cnum(rec.multiplier),
            "class": rec.klass,
            "residue_index": None if rec.residue_index is None else cnum(rec.residue_index),
        }
        for rec in recs
    ]
    try:
        report["residue_sum"] = cnum(residue_sum(n))
    except ValueError:
        report["residue_sum"] = None
    ch = characterize(n, tol=tol)
    report["characterization"] = {
        "is_newton": ch.is_newton,
        "failure": ch.failure,
        "source_num": [cnum(c) for c in ch.reconstructed.num.c] if ch.reconstructed else None,
        "source_den": [cnum(c) for c in ch.reconstructed.den.c] if ch.reconstructed else None,
    }
    report["exceptional_points"] = [cnum(w) for w in exceptional_points(n)]
    att, rep = count_attracting(n)
    report["attracting_count"] = att
    report["repelling_count"] = rep
    return report


def classify_report(d):
    """Enumeration plus table verification for 3 <= d <= 5."""
    table = classify.verify_table(d)
    table["schema"] = SCHEMA
    return table


def table3_data(cap=50):
    """Critical data of F1..F5 against the published table.

    Returns per-map rows with the computed point/value, the matched golden
    row, the disk radius, and disk-entry steps for real critical points.
    """
    out = {"schema": SCHEMA, "maps": {}, "all_match": True}
    for name, num in SPECIAL_MAPS.items():
        n_map = RationalMap(num)
        rep = critical_report(n_map, disk_cap=cap)
        golden = list(TABLE3_GOLDEN[name])
        rows = []
        ok = True
        for e in rep.entries:
            c = complex(e.point)
            if abs(c.imag) <= 1e-9:
                # real critical point: only the disk-entry bound is published
                steps = 0 if e.inside_internal_disk else e.steps_to_disk
                entered = steps is not None and steps <= cap
                rows.append(
                    {
                        "critical_point": cnum(c),
                        "real": True,
                        "steps_to_disk": steps,
                        "matched": entered,
                    }
                )
                ok = ok and entered
                continue
            hit = None
            for k, (gc, gv, gm) in enumerate(golden):
                if abs(c - gc) <= 5e-6:
                    hit = k
                    break
            matched = False
            if hit is not None:
                gc, gv, gm = golden.pop(hit)
                matched = (
                    abs(complex(e.value) - gv) <= 5e-6
                    and abs(e.value_modulus - gm) <= 5e-6
                )
            inside = bool(e.inside_internal_disk)
            rows.append(
                {
                    "critical_point": cnum(c),
                    "critical_value": cnum(e.value),
                    "value_modulus": e.value_modulus,
                    "inside_disk": inside,
                    "matched": matched and inside,
                }
            )
            ok = ok and matched and inside
        ok = ok and not golden  # every published row must be hit
        out["maps"][name] = {
            "disk_radius": rep.disk_radius,
            "rows": rows,
            "ok": ok,
        }
        out["all_match"] = out["all_match"] and ok
    return out


# -- verification suites ----------------------------------------------


def _suite_tables():
    checks = []
    for d in (3, 4, 5):
        table = classify.verify_table(d)
        checks.append(
            {
                "name": f"classification table d={d}",
                "passed": bool(table["all_match"]),
                "detail": {"count": table["count"], "expected": table["expected_count"]},
            }
        )
    t3 = table3_data()
    checks.append(
        {
            "name": "critical values inside internal disks (F1..F5)",
            "passed": bool(t3["all_match"]),
            "detail": {k: v["ok"] for k, v in t3["maps"].items()},
        }
    )
    return checks


def _suite_mcmullen(rng):
    checks = []
    for m in range(1, 6):
        for n in range(1, 6):
            if m + n <= 2:
                continue
            N = mcmullen.newton_mcmullen(m, n)
            sub = {}
            # m = 1 kills the numerator's top coefficient, dropping the degree
            sub["degree"] = N.degree == (m + n + 1 if m > 1 else m + n)
            sub["symmetry_order"] = mcmullen.symmetry_group_order(m, n) == m + n
            conj_ok = True
            for _ in range(3):
                lam = complex(rng.normal(), rng.normal())
                if abs(lam) < 0.1:
                    lam = lam + 1.0
                sc = mcmullen.lambda_scaling(m, n, lam)
                n_lam = newton_map(mcmullen.mcmullen_map(m, n, lam))
                conj_ok = conj_ok and maps_equal(
                    n_lam, N.conjugate(sc.transform.inverse()), tol=1e-8
                )
            sub["lambda_conjugacy"] = conj_ok
            ev = mcmullen.basin_evidence(m, n, samples=20)
            sub["free_orbits_converge"] = bool(ev["evidence_complete"])
            checks.append(
                {
                    "name": f"mcmullen m={m} n={n}",
                    "passed": all(sub.values()),
                    "detail": sub,
                }
            )
    return checks


def _suite_disconnection():
    checks = []
    cases = (
        [(f"N0 m={m} n={n}", n0_map(m, n)) for m in range(1, 7) for n in range(1, 7)]
        + [(f"N1 n={n}", n1_map(n)) for n in range(2, 10)]
        + [(f"N2 n={n}", n2_map(n)) for n in range(2, 10)]
    )
    for name, n_map in cases:
        try:
            ev = disconnection_evidence(n_map)
            passed = bool(ev["evidence_complete"])
            detail = {
                "critical_count": ev["critical_count"],
                "multiplier": cnum(ev["attractor"].multiplier),
            }
        except ValueError as exc:
            passed = False
            detail = {"error": str(exc)}
        checks.append({"name": name, "passed": passed, "detail": detail})
    return checks


def verify_suite(suite, seed=0):
    """Run one named suite (tables | mcmullen | disconnection | all)."""
    rng = np.random.default_rng(seed)
    if suite == "tables":
        checks = _suite_tables()
    elif suite == "mcmullen":
        checks = _suite_mcmullen(rng)
    elif suite == "disconnection":
        checks = _suite_disconnection()
    elif suite == "all":
        checks = _suite_tables() + _suite_mcmullen(rng) + _suite_disconnection()
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return {
        "schema": SCHEMA,
        "suite": suite,
        "seed": seed,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


SUITES = ("tables", "mcmullen", "disconnection", "all")
