"""Acceptance criteria, one test each, with their tolerances and time limits."""

import subprocess
import sys
import time
from fractions import Fraction as F
from itertools import combinations

from discgroups import Word, present, present_zariski
from discgroups import numerics as num
from discgroups.groups.abelian import abelianize
from discgroups.groups.homomorphism import FiniteImage, check_homomorphism, perm_from_cycles
from discgroups.groups.smoothing import smoothing_quotient, verify_smoothing
from discgroups.groups.todd_coxeter import coset_enumerate
from discgroups.lattice import build_graph
from discgroups.words import canonical_relator, from_text, power

from conftest import ACCEPTANCE_LINES, small_params


def report(number, title, failures, elapsed=None, limit=None):
    if limit is not None and elapsed > limit:
        failures = list(failures) + [f"took {elapsed:.2f}s, limit {limit}s"]
    timing = f" ({elapsed:.2f}s)" if elapsed is not None else ""
    status = "PASS" if not failures else "FAIL"
    line = f"[{number}] {status} {title}{timing}"
    if failures:
        line += ": " + "; ".join(map(str, failures[:5]))
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def w(s):
    return from_text(" ".join(f"t{c}" for c in s))


def test_1_graph_structure():
    t0 = time.perf_counter()
    bad = []
    for d in range(2, 13):
        g = build_graph((1, d))
        path = {frozenset({(k,), (k + 1,)}) for k in range(1, d - 1)}
        if len(g.vertices) != d - 1 or g.edges != path or g.triangles:
            bad.append(f"Gamma_1,{d} is not a path")
    g = build_graph((2, 4))
    if (len(g.vertices), len(g.edges)) != (9, 16):
        bad.append("Gamma_2,4 counts")
    g = build_graph((3, 3))
    if (len(g.vertices), len(g.edges), len(g.triangles), len(g.ordered_non_edges())) != (8, 19, 18, 9):
        bad.append("Gamma_3,3 counts")
    p = present((3, 3))
    comm = {frozenset(r.lhs.generators) for r in p.by_tag("commutation")}
    if comm != {frozenset(map(int, s)) for s in "23 25 27 35 36 45 46 47 67".split()}:
        bad.append("commuting pairs differ from the printed list")
    tris = {frozenset(r.lhs.generators) for r in p.by_tag("triangle")}
    printed = "124 126 128 134 137 138 148 156 157 158 168 178 248 268 348 378 568 578"
    if tris != {frozenset(map(int, s)) for s in printed.split()}:
        bad.append("triangle triples differ from the printed list")
    report(1, "graph structure", bad, time.perf_counter() - t0, 1.0)


def test_2_zariski_specialization():
    bad = []
    for d in range(2, 7):
        ours = present((1, d))
        z = present_zariski(d)
        fam = ("commutation", "braid")
        a = {(r.tag, r.lhs, r.rhs) for r in ours.relations if r.tag in fam}
        b = {(r.tag, r.lhs, r.rhs) for r in z.relations if r.tag in fam}
        if a != b:
            bad.append(f"d={d}: families differ")
        if ours.count("triangle"):
            bad.append(f"d={d}: triangle relations present")
    report(2, "Zariski specialization", bad)


def test_3_finite_orders():
    bad = []
    cases = [((1, 2), 2), ((1, 3), 12)] + [((n, 2), n + 1) for n in range(1, 9)]
    worst = 0.0
    for params, want in cases:
        t0 = time.perf_counter()
        t = coset_enumerate(present(params), max_cosets=10**4)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not t.complete or t.index != want:
            bad.append(f"{params}: got {t.index}, want {want}")
        if dt >= 5:
            bad.append(f"{params}: {dt:.2f}s")
    report(3, "finite orders by coset enumeration", bad, worst)


def test_4_abelianization():
    t0 = time.perf_counter()
    bad = []
    for n, d in small_params(64, n_max=6):
        want = (n + 1) * (d - 1) ** n
        ab = abelianize(present((n, d)), certify=True)
        if ab.free_rank != 0 or list(ab.torsion) != ([want] if want > 1 else []):
            bad.append(f"({n},{d}) projective: {ab}")
        ab = abelianize(present((n, d), "affine"), certify=True)
        if ab.free_rank != 1 or ab.torsion:
            bad.append(f"({n},{d}) affine: {ab}")
    report(4, "abelianization with certified SNF", bad, time.perf_counter() - t0, 30.0)


def test_5_cubic_curve_golden():
    p = present((2, 3))
    bad = []
    if not p.contains_relation(w("23"), w("32")) or p.count("commutation") != 1:
        bad.append("commutation (23)")
    braids = {frozenset(r.lhs.generators) for r in p.by_tag("braid")}
    expected = {frozenset(map(int, s)) for s in ("12", "13", "24", "34", "14")}
    if braids != expected:
        bad.append(f"braid pairs {sorted(map(sorted, braids))}")
    for ij in ("12", "13", "24", "34"):
        i, j = ij
        if not p.contains_relation(w(i + j + i), w(j + i + j)):
            bad.append(f"braid ({ij})")
    tris = {frozenset(r.lhs.generators) for r in p.by_tag("triangle")}
    if tris != {frozenset((1, 2, 4)), frozenset((1, 3, 4))}:
        bad.append("triangles")
    if not p.contains_relation(w("4324321"), w("1432432")):
        bad.append("asymptote relation for t1")
    (proj,) = p.by_tag("projective")
    if proj.lhs != w("432121433142") or len(proj.lhs) != 12:
        bad.append("projective word")
    report(5, "cubic curve golden relations", bad)


def test_6_smoothing_quotients():
    bad = []
    for n, d in small_params(64, n_max=6):
        q = smoothing_quotient((n, d), "cusp")
        want = {Word([1] * ((n + 1) * (d - 1) ** n))}
        if q.generators != (1,) or {canonical_relator(r) for r in q.relators} != want:
            bad.append(f"cusp ({n},{d})")
    q = smoothing_quotient((2, 3), "node")
    got = [(r.lhs, r.rhs) for r in q.relations]
    if q.generators != (1, 2) or got != [(w("121"), w("212")), (power(w("21"), 6), Word())]:
        bad.append(f"node (2,3): {got}")
    A, B = ((1, 1), (0, 1)), ((1, 0), (-1, 1))
    sl = FiniteImage("sl2z", {1: A, 2: B})
    cert = check_homomorphism(q, sl)
    if not cert.valid or cert.image_abelian:
        bad.append("SL2Z certificate")
    if sl.evaluate(power(w("21"), 3)) != ((-1, 0), (0, -1)):
        bad.append("(t2t1)^3 != -I")
    if not verify_smoothing((2, 3), "node").ok:
        bad.append("verify (2,3) node")
    q14 = smoothing_quotient((1, 4), "node")
    perm = FiniteImage("perm", {1: perm_from_cycles(3, (1, 2)), 2: perm_from_cycles(3, (2, 3))})
    cert = check_homomorphism(q14, perm)
    if not cert.valid or cert.image_abelian:
        bad.append("(1,4) permutation certificate")
    if not check_homomorphism(q14, FiniteImage("psl2z", {1: A, 2: B})).valid:
        bad.append("(1,4) PSL2Z matrices")
    if not verify_smoothing((1, 4), "node").ok:
        bad.append("verify (1,4) node")
    report(6, "smoothing quotients", bad)


def test_7_degree_identities():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 7):
        for d in range(2, 10):
            r = num.degree_report((n, d))
            m = (d - 1) ** n
            ok = (
                r.deg_p == (n + 1) * m
                and r.deg_z_p == m
                and r.lead_exponent == d - 1
                and r.deg_q == (r.deg_z_p - 1) * (2 * r.deg_p - r.deg_z_p)
                and all(num.euler_identities((n, d)))
                and all(num.degree_identities((n, d)))
            )
            if not ok:
                bad.append((n, d))
    report(7, "degree and Euler identities", bad, time.perf_counter() - t0, 1.0)


def test_8_critical_value_numerics():
    bad = []
    tol = 1e-9
    base = [1, 1e-2, 1e-4]
    for d in (3, 4, 5):
        for n in (1, 2, 3):
            cvs = num.hl_critical_values(d, base[:n])
            vals = list(cvs.values.values())
            if len(vals) != (d - 1) ** n:
                bad.append(f"d={d} n={n}: count")
            scale = max(abs(z) for z in vals)
            if any(abs(a - b) <= tol * scale for a, b in combinations(vals, 2)):
                bad.append(f"d={d} n={n}: coincident values")
            if n >= 2 and not num.check_circles(cvs, tol):
                bad.append(f"d={d} n={n}: circles")
            for k in range(1, n + 1):
                if not num.check_twist(cvs, k, tol):
                    bad.append(f"d={d} n={n}: twist {k}")
    choices = [
        (3, F(1), F(1), (F(1), F(2))),
        (4, F(2, 3), F(5, 7), (F(1, 2), F(-3), F(4, 5))),
        (5, F(1), F(0), (F(7, 3),)),
        (2, F(-1, 4), F(9), (F(2), F(1, 9))),
        (6, F(3, 2), F(1, 11), (F(-1, 2), F(5, 6), F(2), F(1, 3))),
    ]
    for d, zeta, eta, lams in choices:
        pt = num.CoreFamilyPoint(d, zeta, eta, 0, lams, lams)
        g = num.core_family_gradient(pt)
        if not all(isinstance(c, F) and c == 0 for c in g):
            bad.append(f"gradient at d={d}, lams={lams}: {g}")
    report(8, "critical value geometry and core gradient", bad)


def test_9_determinism():
    cmd = [sys.executable, "-m", "discgroups", "check-all", "2", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    bad = []
    if a.returncode != 0 or b.returncode != 0:
        bad.append(f"exit codes {a.returncode}, {b.returncode}")
    if a.stdout != b.stdout or not a.stdout:
        bad.append("outputs differ")
    report(9, "deterministic check-all output", bad)
