"""The invariant suite behind ``check-all``.

Every check is a zero-argument callable returning ``(passed, detail)``.
Results are keyed by check name and reported sorted by name, so the output
does not depend on scheduling.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import numerics as num
from .errors import DiscGroupsError
from .groups.abelian import abelianize
from .groups.smoothing import verify_smoothing
from .groups.todd_coxeter import group_order
from .lattice import as_params, build_graph, natural_indices, pairing
from .presentation import present, present_zariski


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


def expected_order(n: int, d: int) -> int:
    return (n + 1) * (d - 1) ** n


def known_finite_order(n: int, d: int) -> int | None:
    """Orders of the finite cases: ``d = 2`` and the plane cubic ``(1, 3)``."""
    if d == 2:
        return n + 1
    if (n, d) == (1, 3):
        return 12
    return None


def _graph_checks(p):
    g = build_graph(p)
    verts = natural_indices(p)

    def edges_match_pairing():
        bad = [
            (a, b) for a, b in combinations(verts, 2)
            if (pairing(a, b) != 0) != g.has_edge(a, b)
        ]
        return not bad, f"{len(g.edges)} edges"

    def pairing_values():
        vals = {pairing(a, b) for a, b in combinations(verts, 2)}
        selfs = {pairing(a, a) for a in verts}
        return vals <= {0, -1} and selfs == {-2}, f"off-diagonal {sorted(vals)}"

    def triangles_are_cliques():
        ok = all(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a, b, c in g.triangles
        )
        return ok, f"{len(g.triangles)} triangles"

    def connected():
        return g.is_connected(), f"{len(verts)} vertices"

    return {
        "graph.connected": connected,
        "graph.edges_match_pairing": edges_match_pairing,
        "graph.pairing_values": pairing_values,
        "graph.triangles_are_cliques": triangles_are_cliques,
    }


def _group_checks(p, max_cosets):
    n, d = p.n, p.d
    out = {}

    def counts():
        pres = present(p)
        g = build_graph(p)
        m = len(natural_indices(p))
        ok = (
            pres.count("commutation") == m * (m - 1) // 2 - len(g.edges)
            and pres.count("braid") == len(g.edges)
            and pres.count("triangle") == len(g.triangles)
            and pres.count("asymptote") == m
            and pres.count("projective") == 1
        )
        return ok, " ".join(f"{t}={pres.count(t)}" for t in
                            ("commutation", "braid", "triangle", "asymptote", "projective"))

    def ab_projective():
        ab = abelianize(present(p))
        want = expected_order(n, d)
        ok = ab.free_rank == 0 and list(ab.torsion) == ([want] if want > 1 else [])
        return ok, str(ab)

    def ab_affine():
        ab = abelianize(present(p, "affine"))
        return ab.free_rank == 1 and not ab.torsion, str(ab)

    out["group.relation_counts"] = counts
    out["group.abelianization_projective"] = ab_projective
    out["group.abelianization_affine"] = ab_affine

    if n == 1:
        def zariski():
            a = {(r.tag, r.lhs, r.rhs) for r in present(p).relations
                 if r.tag in ("commutation", "braid")}
            b = {(r.tag, r.lhs, r.rhs) for r in present_zariski(d).relations
                 if r.tag in ("commutation", "braid")}
            ab1, ab2 = abelianize(present(p)), abelianize(present_zariski(d))
            return a == b and str(ab1) == str(ab2), str(ab2)
        out["group.zariski_specialization"] = zariski

    want = known_finite_order(n, d)
    if want is not None:
        def order():
            got = group_order(present(p), max_cosets)
            return got == want, f"{got} (expected {want})"
        out["group.order"] = order

    def cusp():
        r = verify_smoothing(p, "cusp")
        return r.ok, f"kinds={','.join(sorted(r.kinds))} expected Z/{r.expected_order}"
    out["smoothing.cusp"] = cusp

    g = build_graph(p)
    if len(g.vertices) >= 2 and g.ordered_non_edges():
        def node():
            r = verify_smoothing(p, "node")
            certs = ",".join(sorted(r.certificates))
            return r.ok, f"kinds={','.join(sorted(r.kinds))} certificates=[{certs}]"
        out["smoothing.node"] = node
    return out


def _numeric_checks(p, tol):
    n, d = p.n, p.d
    out = {}

    def degrees():
        res = num.degree_identities(p)
        failed = [c.name for c in res if not c.passed]
        return not failed, "failed: " + ",".join(failed) if failed else f"deg_p={num.degree_report(p).deg_p}"

    def euler():
        res = num.euler_identities(p)
        return all(res), "; ".join(c.detail for c in res)

    out["degrees.identities"] = degrees
    out["degrees.euler"] = euler

    v = [10.0 ** (-2 * k) for k in range(n)]
    if (d - 1) ** n <= 4096:
        def distinct():
            cvs = num.hl_critical_values(d, v)
            return len(cvs) == (d - 1) ** n and num.all_distinct(cvs, tol), f"{len(cvs)} values"

        def twist():
            cvs = num.hl_critical_values(d, v)
            res = [num.check_twist(cvs, k, tol) for k in range(1, n + 1)]
            return all(res), "; ".join(r.detail for r in res)

        out["critical.distinct"] = distinct
        out["critical.twist"] = twist
        if n >= 2:
            def circles():
                r = num.check_circles(num.hl_critical_values(d, v), tol)
                return r.passed, r.detail
            out["critical.circles"] = circles

    def gradient():
        lams = tuple(Fraction(k + 1, k + 2) for k in range(n))
        pts = [num.CoreFamilyPoint(d, z, e, 0, lams, lams)
               for z, e in ((1, 0), (0, 1), (1, 1), (Fraction(1, 3), Fraction(2, 3)))]
        ok = all(all(c == 0 for c in num.core_family_gradient(pt)) for pt in pts)
        return ok, f"{len(pts)} points"
    out["critical.core_gradient"] = gradient
    return out


def build_checks(params, *, tol: float = 1e-9,
                 max_cosets: int = 10**4) -> dict[str, Callable[[], tuple[bool, str]]]:
    p = as_params(params)
    p.check_size()
    checks = {}
    checks.update(_graph_checks(p))
    checks.update(_group_checks(p, max_cosets))
    checks.update(_numeric_checks(p, tol))
    return checks


def _run_one(name, fn) -> Outcome:
    try:
        ok, detail = fn()
    except DiscGroupsError as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Outcome(name, bool(ok), detail)


def run_checks(params, *, tol: float = 1e-9, max_cosets: int = 10**4,
               workers: int = 1) -> list[Outcome]:
    checks = build_checks(params, tol=tol, max_cosets=max_cosets)
    names = sorted(checks)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda k: _run_one(k, checks[k]), names))
    else:
        results = [_run_one(k, checks[k]) for k in names]
    return results


def summary_json(params, outcomes: list[Outcome]) -> str:
    p = as_params(params)
    data = {
        "n": p.n,
        "d": p.d,
        "passed": all(o.passed for o in outcomes),
        "checks": [{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes],
    }
    return json.dumps(data, indent=2, sort_keys=True)
