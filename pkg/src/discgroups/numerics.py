"""Degree data of the discriminant and critical values of the perturbed Fermat family.

Everything integral is computed exactly.  Critical values are complex floats.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConsistencyError, InvalidInput
from .lattice import MultiIndex, as_params, label, natural_indices

# Euler numbers


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ConsistencyError(f"{a} is not divisible by {b}")
    return q


def euler_smooth(n: int, d: int) -> int:
    """Euler number of a smooth degree ``d`` hypersurface in ``P^n`` (``n >= 0``)."""
    if n < 0 or d < 1:
        raise InvalidInput(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    return n + 1 + _exact_div((1 - d) ** (n + 1) - 1, d)


def euler_ci(n: int, d: int) -> int:
    """Euler number of a smooth complete intersection of two degree ``d`` hypersurfaces."""
    if n < 1 or d < 1:
        raise InvalidInput(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    return n + 1 + (1 - d) ** n * (n - 1) + 2 * _exact_div((1 - d) ** n - 1, d)


@dataclass(frozen=True)
class DegreeReport:
    n: int
    d: int
    deg_p: int
    deg_z_p: int
    lead_exponent: int
    deg_q: int
    wdeg_p: int
    wdeg_q: int
    deg_v_q: int
    deg_c: int

    FIELDS = ("deg_p", "deg_z_p", "lead_exponent", "deg_q", "wdeg_p", "wdeg_q",
              "deg_v_q", "deg_c")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_table(self) -> str:
        width = max(len(f) for f in self.FIELDS)
        rows = [f"{'n':<{width}}  {self.n}", f"{'d':<{width}}  {self.d}"]
        rows += [f"{f:<{width}}  {getattr(self, f)}" for f in self.FIELDS]
        return "\n".join(rows) + "\n"


def degree_report(params) -> DegreeReport:
    p = as_params(params)
    n, d = p.n, p.d
    m = (d - 1) ** n
    deg_p = (n + 1) * m
    deg_z_p = m
    # leading coefficient p_{n-1,d}^k, degree matching k*n(d-1)^(n-1) + m = deg_p
    lead = _exact_div(deg_p - m, n * (d - 1) ** (n - 1))
    deg_q = (2 * n + 1) * m * (m - 1)
    wdeg_p = d * m
    wdeg_q = d * m * (m - 1)
    deg_v_q = d * (d - 1) ** (n - 1) * (m - 1)
    deg_c = (2 * n * (d - 1) - 1) * (d - 1) ** (n - 1) * (m - 1)
    return DegreeReport(n, d, deg_p, deg_z_p, lead, deg_q, wdeg_p, wdeg_q, deg_v_q, deg_c)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed


def euler_identities(params) -> list[CheckResult]:
    """Recover the two discriminant degrees from Euler number bookkeeping.

    A generic pencil gives ``e(P^n) = 2 e_{n,d} - e_{n;d,d} + (-1)^n deg p``
    and a pencil through ``x_0^d`` gives
    ``e(P^n) = e(P^{n-1}) + e_{n,d} - e_{n-1,d} + (-1)^n deg_z p``.
    """
    p = as_params(params)
    n, d = p.n, p.d
    e, eci, e_prev = euler_smooth(n, d), euler_ci(n, d), euler_smooth(n - 1, d)
    rep = degree_report(p)
    sign = (-1) ** n
    got_p = sign * ((n + 1) - 2 * e + eci)
    got_z = sign * ((n + 1) - n - e + e_prev)
    out = [
        CheckResult("euler_deg_p", got_p == rep.deg_p, f"{got_p} vs {rep.deg_p}"),
        CheckResult("euler_deg_z_p", got_z == rep.deg_z_p, f"{got_z} vs {rep.deg_z_p}"),
    ]
    return out


def degree_identities(params) -> list[CheckResult]:
    """Cross-identities between the degrees, all exact."""
    r = degree_report(params)
    d = r.d
    checks = [
        ("lead_exponent", r.lead_exponent == d - 1),
        ("deg_q_sylvester", r.deg_q == (r.deg_z_p - 1) * (2 * r.deg_p - r.deg_z_p)),
        ("wdeg_q", r.wdeg_q == d * r.deg_z_p * (r.deg_z_p - 1)),
        ("deg_c", r.deg_c == r.deg_q - r.deg_v_q),
        ("deg_v_q_weight", r.deg_v_q * (d - 1) == r.wdeg_q),
        ("wdeg_p", r.wdeg_p == d * r.deg_z_p),
    ]
    return [CheckResult(name, ok) for name, ok in checks]


# critical values


@dataclass(frozen=True)
class CriticalValueSet:
    d: int
    v: tuple[complex, ...]
    values: dict[MultiIndex, complex]

    @property
    def n(self) -> int:
        return len(self.v)

    def __len__(self):
        return len(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "re", "im"])
        for i in sorted(self.values):
            z = self.values[i]
            w.writerow([label(i), repr(z.real), repr(z.imag)])
        return buf.getvalue()


def root_of_unity(d: int, k: int = 1) -> complex:
    return cmath.exp(2j * math.pi * k / d)


def scaled_power(v: complex, d: int) -> complex:
    """``v^(d/(d-1))`` taken as the principal ``(d-1)``-th root of ``v^d``.

    This depends on ``v^d`` only, so it does not change when ``v`` is
    multiplied by a ``d``-th root of unity, and it agrees with the real
    power for positive real ``v``.
    """
    if v == 0:
        raise InvalidInput("parameters must be nonzero")
    w = complex(v) ** d
    if d == 2:
        return w
    r, phi = abs(w), cmath.phase(w)
    return cmath.rect(r ** (1.0 / (d - 1)), phi / (d - 1))


def hl_critical_values(d: int, v: Sequence[complex]) -> CriticalValueSet:
    """Critical values ``(d-1) * sum_k xi^(i_k) * v_k^(d/(d-1))`` for all multi-indices."""
    if not isinstance(d, int) or d < 2:
        raise InvalidInput(f"d must be an integer >= 2, got {d!r}")
    v = tuple(complex(x) for x in v)
    if not v:
        raise InvalidInput("need at least one parameter")
    w = [scaled_power(x, d) for x in v]
    xi = [root_of_unity(d, k) for k in range(d)]
    values = {
        i: (d - 1) * sum(xi[ik] * wk for ik, wk in zip(i, w))
        for i in natural_indices((len(v), d))
    }
    return CriticalValueSet(d, v, values)


def min_separation(cvs: CriticalValueSet) -> float:
    vals = list(cvs.values.values())
    best = math.inf
    for a in range(len(vals)):
        for b in range(a + 1, len(vals)):
            best = min(best, abs(vals[a] - vals[b]))
    return best


def all_distinct(cvs: CriticalValueSet, tol: float = 1e-9) -> bool:
    scale = max((abs(z) for z in cvs.values.values()), default=1.0) or 1.0
    return min_separation(cvs) > tol * scale


def check_circles(cvs: CriticalValueSet, tol: float = 1e-9) -> CheckResult:
    """Each value sits on the circle of radius ``(d-1)|v_n|^(d/(d-1))`` around its parent.

    The deviation is measured relative to the radius.  Subtracting the
    parent value loses about ``eps * |z|`` in absolute terms, which is allowed
    on top of ``tol * radius`` so tiny radii do not fail on rounding alone.
    """
    if cvs.n < 2:
        raise InvalidInput("circle check needs at least two parameters")
    parent = hl_critical_values(cvs.d, cvs.v[:-1])
    radius = (cvs.d - 1) * abs(cvs.v[-1]) ** (cvs.d / (cvs.d - 1))
    worst, ok = 0.0, True
    for i, z in cvs.values.items():
        dev = abs(abs(z - parent.values[i[:-1]]) - radius)
        worst = max(worst, dev / radius)
        ok &= dev <= tol * radius + 64 * sys.float_info.epsilon * abs(z)
    return CheckResult("circles", ok, f"max relative deviation {worst:.3e}")


def match_sets(a: Sequence[complex], b: Sequence[complex], tol: float) -> tuple[bool, float]:
    """Greedy nearest-neighbour matching; each point of ``b`` is used once."""
    if len(a) != len(b):
        return False, math.inf
    scale = max((abs(z) for z in list(a) + list(b)), default=1.0) or 1.0
    free = list(b)
    worst = 0.0
    for z in a:
        k = min(range(len(free)), key=lambda j: abs(free[j] - z))
        worst = max(worst, abs(free[k] - z) / scale)
        free.pop(k)
    return worst <= tol, worst


def check_twist(cvs: CriticalValueSet, kappa: int, tol: float = 1e-9, power: int = 1) -> CheckResult:
    """Rotating ``v_kappa`` by ``xi^power`` permutes the critical values."""
    if not 1 <= kappa <= cvs.n:
        raise InvalidInput(f"kappa must lie in [1, {cvs.n}]")
    v = list(cvs.v)
    v[kappa - 1] = v[kappa - 1] * root_of_unity(cvs.d, power)
    twisted = hl_critical_values(cvs.d, v)
    ok, worst = match_sets(list(cvs.values.values()), list(twisted.values.values()), tol)
    return CheckResult(f"twist_{kappa}", ok, f"max relative mismatch {worst:.3e}")


# the core family


@dataclass(frozen=True)
class CoreFamilyPoint:
    d: int
    zeta: Fraction
    eta: Fraction
    lam: Fraction
    lams: tuple[Fraction, ...]
    x: tuple[Fraction, ...]

    def __post_init__(self):
        conv = Fraction
        object.__setattr__(self, "zeta", conv(self.zeta))
        object.__setattr__(self, "eta", conv(self.eta))
        object.__setattr__(self, "lam", conv(self.lam))
        object.__setattr__(self, "lams", tuple(conv(t) for t in self.lams))
        object.__setattr__(self, "x", tuple(conv(t) for t in self.x))
        if len(self.lams) != len(self.x) or not self.x:
            raise InvalidInput("lams and x must have the same positive length")
        if self.d < 2:
            raise InvalidInput("d must be >= 2")


def core_family_value(pt: CoreFamilyPoint) -> Fraction:
    d, n = pt.d, len(pt.x)
    x, lk = pt.x, pt.lams
    y, ln = x[-1], lk[-1]
    s1 = y**d - d * ln ** (d - 1) * y + sum(
        x[k] ** d - d * lk[k] ** (d - 1) * x[k] for k in range(n - 1)
    )
    s2 = (d - 1) ** 2 * y**d - d * (d - 1) * ln * y ** (d - 1) + sum(
        (d - 1) * x[k] ** d - d * lk[k] * x[k] ** (d - 1) for k in range(n - 1)
    )
    s3 = d * (d - 1) * sum(lk[k] ** (d - 1) * x[k] for k in range(n - 1)) * y ** (d - 1)
    return pt.zeta * s1 + pt.eta * s2 - pt.lam * s3


def core_family_gradient(pt: CoreFamilyPoint) -> tuple[Fraction, ...]:
    """Exact gradient of the core family in ``x_1, ..., x_{n-1}, y = x_n``."""
    d, n = pt.d, len(pt.x)
    x, lk = pt.x, pt.lams
    y, ln = x[-1], lk[-1]
    mixed = sum(lk[k] ** (d - 1) * x[k] for k in range(n - 1))
    grad = []
    for k in range(n - 1):
        g = pt.zeta * (d * x[k] ** (d - 1) - d * lk[k] ** (d - 1))
        g += pt.eta * (d * (d - 1) * x[k] ** (d - 1) - d * (d - 1) * lk[k] * x[k] ** (d - 2))
        g -= pt.lam * d * (d - 1) * lk[k] ** (d - 1) * y ** (d - 1)
        grad.append(g)
    g = pt.zeta * (d * y ** (d - 1) - d * ln ** (d - 1))
    g += pt.eta * (d * (d - 1) ** 2 * y ** (d - 1) - d * (d - 1) ** 2 * ln * y ** (d - 2))
    g -= pt.lam * d * (d - 1) ** 2 * mixed * y ** (d - 2)
    grad.append(g)
    return tuple(grad)
