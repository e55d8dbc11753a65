"""Command line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import numerics as num
from .checks import run_checks, summary_json
from .errors import DiscGroupsError, InvalidInput, UnsupportedInput
from .groups.abelian import abelianize
from .groups.smoothing import smoothing_quotient, verify_smoothing
from .groups.todd_coxeter import DEFAULT_MAX_COSETS, coset_enumerate
from .lattice import Params, build_graph
from .presentation import present

OK, CHECK_FAILED, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _params(args) -> Params:
    return Params(args.n, args.d)


def _parse_complex(s: str) -> complex:
    try:
        return complex(s)
    except ValueError:
        pass
    try:
        return complex(float(Fraction(s)))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None


def _emit_checks(lines, out) -> int:
    for name, ok, detail in lines:
        tail = f"  {detail}" if detail else ""
        print(f"{'PASS' if ok else 'FAIL'} {name}{tail}", file=out)
    return OK if all(ok for _, ok, _ in lines) else CHECK_FAILED


def cmd_present(args, out):
    pres = present(_params(args), "affine" if args.affine else "projective")
    text = {"json": lambda: pres.to_json(indent=2) + "\n",
            "text": pres.to_text, "cas": pres.to_cas}[args.format]()
    out.write(text)
    return OK


def cmd_graph(args, out):
    g = build_graph(_params(args))
    if args.dot:
        out.write(g.to_dot())
    else:
        print(f"vertices {len(g.vertices)}", file=out)
        print(f"edges {len(g.edges)}", file=out)
        print(f"triangles {len(g.triangles)}", file=out)
    return OK


def cmd_abelianize(args, out):
    ab = abelianize(present(_params(args), "affine" if args.affine else "projective"))
    print(ab, file=out)
    return OK


def cmd_order(args, out):
    table = coset_enumerate(present(_params(args)), max_cosets=args.max_cosets)
    if not table.complete:
        print(f"coset enumeration exceeded {args.max_cosets} cosets", file=sys.stderr)
        return CHECK_FAILED
    print(table.index, file=out)
    return OK


def cmd_smooth(args, out):
    p = _params(args)
    q = smoothing_quotient(p, args.kind)
    out.write(q.to_text())
    if not args.verify:
        return OK
    rep = verify_smoothing(p, args.kind)
    lines = [("abelianization", rep.abelianization_ok, f"Z/{rep.expected_order}")]
    for target, cert in sorted(rep.certificates.items()):
        lines.append((f"certificate.{target}", cert.valid and not cert.image_abelian,
                      "nonabelian image" if not cert.image_abelian else "abelian image"))
    for name, ok in sorted(rep.extra.items()):
        lines.append((name, ok, ""))
    return _emit_checks(lines, out)


def cmd_degrees(args, out):
    rep = num.degree_report(_params(args))
    out.write(rep.to_json() + "\n" if args.json else rep.to_table())
    return OK


def cmd_hl_values(args, out):
    cvs = num.hl_critical_values(args.d, args.v)
    if not args.check:
        out.write(cvs.to_csv())
        return OK
    if args.check == "circles":
        r = num.check_circles(cvs, args.tol)
        lines = [(r.name, r.passed, r.detail)]
    else:
        lines = [(r.name, r.passed, r.detail)
                 for r in (num.check_twist(cvs, k, args.tol) for k in range(1, cvs.n + 1))]
    return _emit_checks(lines, out)


def cmd_check_all(args, out):
    p = _params(args)
    outcomes = run_checks(p, tol=args.tol, max_cosets=args.max_cosets, workers=args.workers)
    for o in outcomes:
        print(o.line(), file=out)
    if args.json:
        print(summary_json(p, outcomes), file=out)
    return OK if all(o.passed for o in outcomes) else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="discgroups", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def nd(p):
        p.add_argument("n", type=int)
        p.add_argument("d", type=int)
        return p

    p = nd(sub.add_parser("present", help="print the presentation"))
    p.add_argument("--affine", action="store_true")
    p.add_argument("--format", choices=("json", "text", "cas"), default="text")
    p.set_defaults(func=cmd_present)

    p = nd(sub.add_parser("graph", help="intersection graph"))
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_graph)

    p = nd(sub.add_parser("abelianize", help="abelian invariants"))
    p.add_argument("--affine", action="store_true")
    p.set_defaults(func=cmd_abelianize)

    p = nd(sub.add_parser("order", help="group order by coset enumeration"))
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_order)

    p = nd(sub.add_parser("smooth", help="partial smoothing quotient"))
    p.add_argument("--kind", choices=("cusp", "node", "both"), required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_smooth)

    p = nd(sub.add_parser("degrees", help="degree data of the discriminant"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("hl-values", help="critical values of the perturbed Fermat polynomial")
    p.add_argument("d", type=int)
    p.add_argument("v", nargs="+", type=_parse_complex)
    p.add_argument("--check", choices=("circles", "twist"))
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_hl_values)

    p = nd(sub.add_parser("check-all", help="run the invariant suite"))
    p.add_argument("--json", action="store_true", help="also print a JSON summary")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-cosets", type=int, default=10**4)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_check_all)
    return ap


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else OK
    try:
        return args.func(args, out)
    except (InvalidInput, UnsupportedInput) as exc:
        print(f"discgroups: error: {exc}", file=sys.stderr)
        return USAGE
    except DiscGroupsError as exc:
        print(f"discgroups: internal check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
