"""Command-line front end: compute, verify, table, and suite verbs.

Exit codes are the machine contract: 0 pass/success, 1 verification
failure, 2 usage error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import eulerian, permstat, polytopes, symfun
from .errors import ResourceLimitError, UsageError, ValidationError
from .eulerian import FamilyTag
from .exactpoly import IntPoly1, QTPoly, QTRPoly, q_binomial
from .reports import Report

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _require(args, names):
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise UsageError(f"missing required parameter(s): {', '.join('--' + n for n in missing)}")


def _m_or_n(args):
    return args.m if args.m is not None else args.n


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

COMPUTE_TARGETS = {
    "eulerian": ("classical Eulerian polynomial in t", ("n",),
                 lambda a: (eulerian.eulerian_poly(a.n, a.bound), "t")),
    "binomial-eulerian": ("binomial-Eulerian polynomial in t", ("n",),
                          lambda a: (eulerian.binomial_eulerian_poly(a.n, a.bound), "t")),
    "q-eulerian": ("q-Eulerian polynomial in q and t", ("n",),
                   lambda a: (eulerian.q_eulerian(a.n, a.bound), None)),
    "q-binomial-eulerian": ("q-binomial-Eulerian polynomial", ("n",),
                            lambda a: (eulerian.q_binomial_eulerian(a.n, a.bound), None)),
    "q-eulerian-fix": ("fixed-point refinement in q, t, r", ("n",),
                       lambda a: (eulerian.q_eulerian_fix(a.n, a.bound), None)),
    "derangement": ("derangement polynomial in q and t", ("n",),
                    lambda a: (eulerian.derangement_poly(a.n, a.bound), None)),
    "q-binomial": ("Gaussian binomial coefficient", ("n", "k"),
                   lambda a: (q_binomial(a.n, a.k), "q")),
    "sym-eulerian": ("symmetric Eulerian family member", ("n",),
                     lambda a: (symfun.eulerian_symmetric(a.n, _m_or_n(a)), None)),
    "sym-binomial-eulerian": ("symmetric binomial-Eulerian family member", ("n",),
                              lambda a: (symfun.binomial_eulerian_symmetric(a.n, _m_or_n(a)), None)),
    "sym-derangement": ("symmetric derangement family member", ("n",),
                        lambda a: (symfun.derangement_symmetric(a.n, _m_or_n(a)), None)),
    "permutohedron-h": ("h-polynomial of the dual permutohedron", ("n",),
                        lambda a: (polytopes.h_polynomial(
                            polytopes.dual_permutohedron(a.n), a.n - 1), "t")),
    "stellohedron-h": ("h-polynomial of the dual stellohedron", ("n",),
                       lambda a: (polytopes.h_polynomial(
                           polytopes.dual_stellohedron(a.n), a.n), "t")),
    "cross-polytope-h": ("h-polynomial of the cross-polytope boundary", ("n",),
                         lambda a: (polytopes.h_polynomial(
                             polytopes.cross_polytope_boundary(a.n), a.n), "t")),
}


def _poly_text(p, var) -> str:
    if isinstance(p, IntPoly1):
        return p.to_text(var or "t")
    return p.to_text()


def _poly_json(p):
    return p.to_json()


def _poly_csv_cells(p, var) -> list[str]:
    if isinstance(p, IntPoly1):
        return [str(c) for c in p.coeffs]
    if isinstance(p, QTPoly):
        return [c.to_text("q") for c in p.t_coeffs]
    if isinstance(p, QTRPoly):
        return [p.to_text()]
    return [c.to_text() for c in p.t_coeffs]


def _handle_compute(args) -> int:
    if args.target == "gamma-class":
        return _compute_gamma_class(args)
    entry = COMPUTE_TARGETS.get(args.target)
    if entry is None:
        raise UsageError(f"unknown compute target {args.target!r}")
    _desc, required, builder = entry
    _require(args, required)
    value, var = builder(args)
    if args.format == "text":
        print(_poly_text(value, var))
    elif args.format == "json":
        print(json.dumps({"target": args.target,
                          "parameters": _param_dict(args, required + ("m", "k")),
                          "polynomial": _poly_json(value)}))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(_poly_csv_cells(value, var))
    return EXIT_PASS


GAMMA_CLASS_BUILDERS = {
    "eulerian": permstat.eulerian_gamma_class,
    "binomial-eulerian": permstat.binomial_eulerian_gamma_class,
    "derangement": permstat.derangement_gamma_class,
    "prefix-max": permstat.max_prefix_class,
}


def _compute_gamma_class(args) -> int:
    _require(args, ("family", "n", "k"))
    builder = GAMMA_CLASS_BUILDERS.get(args.family)
    if builder is None:
        raise UsageError(f"unknown class family {args.family!r}")
    spec = builder(args.n, args.k)
    members = permstat.enumerate_class(spec, args.bound)
    poly = permstat.class_inv_poly(spec, args.bound)
    if args.format == "json":
        print(json.dumps({"family": args.family, "n": args.n, "k": args.k,
                          "permutations": [p.one_line() for p in members],
                          "inv_polynomial": poly.to_json()}))
    else:
        print(" ".join(p.one_line() for p in members))
        print(poly.to_text("q"))
    return EXIT_PASS


def _param_dict(args, names):
    out = {}
    for n in names:
        v = getattr(args, n.replace("-", "_"), None)
        if v is not None:
            out[n] = v
    return out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _family_tag(name: str) -> FamilyTag:
    try:
        return FamilyTag(name)
    except ValueError:
        raise UsageError(f"unknown family {name!r}; pick from "
                         f"{[f.value for f in FamilyTag]}") from None


def _verify_gamma(args):
    _require(args, ("family", "n"))
    return eulerian.verify_gamma_theorem(_family_tag(args.family), args.n, args.bound)


def _verify_cgk(args):
    _require(args, ("r", "s"))
    return eulerian.verify_cgk(args.r, args.s, args.q_level, args.bound)


def _verify_expq(args):
    _require(args, ("which",))
    return eulerian.verify_expq_identity(args.which, args.order, args.bound)


def _verify_gal(args):
    _require(args, ("complex_name", "n"))
    name, n = args.complex_name, args.n
    if name == "permutohedron":
        report = polytopes.gal_check(polytopes.dual_permutohedron(n), n - 1)
    elif name == "stellohedron":
        report = polytopes.gal_check(polytopes.dual_stellohedron(n), n)
    elif name == "cross-polytope":
        report = polytopes.gal_check(polytopes.cross_polytope_boundary(n), n)
    else:
        raise UsageError(f"unknown complex {name!r}")
    report.parameters = {"complex": name, "n": n, **report.parameters}
    return report


VERIFY_TARGETS = {
    "gamma": ("gamma expansion of a family (--family, --n)", _verify_gamma),
    "cgk": ("binomial symmetry (--r, --s, [--q-level])", _verify_cgk),
    "expq": ("q-exponential generating function (--which, [--order])", _verify_expq),
    "binomial-identities": ("binomial convolutions (--n)",
                            lambda a: (_require(a, ("n",)),
                                       eulerian.verify_binomial_identities(a.n, a.bound))[1]),
    "worpitzky": ("power-sum identity (--n, [--cutoff])",
                  lambda a: (_require(a, ("n",)),
                             eulerian.verify_worpitzky(
                                 a.n, a.cutoff if a.cutoff is not None else a.n + 3,
                                 a.bound))[1]),
    "sym-gamma": ("symmetric gamma expansion (--which, --n, [--m])",
                  lambda a: (_require(a, ("which", "n")),
                             symfun.verify_sym_gamma(a.which, a.n, _m_or_n(a)))[1]),
    "gessel-words": ("no-double-descent word sums (--n, [--m, --method])",
                     lambda a: (_require(a, ("n",)),
                                symfun.verify_gessel_words(a.n, _m_or_n(a), a.method))[1]),
    "ps": ("principal specialization (--n, [--m])",
           lambda a: (_require(a, ("n",)),
                      symfun.verify_ps_theorems(a.n, _m_or_n(a), a.bound))[1]),
    "sym-cgk": ("symmetric binomial symmetry (--r, --s, [--m])",
                lambda a: (_require(a, ("r", "s")),
                           symfun.verify_sym_cgk(
                               a.r, a.s, a.m if a.m is not None else a.r + a.s))[1]),
    "procesi": ("stellohedron cohomology recurrence (--n, [--m])",
                lambda a: (_require(a, ("n",)),
                           symfun.verify_procesi_identity(a.n, _m_or_n(a)))[1]),
    "sym-gf": ("symmetric generating functions ([--order, --m])",
               lambda a: symfun.verify_sym_generating_functions(
                   a.order, a.m if a.m is not None else a.order)),
    "h-identities": ("polytope h-polynomials (--n)",
                     lambda a: (_require(a, ("n",)),
                                polytopes.verify_h_identities(a.n))[1]),
    "gal": ("gamma-nonnegativity of an h-polynomial (--complex, --n)", _verify_gal),
    "poly-properties": ("palindromicity/unimodality/positivity (--n)",
                        lambda a: (_require(a, ("n",)),
                                   eulerian.verify_poly_properties(a.n, a.bound))[1]),
    "sym-properties": ("symmetric-level properties (--n, [--m])",
                       lambda a: (_require(a, ("n",)),
                                  symfun.verify_sym_properties(a.n, _m_or_n(a)))[1]),
    "prw": ("prefix-class cardinalities (--n)",
            lambda a: (_require(a, ("n",)),
                       eulerian.verify_prw_cardinality(a.n, a.bound))[1]),
    "descent-classes": ("inv vs maj-of-inverse equidistribution (--n)",
                        lambda a: (_require(a, ("n",)),
                                   eulerian.verify_descent_classes(a.n, a.bound))[1]),
}


def _emit_reports(reports, fmt: str) -> int:
    if isinstance(reports, Report):
        reports = [reports]
    for r in reports:
        print(r.to_json() if fmt == "json" else r.one_line())
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _handle_verify(args) -> int:
    entry = VERIFY_TARGETS.get(args.target)
    if entry is None:
        raise UsageError(f"unknown verify target {args.target!r}")
    return _emit_reports(entry[1](args), args.format)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _gamma_row(n: int, kmax: int, class_fn, bound: int) -> list[str]:
    return [permstat.class_inv_poly(class_fn(n, k), bound).to_text("q")
            for k in range(kmax + 1)]


TABLE_TARGETS = {
    "eulerian": (0, lambda n, b: [str(c) for c in eulerian.eulerian_poly(n, b).coeffs]),
    "binomial-eulerian": (0, lambda n, b: [str(c) for c in
                                           eulerian.binomial_eulerian_poly(n, b).coeffs]),
    "q-eulerian": (0, lambda n, b: [c.to_text("q") for c in
                                    eulerian.q_eulerian(n, b).t_coeffs]),
    "q-binomial-eulerian": (0, lambda n, b: [c.to_text("q") for c in
                                             eulerian.q_binomial_eulerian(n, b).t_coeffs]),
    "derangement": (0, lambda n, b: [c.to_text("q") for c in
                                     eulerian.derangement_poly(n, b).t_coeffs]),
    "gamma-eulerian": (1, lambda n, b: _gamma_row(
        n, (n - 1) // 2, permstat.eulerian_gamma_class, b)),
    "gamma-binomial-eulerian": (1, lambda n, b: _gamma_row(
        n, n // 2, permstat.binomial_eulerian_gamma_class, b)),
    "gamma-derangement": (2, lambda n, b: _gamma_row(
        n, (n - 2) // 2, permstat.derangement_gamma_class, b)),
}


def _handle_table(args) -> int:
    entry = TABLE_TARGETS.get(args.target)
    if entry is None:
        raise UsageError(f"unknown table target {args.target!r}")
    default_min, row_fn = entry
    _require(args, ("n-max",))
    n_min = args.n_min if args.n_min is not None else default_min
    rows = [(n, row_fn(n, args.bound)) for n in range(n_min, args.n_max + 1)]
    if args.format == "json":
        print(json.dumps([{"n": n, "coefficients": cells} for n, cells in rows]))
    elif args.format == "text":
        for n, cells in rows:
            print(f"n={n}: " + "; ".join(cells))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "coefficients..."])
        for n, cells in rows:
            writer.writerow([n] + cells)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

def _suite_reports(max_n: int, bound: int):
    """Every verification over its documented range, capped at max_n."""

    def cap(limit):
        return min(max_n, limit)

    reports: list[Report] = []

    for family, lo in ((FamilyTag.EULERIAN_T, 1), (FamilyTag.EULERIAN_QT, 1),
                       (FamilyTag.BINOMIAL_EULERIAN_T, 1),
                       (FamilyTag.BINOMIAL_EULERIAN_QT, 1),
                       (FamilyTag.DERANGEMENT_QT, 2)):
        for n in range(lo, cap(8) + 1):
            reports.append(eulerian.verify_gamma_theorem(family, n, bound))
    for total in range(2, cap(8) + 1):
        for r in range(1, total):
            reports.append(eulerian.verify_cgk(r, total - r, False, bound))
    for total in range(2, cap(7) + 1):
        for r in range(1, total):
            reports.append(eulerian.verify_cgk(r, total - r, True, bound))
    for which in eulerian.EXPQ_IDENTITIES:
        reports.append(eulerian.verify_expq_identity(which, cap(8), bound))
    for n in range(0, cap(8) + 1):
        reports.append(eulerian.verify_binomial_identities(n, bound))
    for n in range(1, cap(6) + 1):
        reports.append(eulerian.verify_worpitzky(n, n + 3, bound))
    for n in range(1, cap(8) + 1):
        reports.append(eulerian.verify_poly_properties(n, bound))
    for n in range(1, cap(7) + 1):
        reports.append(eulerian.verify_prw_cardinality(n, bound))
    for n in range(1, cap(7) + 1):
        reports.append(eulerian.verify_descent_classes(n, bound))

    m_sym = cap(6)
    if m_sym >= 1:
        for n in range(1, m_sym + 1):
            reports.append(symfun.verify_sym_gamma("eulerian", n, m_sym))
            reports.append(symfun.verify_sym_gamma("binomial-eulerian", n, m_sym))
            if n >= 2:
                reports.append(symfun.verify_sym_gamma("derangement", n, m_sym))
        m_loop = cap(4)
        for n in range(1, m_loop + 1):
            reports.append(symfun.verify_gessel_words(n, m_loop, "loop"))
        for n in range(1, m_sym + 1):
            reports.append(symfun.verify_gessel_words(n, m_sym, "dp"))
        for n in range(1, m_sym + 1):
            reports.append(symfun.verify_ps_theorems(n, n, bound))
        for total in range(2, m_sym + 1):
            for r in range(1, total):
                reports.append(symfun.verify_sym_cgk(r, total - r, m_sym))
        for n in range(1, m_sym + 1):
            reports.append(symfun.verify_procesi_identity(n, n))
        reports.append(symfun.verify_sym_generating_functions(m_sym, m_sym))
        for n in range(1, m_sym + 1):
            reports.append(symfun.verify_sym_properties(n, m_sym))

    for n in range(1, cap(6) + 1):
        reports.append(polytopes.verify_h_identities(n))
    for n in range(2, cap(6) + 1):
        rep = polytopes.gal_check(polytopes.dual_permutohedron(n), n - 1)
        rep.parameters = {"complex": "permutohedron", **rep.parameters}
        reports.append(rep)
    for n in range(1, cap(5) + 1):
        rep = polytopes.gal_check(polytopes.dual_stellohedron(n), n)
        rep.parameters = {"complex": "stellohedron", **rep.parameters}
        reports.append(rep)
    for n in range(1, cap(5) + 1):
        rep = polytopes.gal_check(polytopes.cross_polytope_boundary(n), n)
        rep.parameters = {"complex": "cross-polytope", **rep.parameters}
        reports.append(rep)
    return reports


def _handle_suite(args) -> int:
    reports = _suite_reports(args.max_n, args.bound)
    failures = []
    for r in reports:
        print(r.to_json() if args.format == "json" else r.one_line())
        if not r.passed:
            failures.append(r)
    print(f"suite: {len(reports)} checks, {len(failures)} failed")
    if failures:
        print("failing: " + ", ".join(r.identity for r in failures))
        return EXIT_FAIL
    return EXIT_PASS


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammapos",
        description="Exact Eulerian-family polynomials, gamma expansions, "
                    "symmetric-function analogs, and polytope h-polynomials.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--m", type=int, default=None,
                       help="number of symmetric variables (default: n)")
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--s", type=int, default=None)
        p.add_argument("--order", type=int, default=8,
                       help="series truncation order (default 8)")
        p.add_argument("--cutoff", type=int, default=None,
                       help="power-sum cutoff (default n+3)")
        p.add_argument("--which", type=str, default=None)
        p.add_argument("--family", type=str, default=None)
        p.add_argument("--method", type=str, default="dp", choices=("dp", "loop"))
        p.add_argument("--q-level", action="store_true", dest="q_level")
        p.add_argument("--complex", type=str, default=None, dest="complex_name",
                       choices=("permutohedron", "stellohedron", "cross-polytope"))
        p.add_argument("--bound", type=int, default=permstat.DEFAULT_ENUMERATION_BOUND,
                       help="enumeration bound (default 9)")
        p.add_argument("--format", type=str, default="text",
                       choices=("text", "json", "csv"))

    p_compute = sub.add_parser(
        "compute", help="print a family polynomial",
        epilog="targets: " + ", ".join(sorted(list(COMPUTE_TARGETS) + ["gamma-class"])))
    p_compute.add_argument("target")
    add_common(p_compute)
    p_compute.set_defaults(handler=_handle_compute)

    p_verify = sub.add_parser(
        "verify", help="run one verification; exit 0 on pass, 1 on fail",
        epilog="targets: " + "; ".join(f"{k}: {v[0]}" for k, v in sorted(VERIFY_TARGETS.items())))
    p_verify.add_argument("target")
    add_common(p_verify)
    p_verify.set_defaults(handler=_handle_verify)

    p_table = sub.add_parser(
        "table", help="print coefficient tables over a range of n",
        epilog="targets: " + ", ".join(sorted(TABLE_TARGETS)))
    p_table.add_argument("target")
    p_table.add_argument("--n-min", type=int, default=None, dest="n_min")
    p_table.add_argument("--n-max", type=int, default=None, dest="n_max")
    p_table.add_argument("--bound", type=int, default=permstat.DEFAULT_ENUMERATION_BOUND)
    p_table.add_argument("--format", type=str, default="csv",
                         choices=("text", "json", "csv"))
    p_table.set_defaults(handler=_handle_table)

    p_suite = sub.add_parser(
        "suite", aliases=["run-suite"],
        help="run every verification up to --max-n; exit 0 iff all pass")
    p_suite.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_suite.add_argument("--bound", type=int, default=permstat.DEFAULT_ENUMERATION_BOUND)
    p_suite.add_argument("--format", type=str, default="text",
                         choices=("text", "json"))
    p_suite.set_defaults(handler=_handle_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValidationError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
