"""Command-line driver: every command builds one Report, printed as text or JSON."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import checks
from .complexes import FAMILIES, build_complex, homology_character, homology_profile
from .linalg import ComplexError
from .modules import CPHypotheses, build_module, carter_payne_certificate, module_character
from .bases import ssyt_count, transpose_partition
from .symfunc import NonSymmetric, alternating_sides, schur_expand
from .statements import STATEMENTS
from .wfd import wfd_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    params: dict
    claims: list[checks.Claim] = field(default_factory=list)
    timing_ms: int = 0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def as_dict(self) -> dict:
        return {"command": self.command, "params": self.params,
                "claims": [c.as_dict() for c in self.claims], "timing_ms": self.timing_ms}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def to_text(self, verbosity: int = 1) -> str:
        lines = []
        if verbosity >= 1:
            params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
            lines.append(f"{self.command}: {params}")
            if self.command == "wfd-table":
                lines.extend(_wfd_table_lines(self))
            else:
                for c in self.claims:
                    lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.statement_id}")
                    if not c.passed or verbosity >= 2 or self.command != "verify":
                        for k, v in sorted(c.values.items()):
                            lines.append(f"        {k}: {json.dumps(v, sort_keys=True)}")
        failed = sum(not c.passed for c in self.claims)
        lines.append(f"{len(self.claims) - failed}/{len(self.claims)} claims pass ({self.timing_ms} ms)")
        return "\n".join(lines)


def _wfd_table_lines(rep: Report) -> list[str]:
    out = [f"  {'p':>3} {'r':>4} {'value':>6} {'witness':>8} {'upper':>6}  agree  witness complex"]
    for c in rep.claims:
        v = c.values
        w = v["witness"]
        desc = f"{w['family']}({w['r']},{w['d']})" + (f" shifted by ({w['shift']},{w['shift']})" if w["shift"] else "")
        out.append(f"  {v['p']:>3} {v['r']:>4} {v['theorem_value']:>6} {v['witness_length']:>8} "
                   f"{v['upper_bound']:>6}  {'yes' if c.passed else 'NO ':<5}  {desc}")
    return out


def _key(w) -> str:
    return ",".join(map(str, w))


def _character_values(ch) -> dict:
    out = {"monomials": {_key(w): c for w, c in sorted(ch.coeffs.items(), reverse=True)}}
    try:
        out["schur"] = {_key(lam): c for lam, c in sorted(schur_expand(ch).items(), reverse=True)}
    except NonSymmetric:
        out["schur"] = None
    return out


def _nonneg(name: str, value: int | None, minimum: int = 0) -> None:
    if value is not None and value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")


# commands


def cmd_homology(args) -> Report:
    params = {"family": args.family, "r": args.r, "d": args.d, "n": args.n, "p": args.p}
    _nonneg("n", args.n, 1)
    try:
        c = build_complex(args.family, args.r, args.d, args.n, args.p)
        prof = homology_profile(c)
    except ComplexError as exc:
        return Report("homology", params, [checks.Claim("complex.d_squared", False, {"error": str(exc)})])
    values = {"shapes": [list(s) for s in c.shapes], "steps": c.steps[1:], "term_dims": prof.term_dims,
              "profile": prof.dims, "support": prof.support(), "euler": prof.euler, "length": c.length}
    if args.character:
        values["character"] = {str(i): _character_values(homology_character(c, i)) for i in prof.support()}
    return Report("homology", params, [checks.Claim("complex.profile", True, values)])


def _suite_bounds(name: str, args) -> dict:
    bounds = dict(checks.SMALL[name]) if args.small else {}
    if args.nmax is not None and name in ("hopf", "modules", "complexes", "identity"):
        bounds["nmax"] = args.nmax
    if args.kmax is not None and name == "identity":
        bounds["kmax"] = args.kmax
    if args.rmax is not None:
        if name == "wfd":
            bounds["rmax"] = args.rmax
        elif name == "complexes":
            bounds.update(rmax_p2=args.rmax, rmax_n2=args.rmax, rmax_mn=args.rmax)
    return bounds


def cmd_verify(args) -> Report:
    _nonneg("nmax", args.nmax, 1)
    _nonneg("kmax", args.kmax)
    _nonneg("rmax", args.rmax)
    params = {"suite": args.suite, "small": args.small}
    for k in ("kmax", "nmax", "rmax"):
        if getattr(args, k) is not None:
            params[k] = getattr(args, k)
    names = checks.SUITES if args.suite == "all" else (args.suite,)
    claims = []
    for name in names:
        claims.extend(checks.run_suite(name, **_suite_bounds(name, args)))
    return Report("verify", params, claims)


def cmd_wfd_table(args) -> Report:
    _nonneg("rmax", args.rmax)
    primes = sorted(set(args.p))
    params = {"p": ",".join(map(str, primes)), "rmax": args.rmax}
    claims = []
    for p in primes:
        for r in range(args.rmax + 1):
            rep = wfd_report(p, r)
            claims.append(checks.Claim("wfd.sandwich", rep.agree, rep.as_dict()))
    return Report("wfd-table", params, claims)


def cmd_carter_payne(args) -> Report:
    params = {"a": args.a, "b": args.b, "d": args.d, "p": args.p, "e": args.e, "n": args.n, "kind": args.kind}
    _nonneg("n", args.n, 1)
    _nonneg("b", args.b)
    h = CPHypotheses((args.a, args.b), args.d, args.p, args.e)
    rep = carter_payne_certificate(h, args.n, args.kind)
    values = rep.as_dict()
    if rep.witness is not None:
        values["first_unpreserved_relation"] = {str(k): v for k, v in sorted(rep.witness.items())}
    if rep.hypotheses_hold:
        # the certificate asserts a well-defined map, nonzero exactly when the side condition allows it
        ok = rep.well_defined and rep.nonzero == rep.side_condition
    else:
        ok = True
    return Report("carter-payne", params, [checks.Claim("modules.carter_payne", ok, values)])


def cmd_module_dim(args) -> Report:
    params = {"kind": args.kind, "a": args.a, "b": args.b, "n": args.n, "p": args.p}
    _nonneg("n", args.n, 1)
    _nonneg("b", args.b)
    m = build_module(args.kind, (args.a, args.b), args.n, args.p)
    shape = (args.a, args.b) if args.kind == "divided" else transpose_partition((args.a, args.b))
    values = {"dim": m.dim, "label": m.label(), "ambient_dim": m.ambient.dim if m.ambient else 0,
              "tableau_count": ssyt_count(shape, args.n) if args.a >= args.b else 0}
    if args.character:
        values["character"] = _character_values(module_character(m))
    return Report("module-dim", params, [checks.Claim("modules.dimension", True, values)])


def cmd_identity(args) -> Report:
    _nonneg("k", args.k)
    _nonneg("n", args.n, 1)
    lhs, rhs = alternating_sides(args.k, args.n)
    values = {"lhs_schur": {_key(lam): c for lam, c in sorted(schur_expand(lhs).items(), reverse=True)},
              "lhs_terms": len(lhs.coeffs), "rhs_terms": len(rhs.coeffs)}
    return Report("identity", {"k": args.k, "n": args.n},
                  [checks.Claim("identity.alternating", lhs == rhs, values)])


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as one JSON document")
    common.add_argument("--no-timing", action="store_true", help="report timing_ms as 0 for reproducible output")

    parser = argparse.ArgumentParser(prog="weylres", description="Homology of two-row Weyl/Schur module complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", parents=[common], help="build a complex and report its homology")
    h.add_argument("--family", choices=FAMILIES, required=True)
    h.add_argument("--r", type=int, required=True)
    h.add_argument("--d", type=int, required=True)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--p", type=int, required=True)
    h.add_argument("--character", action="store_true", help="include characters of the surviving homology")
    h.set_defaults(func=cmd_homology)

    v = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    v.add_argument("--suite", choices=(*checks.SUITES, "all"), default="all")
    v.add_argument("--kmax", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--rmax", type=int)
    v.add_argument("--small", action="store_true", help="reduced bounds for a quick run")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("wfd-table", parents=[common], help="tabulate the Weyl filtration dimension of S(2, r)")
    w.add_argument("--p", type=int, nargs="+", default=[2, 3, 5])
    w.add_argument("--rmax", type=int, default=12)
    w.set_defaults(func=cmd_wfd_table)

    c = sub.add_parser("carter-payne", parents=[common], help="certify one raising map between two-row modules")
    for name in ("a", "b", "d", "p", "e", "n"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.add_argument("--kind", choices=("divided", "exterior"), default="divided")
    c.set_defaults(func=cmd_carter_payne)

    m = sub.add_parser("module-dim", parents=[common], help="dimension of one Weyl or Schur module")
    m.add_argument("--kind", choices=("divided", "exterior"), default="divided")
    for name in ("a", "b", "n", "p"):
        m.add_argument(f"--{name}", type=int, required=True)
    m.add_argument("--character", action="store_true")
    m.set_defaults(func=cmd_module_dim)

    i = sub.add_parser("identity", parents=[common], help="check h_k(x^2) against its Schur expansion")
    i.add_argument("--k", type=int, required=True)
    i.add_argument("--n", type=int, required=True)
    i.set_defaults(func=cmd_identity)
    return parser


def _verbosity() -> int:
    try:
        return int(os.environ.get("WEYLRES_VERBOSITY", "1"))
    except ValueError:
        return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"weylres {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.timing_ms = 0 if args.no_timing else int(round((time.perf_counter() - start) * 1000))
    assert all(c.statement_id in STATEMENTS for c in report.claims)
    print(report.to_json() if args.json else report.to_text(_verbosity()))
    return EXIT_OK if report.ok else EXIT_FAIL


def main_exit() -> None:
    sys.exit(main())
