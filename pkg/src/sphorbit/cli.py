"""Command-line front end: catalog listing, verification suites, tables.

Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .orbitcat import OrbitDescriptor, catalog, catalog_rows, orbit_dimension
from .parab import (
    recursion_chain,
    reductive_rank,
    duflo_classification,
    verify_b_decomposition,
    verify_duflo_classification,
    verify_prop_4_2,
)
from .stab import (
    admissibility_set,
    b_orbit_open,
    borel_form_stabilizer,
    borel_stabilizer_dimension,
    orientation_sign,
    verify_stabilizer_decomposition,
)
from .weyl import (
    gk_dimension_audit,
    matching_generators,
    phi_generator,
    realization_spec,
    series_coefficients,
    verify_fourier_rules,
    verify_matching,
    weyl_commutator,
)

SCHEMA = "sphorbit-report/1"


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    cases: list = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, key, ok, detail=""):
        self.cases.append({"case": key, "ok": bool(ok), "detail": detail})

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.cases)

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": SCHEMA,
                "suite": self.suite,
                "parameters": self.parameters,
                "ok": self.ok,
                "cases": sorted(self.cases, key=lambda c: c["case"]),
                "elapsed_seconds": round(self.elapsed, 3),
            },
            indent=2,
            sort_keys=False,
        )

    def to_text(self) -> str:
        lines = ["suite %s: %s" % (self.suite, "pass" if self.ok else "FAIL")]
        for c in sorted(self.cases, key=lambda c: c["case"]):
            status = "ok " if c["ok"] else "FAIL"
            extra = (" " + c["detail"]) if c["detail"] and not c["ok"] else ""
            lines.append("  [%s] %s%s" % (status, c["case"], extra))
        lines.append(
            "%d cases, %d failures" % (
                len(self.cases),
                sum(1 for c in self.cases if not c["ok"]),
            )
        )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _case_key(n, d, extra=""):
    tag = "n=%d k=%d eps=%+d" % (n, d.k, d.epsilon)
    return tag + ((" " + extra) if extra else "")


def _suite_prop3_2(ns, report):
    for n in ns:
        for d in catalog(n):
            try:
                verify_stabilizer_decomposition(d)
                dec_ok = True
                detail = ""
            except AssertionError as exc:
                dec_ok = False
                detail = str(exc)
            report.add(_case_key(n, d, "decomposition"), dec_ok, detail)
            report.add(
                _case_key(n, d, "sign"),
                orientation_sign(d) == (-1) ** n,
            )
            report.add(
                _case_key(n, d, "admissibility"),
                len(admissibility_set(n, d.k).values) == 2,
            )
            report.add(
                _case_key(n, d, "borel"),
                borel_form_stabilizer(d).dim == borel_stabilizer_dimension(d)
                and b_orbit_open(d),
            )


def _suite_prop4_2(ns, report):
    for n in ns:
        for d in catalog(n):
            for i in range(1, n):
                ok = verify_b_decomposition(d, i) and verify_prop_4_2(d, i)
                report.add(_case_key(n, d, "i=%d" % i), ok)


def _suite_cor4_3(ns, report):
    for n in ns:
        for d in catalog(n):
            report.add(_case_key(n, d), verify_duflo_classification(d))


def _suite_lemma6_6(ns, report):
    for n in ns:
        for d in catalog(n):
            spec = realization_spec(d)
            if spec.case != "generic":
                continue
            report.add(_case_key(n, d, "fourier"), verify_fourier_rules(d))
            for Z in matching_generators(spec):
                ok, diff = verify_matching(Z, spec)
                report.add(
                    _case_key(n, d, "match %s" % (Z,)),
                    ok,
                    "" if ok else repr(diff),
                )


def _suite_lemma6_7(ns, report):
    for n in ns:
        if n % 2:
            continue
        p = n // 2
        for eps in (1, -1):
            d = OrbitDescriptor(n, p, eps)
            spec = realization_spec(d)
            ok, diff = verify_matching(("H", p), spec)
            report.add(_case_key(n, d, "match H"), ok, "" if ok else repr(diff))
            H = phi_generator(("H", p), spec)
            X = phi_generator(("Xalpha", p), spec)
            report.add(
                _case_key(n, d, "[H,X]=2X"),
                weyl_commutator(H, X) == X.scale(2),
            )


def _suite_thm6_8(ns, report):
    for n in ns:
        for d in catalog(n):
            rep = gk_dimension_audit(d)
            report.add(_case_key(n, d), rep["ok"], "" if rep["ok"] else str(rep))


def _suite_series7_2(ns, report, rmax):
    s = series_coefficients(rmax)
    b, c = s["b"], s["c"]
    report.add("b0=c0=1", b[0] == 1 and c[0] == 1)
    report.add("b1=1/2 c1=-1/2", b[1] == Fraction(1, 2) and c[1] == -Fraction(1, 2))
    for r in range(2, rmax + 1):
        report.add("r=%02d b=c" % r, b[r] == c[r])
        if r % 2 == 1:
            report.add("r=%02d odd zero" % r, b[r] == 0)


SUITES = {
    "prop3.2": _suite_prop3_2,
    "prop4.2": _suite_prop4_2,
    "cor4.3": _suite_cor4_3,
    "lemma6.6": _suite_lemma6_6,
    "lemma6.7": _suite_lemma6_7,
    "thm6.8": _suite_thm6_8,
    "series7.2": _suite_series7_2,
}


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def table_cor4_3(n: int, k: int, eps: int) -> str:
    d = OrbitDescriptor(n, k, eps)
    t = duflo_classification(d)
    lines = ["parabolic parameters for n=%d k=%d eps=%+d" % (n, d.k, d.epsilon)]
    for i in range(1, n):
        branch = t.branches[i]
        kind = "(f_i, 0)  unipotent" if branch == "f-0" else "(g_i, lambda_i)"
        lines.append("  i=%d  %s" % (i, kind))
    return "\n".join(lines)


def table_dims(n: int) -> str:
    lines = ["spherical orbit dimensions for n=%d" % n]
    for d in catalog(n):
        lines.append(
            "  k=%d eps=%+d  partition=%s  dim=%d"
            % (
                d.k,
                d.epsilon,
                "(" + ",".join(map(str, (2,) * d.k + (1,) * (n - 2 * d.k))) + ")",
                orbit_dimension(d),
            )
        )
    return "\n".join(lines)


def table_chain(n: int, k: int) -> str:
    d = OrbitDescriptor(n, k, 1)
    chain = recursion_chain(d)
    ranks = [reductive_rank(g) for g in chain]
    lines = ["recursion chain for n=%d k=%d" % (n, k)]
    for idx, r in enumerate(ranks, start=1):
        lines.append("  level i=%d  rank=%d" % (idx, r))
    return "\n".join(lines)


def table_orbits(n: int) -> str:
    lines = ["orbit catalog for n=%d" % n]
    for row in catalog_rows(n):
        lines.append(
            "  k=%d eps=%+d dim=%d partition=%s"
            % (row["k"], row["epsilon"], row["dimension"], row["partition"])
        )
        lines.append("    Y = %s" % row["Y"])
        lines.append("    X = %s" % row["X"])
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _parse_n_range(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo < 4 or hi < lo:
        raise ValueError("n range must satisfy 4 <= lo <= hi")
    return list(range(lo, hi + 1))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SystemExit(self.exit_code_error(message))

    def exit_code_error(self, message):
        print("error: %s" % message, file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sphorbit", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p_orbits = sub.add_parser("orbits", help="list the spherical orbit catalog")
    p_orbits.add_argument("-n", type=int, required=True)
    p_orbits.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(SUITES))
    p_verify.add_argument("-n", "--n-range", default="4..10", dest="n_range")
    p_verify.add_argument("--rmax", type=int, default=12)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table", help="print a deterministic table")
    p_table.add_argument("name", choices=("cor4.3", "dims", "chain"))
    p_table.add_argument("-n", type=int, required=True)
    p_table.add_argument("-k", type=int, default=None)
    p_table.add_argument("--epsilon", type=int, default=1, choices=(1, -1))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    if args.command == "orbits":
        if args.n < 4:
            print("error: need n >= 4", file=sys.stderr)
            return 2
        if args.format == "json":
            rows = catalog_rows(args.n)
            print(json.dumps({"schema": SCHEMA, "n": args.n, "orbits": rows}))
        else:
            print(table_orbits(args.n))
        return 0

    if args.command == "verify":
        try:
            ns = _parse_n_range(args.n_range)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        random.seed(args.seed)
        report = VerificationReport(args.suite, {"n": ns, "seed": args.seed})
        start = time.monotonic()
        if args.suite == "series7.2":
            SUITES[args.suite](ns, report, args.rmax)
        else:
            SUITES[args.suite](ns, report)
        report.elapsed = time.monotonic() - start
        print(report.to_json() if args.format == "json" else report.to_text())
        return 0 if report.ok else 1

    if args.command == "table":
        try:
            if args.name == "dims":
                print(table_dims(args.n))
            elif args.name == "cor4.3":
                if args.k is None:
                    print("error: table cor4.3 needs -k", file=sys.stderr)
                    return 2
                print(table_cor4_3(args.n, args.k, args.epsilon))
            else:
                if args.k is None:
                    print("error: table chain needs -k", file=sys.stderr)
                    return 2
                print(table_chain(args.n, args.k))
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        return 0

    parser.print_help()
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
