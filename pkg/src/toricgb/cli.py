"""Command line front-end.

Exit codes: 0 ok, 2 invalid instance, 3 unreadable or malformed file,
4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings

from . import formats
from .core import GcdWarning, ToricError, validate_presentation
from .decompose import decomposition_report
from .enumeration import enumerate_BA
from .groebner import groebner_from_parts
from .verify import (DegreeTooLargeForBudget, NoRepresentation, brute_min_rep,
                     confluence_check, corrupt_tail, fiber_oracle, kernel_failures,
                     spair_check)

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_VERIFY = 0, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _load(path, out, err, report_errors_as_json=False):
    try:
        raw = formats.read_instance(path)
    except (OSError, formats.InstanceParseError, UnicodeDecodeError) as exc:
        err.write(f"error: cannot read {path}: {exc}\n")
        raise _Exit(EXIT_IO)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", GcdWarning)
        try:
            pres = validate_presentation(raw)
        except ToricError as exc:
            if report_errors_as_json:
                out.write(formats.dumps({"ok": False, "errors": [
                    {"code": exc.code, "message": str(exc)}]}))
            else:
                err.write(f"error: {exc.code}: {exc}\n")
            raise _Exit(EXIT_INVALID)
    for w in caught:
        err.write(f"warning: {w.message}\n")
    try:
        labels = formats.labels_from(raw, pres)
    except formats.InstanceParseError as exc:
        err.write(f"error: {exc}\n")
        raise _Exit(EXIT_IO)
    return pres, labels


def cmd_validate(args, out, err) -> int:
    pres, _ = _load(args.path, out, err, report_errors_as_json=True)
    out.write(formats.dumps({"ok": True, "errors": [], "instance": pres.to_dict()}))
    return EXIT_OK


def _pipeline(pres):
    table, n1 = enumerate_BA(pres)
    return groebner_from_parts(pres, table, n1)


def cmd_groebner(args, out, err) -> int:
    pres, labels = _load(args.path, out, err)
    result = _pipeline(pres)
    if args.format == "json":
        out.write(formats.dumps(formats.groebner_json(result, args.with_report, labels)))
    elif args.format == "m2":
        out.write(formats.groebner_m2(result, labels))
    else:
        out.write(formats.groebner_text(result, args.with_report, labels))
    return EXIT_OK


def cmd_decompose(args, out, err) -> int:
    pres, _ = _load(args.path, out, err)
    report = decomposition_report(pres)
    if args.format == "json":
        out.write(formats.dumps(formats.decomposition_json(report, pres)))
    else:
        out.write(formats.decomposition_text(report))
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    pres, _ = _load(args.path, out, err)
    result = _pipeline(pres)
    basis = corrupt_tail(result) if args.inject_fault and result.basis else None
    D = args.oracle_degree or result.max_degree + 2
    lines = []
    ok = True

    partial = False
    try:
        fibers = fiber_oracle(pres, result, D, budget=args.budget)
    except DegreeTooLargeForBudget as exc:
        partial = True
        D = max(1, exc.max_feasible_degree)
        lines.append(f"partial coverage: budget allows degree {D} only ({exc})")
        fibers = fiber_oracle(pres, result, D, budget=args.budget)
    ok &= fibers.passed and not partial
    lines.append(f"fiber oracle (degree <= {D}): "
                 f"{'pass' if fibers.passed else 'FAIL'} "
                 f"({fibers.fibers_checked} fibers, {fibers.monomials_checked} monomials)")
    for f in fibers.failures[:10]:
        lines.append(f"  {f.point}: {f.monomial}: {f.reason}")

    bad_kernel = kernel_failures(result, basis)
    ok &= not bad_kernel
    lines.append(f"kernel membership: {'pass' if not bad_kernel else 'FAIL'}")
    for g in bad_kernel:
        lines.append(f"  {g} does not lie in the toric ideal")

    sp = spair_check(result, basis=basis, workers=args.threads)
    ok &= sp.ok
    lines.append(f"S-pair criterion: {'pass' if sp.ok else 'FAIL'} ({sp.pairs_checked} pairs)")
    if not sp.ok:
        i, j, rem = sp.failure
        lines.append(f"  pair ({i + 1}, {j + 1}) leaves a remainder with {len(rem)} terms")

    mismatches = []
    for entry in result.table.entries():
        try:
            if brute_min_rep(pres, entry.value) != entry.monomial:
                mismatches.append(entry.value)
        except NoRepresentation:
            mismatches.append(entry.value)
    ok &= not mismatches
    lines.append(f"minimal representations: {'pass' if not mismatches else 'FAIL'} "
                 f"({len(result.table)} elements)")

    if basis is None:
        conf = confluence_check(result, seed=args.seed)
        ok &= conf
        lines.append(f"confluence (seed {args.seed}): {'pass' if conf else 'FAIL'}")

    lines.append("verified" if ok else "verification failed")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_VERIFY


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("TORICGB_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricgb",
        description="grevlex Groebner bases of simplicial toric ideals from the Hilbert basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("groebner", help="initial ideal and reduced Groebner basis")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json", "m2"), default="text")
    p.add_argument("--with-report", action="store_true", help="include the degree-bound report")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("decompose", help="congruence classes and ring flags")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check the result against brute-force oracles")
    p.add_argument("path")
    p.add_argument("--oracle-degree", type=int, default=None, metavar="D")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=2_000_000,
                   help="maximum number of monomials the fiber oracle may list")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except _Exit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
