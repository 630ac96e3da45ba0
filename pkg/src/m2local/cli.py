"""Command-line front end: m2local <subcommand> [--format text|json|csv].

Exit codes: 0 success or all checks pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exact import format_ratfun, ratfun_to_json, series_expand
from .groups import GroupError, GroupId, parse_char

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(fmt: str, text: str, obj, rows=None, header=None) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=False)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows or [])
        return buf.getvalue().rstrip("\n")
    return text


def _ratfun_out(fmt: str, f) -> str:
    j = ratfun_to_json(f)
    return _emit(fmt, format_ratfun(f), j, [[j["num"], j["den"]]], ["num", "den"])


def _group_rho(args):
    try:
        gid = GroupId.parse(args.group)
        return gid, parse_char(gid, args.rho)
    except GroupError as exc:
        raise UsageError(str(exc)) from None


def cmd_f1(args):
    from .strata import f1
    return OK, _ratfun_out(args.format, f1())


def cmd_f2(args):
    from .strata import f2
    return OK, _ratfun_out(args.format, f2(args.jobs))


def cmd_coeff(args):
    from .strata import euler_char
    if args.k < 0 or args.ell < 0:
        raise UsageError("--k and --ell must be non-negative")
    v = euler_char(args.k, args.ell)
    return OK, _emit(args.format, str(v), {"k": args.k, "ell": args.ell, "value": v},
                     [[args.k, args.ell, v]], ["k", "ell", "value"])


def cmd_stratum_series(args):
    from .mckay import stratum_series_mckay
    gid, rho = _group_rho(args)
    try:
        f = stratum_series_mckay(gid, rho)
    except GroupError as exc:
        raise UsageError(str(exc)) from None
    return OK, _ratfun_out(args.format, f)


def cmd_oracle_compare(args):
    from .mckay import stratum_series_mckay
    from .molien import molien_series_g2
    gid, rho = _group_rho(args)
    if args.max_u < 0 or args.max_v < 0:
        raise UsageError("cutoffs must be non-negative")
    try:
        oracle = molien_series_g2(gid, rho, args.max_u, args.max_v, jobs=args.jobs)
    except GroupError as exc:
        raise UsageError(str(exc)) from None
    mckay = series_expand(stratum_series_mckay(gid, rho), args.max_u, args.max_v)
    diff = mckay.first_difference(oracle)
    obj = {"group": gid.name, "rho": rho.name, "max_u": args.max_u, "max_v": args.max_v,
           "agree": diff is None}
    if diff is None:
        text = "agree"
    else:
        i, j = diff
        a, b = mckay[i, j], oracle[i, j]
        obj["first_difference"] = {"k": i, "ell": j, "mckay": str(a), "oracle": str(b)}
        text = f"disagree at u^{i} v^{j}: mckay {a}, oracle {b}"
    row = [gid.name, rho.name, args.max_u, args.max_v, "agree" if diff is None else "disagree"]
    out = _emit(args.format, text, obj, [row], ["group", "rho", "max_u", "max_v", "result"])
    return (OK if diff is None else FAILED), out


def cmd_verify_table1(args):
    from .strata import verify_table1
    checks = verify_table1(corrected=args.corrected, jobs=args.jobs)
    lines, rows = [], []
    for c in checks:
        where = "" if c.ok else f" (first difference at u^{c.first_difference[0]} v^{c.first_difference[1]})"
        lines.append(f"{c.ident}: {'ok' if c.ok else 'MISMATCH'}{where}")
        rows.append([c.ident, "ok" if c.ok else "mismatch",
                     "" if c.ok else f"{c.first_difference[0]},{c.first_difference[1]}"])
    ok = all(c.ok for c in checks)
    obj = {"corrected": args.corrected, "ok": ok,
           "rows": [{"id": c.ident, "ok": c.ok,
                     "first_difference": list(c.first_difference) if c.first_difference else None}
                    for c in checks]}
    return (OK if ok else FAILED), _emit(args.format, "\n".join(lines), obj, rows,
                                         ["id", "result", "first_difference"])


def cmd_verify_covariants(args):
    from .covariants import verify_covariants
    rep = verify_covariants()
    lines, rows = [], []
    for e in rep.entries:
        tag = "ok" if e.ok else ("FAIL" if e.gating else "differs")
        lines.append(f"[{tag}] {e.name}" + (f": {e.detail}" if e.detail else ""))
        rows.append([e.name, e.ok, e.gating, e.detail])
    return (OK if rep.ok else FAILED), _emit(args.format, "\n".join(lines), rep.as_dict(), rows,
                                             ["check", "ok", "gating", "detail"])


def cmd_equivariant(args):
    from .equivariant import equivariant_euler, format_partition, format_symbolic, schur_dimension
    if not 0 <= args.n <= 8:
        raise UsageError("--n must be between 0 and 8")
    mode = "symbolic" if args.symbolic else "numeric"
    res = equivariant_euler(args.n, mode, with_factorial=args.with_factorial)
    pairs = list(res.items())
    if args.symbolic:
        shown = [(format_partition(lam), format_symbolic(c)) for lam, c in pairs]
        obj = {"n": args.n, "mode": mode,
               "coefficients": [[format_partition(lam), format_symbolic(c)] for lam, c in pairs]}
        text = "\n".join(f"s[{p}]: {c}" for p, c in shown)
    else:
        dim = schur_dimension(res)
        obj = {"n": args.n, "mode": mode,
               "coefficients": [[format_partition(lam), c] for lam, c in pairs], "dimension": dim}
        shown = [(format_partition(lam), c) for lam, c in pairs]
        text = "\n".join(f"s[{p}]: {c}" for p, c in shown) + f"\ndimension: {dim}"
    return OK, _emit(args.format, text, obj, shown, ["partition", "coefficient"])


def cmd_table2(args):
    from .equivariant import format_partition, format_symbolic, verify_table2
    checks = verify_table2()
    lines, rows = [], []
    for c in checks:
        p = format_partition(c.partition)
        sym = "ok" if c.symbolic_ok else "MISMATCH"
        if c.folded and c.symbolic_ok:
            sym = "ok (constants read as e2)"
        line = f"n={c.n} s[{p}]: numeric {'ok' if c.numeric_ok else 'MISMATCH'}, symbolic {sym}"
        if not c.symbolic_ok:
            line += f"; computed {format_symbolic(c.computed_symbolic)}"
        lines.append(line)
        rows.append([c.n, p, c.numeric_ok, c.symbolic_ok, format_symbolic(c.computed_symbolic)])
    gate = [c.numeric_ok and (c.symbolic_ok or args.numeric_only) for c in checks]
    ok = all(gate)
    obj = {"ok": ok, "numeric_only": args.numeric_only,
           "rows": [{"n": c.n, "partition": format_partition(c.partition), "numeric_ok": c.numeric_ok,
                     "symbolic_ok": c.symbolic_ok, "constants_folded": c.folded,
                     "computed": format_symbolic(c.computed_symbolic)} for c in checks]}
    return (OK if ok else FAILED), _emit(args.format, "\n".join(lines), obj, rows,
                                         ["n", "partition", "numeric_ok", "symbolic_ok", "computed"])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        help="same as --format json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical)")

    p = argparse.ArgumentParser(prog="m2local", description="Euler characteristics of local systems on M_1,1 and M_2")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("f1", parents=[common], help="generating function f1(u)").set_defaults(func=cmd_f1)
    sub.add_parser("f2", parents=[common], help="generating function f2(u,v)").set_defaults(func=cmd_f2)

    s = sub.add_parser("coeff", parents=[common], help="e2(1^k 2^l)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--ell", type=int, required=True)
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("stratum-series", parents=[common], help="invariant series of (Gamma, rho)")
    s.add_argument("--group", required=True)
    s.add_argument("--rho", required=True)
    s.set_defaults(func=cmd_stratum_series)

    s = sub.add_parser("oracle-compare", parents=[common], help="McKay route against the Molien average")
    s.add_argument("--group", required=True)
    s.add_argument("--rho", required=True)
    s.add_argument("--max-u", type=int, required=True)
    s.add_argument("--max-v", type=int, required=True)
    s.set_defaults(func=cmd_oracle_compare)

    s = sub.add_parser("verify-table1", parents=[common], help="compare stratum series with Table 1")
    s.add_argument("--corrected", action="store_true", help="apply the documented row corrections")
    s.set_defaults(func=cmd_verify_table1)

    sub.add_parser("verify-covariants", parents=[common],
                   help="covariant identities on the normal forms").set_defaults(func=cmd_verify_covariants)

    s = sub.add_parser("equivariant", parents=[common], help="S_n-equivariant Euler characteristic of M_2,n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--symbolic", action="store_true", help="coefficients in the symbols e2(1^k 2^l)")
    s.add_argument("--with-factorial", action="store_true", help="keep the extra d! in the exponent")
    s.set_defaults(func=cmd_equivariant)

    s = sub.add_parser("table2", parents=[common], help="compare with Table 2")
    s.add_argument("--numeric-only", action="store_true", help="gate on the numeric column only")
    s.set_defaults(func=cmd_table2)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return USAGE
    try:
        code, out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
