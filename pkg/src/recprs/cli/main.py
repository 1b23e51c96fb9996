"""``recprs`` command line.

Reports go to stdout as JSON (exact fractions rendered as strings), notes
and errors to stderr.  Exit status: 0 success, 1 domain error or failed
verification, 2 usage error (including unparseable polynomials).
"""

import argparse
import csv
import dataclasses
import io
import json
import sys
import time

from .. import _kernel
from ..errors import DomainError, PolyParseError
from ..exact_arith import det_rows
from ..instances import random_recursive_input, seeded
from ..nested import nested_matrix, nested_subres_poly
from ..poly import Poly
from ..prs import RULES, compute_prs, compute_recursive_prs
from ..recsubres import (
    build_recsubres_matrix,
    clear_caches,
    prop1_size,
    recsubres_poly,
    scale_ledger,
    valid_degrees,
)
from ..reduced import reduced_nested_matrix, reduced_nested_poly
from ..rootcount import lambda_at_infinity, root_count_report, sign_variations
from ..subres import minor_rows, subres_matrix, subres_poly
from ..verify import verify_identities
from .polytext import format_poly, parse_poly

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _q(x):
    return str(x)


def _poly_json(p):
    return {
        "degree": p.degree if not p.is_zero() else None,
        "coeffs": [_q(c) for c in p.desc()] if not p.is_zero() else ["0"],
        "text": format_poly(p),
    }


def _matrix_json(m):
    return [[_q(e) for e in m.row(i)] for i in range(m.rows)]


def _prs_json(prs):
    return {
        "length": len(prs),
        "degrees": list(prs.degrees),
        "complete": prs.complete,
        "elements": [dict(index=i + 1, **_poly_json(p)) for i, p in enumerate(prs.elements)],
        "factors": [
            {"index": i + 3, "alpha": _q(a), "beta": _q(b)} for i, (a, b) in enumerate(prs.factors)
        ],
    }


def _ledger_json(led):
    def conv(v):
        if isinstance(v, dict):
            return {str(k): conv(x) for k, x in v.items()}
        return None if v is None else _q(v)

    return conv(led.as_dict())


def _pair(args):
    return parse_poly(args.f), parse_poly(args.g)


def cmd_prs(args):
    f, g = _pair(args)
    prs = compute_prs(f, g, RULES[args.rule]())
    return {"command": "prs", "rule": args.rule, **_prs_json(prs)}


def cmd_rprs(args):
    f, g = _pair(args)
    rprs = compute_recursive_prs(f, g, RULES[args.rule]())
    return {
        "command": "rprs",
        "rule": args.rule,
        "levels": [dict(k=k + 1, **_prs_json(lv)) for k, lv in enumerate(rprs.levels)],
        "j_indices": list(rprs.j_indices),
        "total_polynomials": sum(len(lv) for lv in rprs.levels),
    }


def cmd_subres(args):
    f, g = _pair(args)
    if args.j is None:
        raise UsageError("subres needs --j")
    out = {"command": "subres", "kind": args.kind, "j": args.j}
    if args.kind == "classic":
        sm = subres_matrix(f, g, args.j)
        mat, poly = sm.matrix, subres_poly(f, g, args.j)
    else:
        rprs = compute_recursive_prs(f, g, RULES[args.rule]())
        k = args.k or 1
        out.update(k=k, rule=args.rule, j_indices=list(rprs.j_indices))
        if args.kind == "recursive":
            mat = build_recsubres_matrix(rprs, k, args.j).matrix
            poly = recsubres_poly(rprs, k, args.j)
            out["closed_form_size"] = list(prop1_size(rprs, k, args.j))
            out["factor"] = _q(scale_ledger(rprs).lemma1_factor(k, args.j))
        elif args.kind == "nested":
            nm = nested_matrix(rprs, k, args.j)
            mat, poly = nm.matrix, nested_subres_poly(rprs, k, args.j)
            if args.matrix and nm.provenance:
                out["provenance"] = [
                    list(nm.provenance[r * mat.cols:(r + 1) * mat.cols]) for r in range(mat.rows)
                ]
        else:
            rm = reduced_nested_matrix(rprs, k, args.j)
            mat, poly = rm.matrix, reduced_nested_poly(rprs, k, args.j)
            out["u_det"] = _q(rm.u_det)
    out["rows"], out["cols"] = mat.rows, mat.cols
    out["polynomial"] = _poly_json(poly)
    if args.matrix:
        out["matrix"] = _matrix_json(mat)
    return out


def cmd_rootcount(args):
    p = parse_poly(args.f)
    rep = root_count_report(p)
    levels = []
    for k, lv in enumerate(rep.rprs.levels, start=1):
        lo, hi = lambda_at_infinity(lv, -1), lambda_at_infinity(lv, 1)
        levels.append({
            "k": k,
            "minus_inf": [_q(v) for v in lo],
            "plus_inf": [_q(v) for v in hi],
            "variations": [sign_variations(lo), sign_variations(hi)],
            "contribution": rep.per_level[k - 1],
        })
    return {"command": "rootcount", "polynomial": format_poly(p), "count": rep.total,
            "per_level": list(rep.per_level), "levels": levels}


_CORRUPTIBLE = ("Rbar", "Rtilde", "Rprime", "Rhat")


def _corrupt(ledger, name):
    """Test hook: double the level-1 entry of one ledger table."""
    table = dict(getattr(ledger, name))
    key = 1 if 1 in table else max(table)
    table[key] = table[key] * 2
    return dataclasses.replace(ledger, **{name: table})


def cmd_verify(args):
    if (args.f is None) != (args.g is None):
        raise UsageError("verify takes both F and G, or neither (with --seed)")
    if args.f is None:
        seed = 0 if args.seed is None else args.seed
        f, g = random_recursive_input(seeded(seed))
        print(f"verify: seed {seed} gives F = {f}, G = {g}", file=sys.stderr)
    else:
        f, g = _pair(args)
    rprs = compute_recursive_prs(f, g, RULES[args.rule]())
    ledger = scale_ledger(rprs)
    if args.corrupt:
        ledger = _corrupt(ledger, args.corrupt)
    report = verify_identities(rprs, ledger)
    for c in report.failures:
        print(f"verify: FAIL {c.identity} at k={c.k} j={c.j}", file=sys.stderr)
    out = {
        "command": "verify",
        "rule": args.rule,
        "f": format_poly(f),
        "g": format_poly(g),
        "j_indices": list(rprs.j_indices),
        "ok": report.ok,
        "counts": report.counts(),
        "failed_identities": sorted({c.identity for c in report.failures}),
        "ledger": _ledger_json(ledger),
        "checks": [
            {"identity": c.identity, "k": c.k, "j": c.j, "status": c.status, "detail": c.detail,
             "constants": {k: _q(v) for k, v in c.constants.items()}}
            for c in report.checks
        ],
    }
    return out, (EXIT_OK if report.ok else EXIT_DOMAIN)


def bench_family(m):
    """``(x-1)^3 (x+2)^2`` times ``m - 5`` further simple roots; degree ``m``."""
    p = Poly.from_roots([1, 1, 1, -2, -2] + list(range(3, m - 2)))
    return p, p.derivative()


def _time_dets(matrix, j, kernel):
    rows = [minor_rows(matrix, j, tau) for tau in range(j, -1, -1)]
    t0 = time.perf_counter()
    for r in rows:
        det_rows(r, kernel)
    return time.perf_counter() - t0


def bench_rows(f, g, rule="sturm", kernels=None, label=None):
    kernels = kernels or list(_kernel.KERNELS)
    rprs = compute_recursive_prs(f, g, RULES[rule]())
    out = []
    for k in range(1, rprs.t + 1):
        for j in valid_degrees(rprs, k):
            clear_caches()
            rprs = compute_recursive_prs(f, g, RULES[rule]())
            t0 = time.perf_counter()
            rec = build_recsubres_matrix(rprs, k, j).matrix
            t_build = time.perf_counter() - t0
            led = scale_ledger(rprs)
            row = {
                "input": label if label is not None else f.degree,
                "m": f.degree, "n": g.degree, "k": k, "j": j,
                "recursive_rows": rec.rows, "recursive_cols": rec.cols,
                "reduced_rows": led.I(k, j), "reduced_cols": led.J(k, j),
                "build_s": round(t_build, 6),
            }
            for name in kernels:
                row[f"det_{name}_s"] = round(_time_dets(rec, j, name), 6)
            out.append(row)
    return out


def _parse_range(text):
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"--degrees expects A..B, got {text!r}") from None


def cmd_bench(args):
    if args.f is not None:
        if args.g is None:
            raise UsageError("bench takes both F and G, or --degrees")
        f, g = _pair(args)
        rows = bench_rows(f, g, args.rule, label="input")
    else:
        rows = []
        for m in _parse_range(args.degrees):
            if m < 5:
                raise UsageError("bench family needs degree >= 5")
            rows.extend(bench_rows(*bench_family(m), args.rule))
    print(f"bench: kernels {sorted(_kernel.KERNELS)}, default {_kernel.BACKEND}", file=sys.stderr)
    if args.format == "csv":
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    return {"command": "bench", "backend": _kernel.BACKEND, "rows": rows}


def build_parser():
    p = argparse.ArgumentParser(
        prog="recprs",
        description="Exact recursive PRS, subresultant matrices and root counting.",
    )
    p.add_argument("--version", action="version", version="recprs 0.1.0")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, pair=True, optional=False):
        if pair:
            nargs = "?" if optional else None
            sp.add_argument("f", nargs=nargs, help="F: expression, JSON array or @file")
            sp.add_argument("g", nargs=nargs, help="G: expression, JSON array or @file")
        sp.add_argument("--rule", choices=sorted(RULES), default="sturm")
        sp.add_argument("--json", action="store_true", help="compact single-line JSON")

    common(sub.add_parser("prs", help="polynomial remainder sequence"))
    common(sub.add_parser("rprs", help="recursive polynomial remainder sequence"))
    sp = sub.add_parser("subres", help="one subresultant polynomial and its matrix")
    common(sp)
    sp.add_argument("--kind", choices=["classic", "recursive", "nested", "reduced"], default="classic")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--j", type=int, default=None)
    sp.add_argument("--matrix", action="store_true", help="include matrix entries")
    sp = sub.add_parser("rootcount", help="real roots counted with multiplicity")
    sp.add_argument("f")
    sp.add_argument("--json", action="store_true")
    sp = sub.add_parser("verify", help="re-check every identity exactly")
    common(sp, optional=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--corrupt", choices=_CORRUPTIBLE, help=argparse.SUPPRESS)
    sp = sub.add_parser("bench", help="matrix sizes and determinant timings")
    common(sp, optional=True)
    sp.add_argument("--degrees", default="6..9", help="family degree sweep A..B")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    return p


_COMMANDS = {
    "prs": cmd_prs,
    "rprs": cmd_rprs,
    "subres": cmd_subres,
    "rootcount": cmd_rootcount,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"recprs {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolyParseError as exc:
        print(f"recprs {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"recprs {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        indent = None if getattr(args, "json", False) else 2
        json.dump(result, sys.stdout, indent=indent)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
