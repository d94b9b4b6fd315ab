"""Command line front end: yhe {mul,verify,basis,dim,rep}."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from math import factorial

from .combinatorics import (
    bell,
    count_std_shape,
    enumerate_lambda_shapes,
    enumerate_multipartitions,
    enumerate_std,
    faa_di_bruno,
    parse_partition,
)
from .parsing import element_to_json, format_element, parse_element
from .scalars import UsageError
from .yokonuma.cellular import DEFAULT_BUDGET, BudgetExceeded, budget_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _default_budget():
    env = os.environ.get("YHE_BUDGET")
    if env is None:
        return DEFAULT_BUDGET
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"YHE_BUDGET must be an integer, got {env!r}") from None


def _common(p, alg=True, r_default=2, n_default=3):
    if alg:
        p.add_argument("--alg", choices=["y", "et"], default="y", help="algebra: Y_{r,n} or E_n")
    p.add_argument("-r", type=int, default=r_default, help="number of t-eigenvalues (Y only)")
    p.add_argument("-n", type=int, default=n_default, help="number of strands")
    p.add_argument("--alpha", type=parse_partition, default=None, help="set-partition type, e.g. 2,1")
    p.add_argument("--budget", type=int, default=None, help="maximal basis size (env YHE_BUDGET)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser():
    ap = _Parser(prog="yhe", description="Exact computations in Y_{r,n}(q) and E_n(q).")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("mul", help="multiply elements and print the normal form")
    _common(p)
    p.add_argument("exprs", nargs="+", help="element expressions, multiplied left to right")

    p = sub.add_parser("verify", help="run a verification suite")
    _common(p, alg=False)
    p.add_argument("suite")

    p = sub.add_parser("basis", help="list the cellular basis")
    _common(p)

    p = sub.add_parser("dim", help="dimension, optionally with the cell shapes")
    _common(p)
    p.add_argument("--shapes", action="store_true", help="list shapes with their number of standard tableaux")

    p = sub.add_parser("rep", help="matrix of an element of Y_{r,n} on the tensor space")
    _common(p, alg=False, n_default=2)
    p.add_argument("--elem", required=True)
    return ap


def _check_sizes(args):
    if args.n < 1 or args.r < 1:
        raise UsageError("-r and -n must be positive")
    if args.alpha is not None and sum(args.alpha) != args.n:
        raise UsageError(f"--alpha {args.alpha} is not a partition of {args.n}")


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _element_csv(x):
    data = element_to_json(x)
    key = "t" if "r" in data else "A"
    rows = [["coeff", key, "w"]]
    for t in data["terms"]:
        rows.append([t["coeff"], json.dumps(t[key]), json.dumps(t["w"])])
    return _csv(rows)


def _emit_element(x, fmt):
    if fmt == "json":
        return json.dumps(element_to_json(x), sort_keys=True)
    if fmt == "csv":
        return _element_csv(x)
    return format_element(x)


def cmd_mul(args, out):
    xs = [parse_element(e, args.alg, args.r, args.n) for e in args.exprs]
    prod = xs[0]
    for x in xs[1:]:
        prod = prod * x
    print(_emit_element(prod, args.format), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    from .verify import Config, run_suite

    cfg = Config(r=args.r, n=args.n, alpha=args.alpha, budget=args.budget, seed=args.seed)
    checks = run_suite(args.suite, cfg)
    ok = all(c.ok for c in checks)
    header = {"suite": args.suite, "r": args.r, "n": args.n, "seed": args.seed}
    if args.alpha is not None:
        header["alpha"] = list(args.alpha)
    if args.format == "json":
        doc = dict(header, passed=ok, checks=[
            {"name": c.name, "status": "PASS" if c.ok else "FAIL", "witness": c.witness} for c in checks
        ])
        print(json.dumps(doc, ensure_ascii=False), file=out)
    elif args.format == "csv":
        rows = [["name", "status", "witness"]]
        rows += [[c.name, "PASS" if c.ok else "FAIL", c.witness] for c in checks]
        print(_csv(rows), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in header.items()), file=out)
        for c in checks:
            line = f"{'PASS' if c.ok else 'FAIL'} {c.name}"
            if not c.ok and c.witness:
                line += f": {c.witness}"
            print(line, file=out)
        failed = sum(not c.ok for c in checks)
        print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _basis_entries(args):
    if args.alg == "y":
        from .yokonuma.cellular import YCellularBasis

        return YCellularBasis(args.r, args.n, args.budget).entries
    from .braidsties.cellular import EtCellularBasis

    return EtCellularBasis(args.n, args.alpha, args.budget).entries


def cmd_basis(args, out):
    entries = _basis_entries(args)
    if args.format == "json":
        doc = [
            {"shape": str(sh), "s": str(s), "t": str(t), "element": element_to_json(x)}
            for sh, s, t, x in entries
        ]
        print(json.dumps(doc, ensure_ascii=False), file=out)
    elif args.format == "csv":
        rows = [["shape", "s", "t", "element"]]
        rows += [[str(sh), str(s), str(t), format_element(x)] for sh, s, t, x in entries]
        print(_csv(rows), file=out)
    else:
        for sh, s, t, x in entries:
            print(f"[{sh}] s={s} t={t}: {format_element(x)}", file=out)
    return EXIT_OK


def _dimension(args):
    if args.alg == "y":
        return args.r ** args.n * factorial(args.n)
    if args.alpha is not None:
        return faa_di_bruno(args.alpha) * factorial(args.n)
    return bell(args.n) * factorial(args.n)


def _shape_rows(args):
    if args.alg == "y":
        return [(str(lam), len(enumerate_std(lam))) for lam in enumerate_multipartitions(args.r, args.n)]
    return [(str(sh), count_std_shape(sh)) for sh in enumerate_lambda_shapes(args.n, args.alpha)]


def cmd_dim(args, out):
    dim = _dimension(args)
    if not args.shapes:
        if args.format == "json":
            print(json.dumps({"dim": dim}), file=out)
        else:
            print(dim, file=out)
        return EXIT_OK
    rows = _shape_rows(args)
    if args.format == "json":
        doc = {"dim": dim, "shapes": [{"shape": s, "std": c} for s, c in rows]}
        print(json.dumps(doc, ensure_ascii=False), file=out)
    elif args.format == "csv":
        print(_csv([["shape", "std"]] + [[s, c] for s, c in rows]), file=out)
    else:
        for s, c in rows:
            print(f"{s}\t{c}", file=out)
        print(f"total {sum(c * c for _, c in rows)} = {dim}", file=out)
    return EXIT_OK


def cmd_rep(args, out):
    from .parsing import parse_y
    from .tensorrep import rho

    dim = (args.r * args.n) ** args.n
    budget_check(dim, args.budget, "V^⊗n")
    m = rho(parse_y(args.elem, args.r, args.n))
    if args.format == "json":
        print(m.to_json({"r": args.r, "n": args.n, "element": args.elem}), file=out)
    elif args.format == "csv":
        print(m.to_csv().rstrip("\n"), file=out)
    else:
        print(f"dim {m.dim}", file=out)
        for i, j, v in m.triplets():
            print(f"{i} {j} {v}", file=out)
    return EXIT_OK


COMMANDS = {"mul": cmd_mul, "verify": cmd_verify, "basis": cmd_basis, "dim": cmd_dim, "rep": cmd_rep}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.budget is None:
            args.budget = _default_budget()
        _check_sizes(args)
        code = COMMANDS[args.cmd](args, out)
    except BudgetExceeded as exc:
        print(f"yhe: budget exceeded: {exc}", file=sys.stderr)
        code = EXIT_BUDGET
    except UsageError as exc:
        print(f"yhe: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
