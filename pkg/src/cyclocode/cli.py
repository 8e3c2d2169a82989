"""Command-line frontend: ``cyclocode {weights,verify,gauss,jacobi,table}``.

Exit codes: 0 success, 1 usage or validation error, 2 verification mismatch.
"""

import argparse
import csv
import json
import sys
import time

from .charsum import (
    CharSpec,
    as_base_field,
    cubic_AB,
    gauss_quadratic_exact,
    gauss_sum,
    jacobi_cubic,
    quartic_decompose,
    tolerance,
)
from .checks import _pe, golden_suite, property_suite, sweep_suite
from .code import (
    _default_workers,
    dual_distance_probe,
    is_griesmer_optimal,
    min_distance,
    min_distance_lower_bound,
    validate_spec,
    weight_distribution_brute,
)
from .errors import CycloCodeError, Mismatch
from .field import build_base_field
from .theory import first_difference, merge_rows, predict, table_rows


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fail(msg, code=1):
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_weights(args):
    try:
        spec = validate_spec(args.p, args.e, args.k, args.e1, args.e2)
    except (CycloCodeError, ValueError) as exc:
        return _fail(exc)
    workers = args.threads or _default_workers()
    t0 = time.perf_counter()
    verdict = None
    code = 0
    try:
        if args.method in ("theory", "both"):
            dist = predict(spec).distribution
        if args.method in ("brute", "both"):
            brute = weight_distribution_brute(spec, workers=workers)
            if args.method == "brute":
                dist = brute
            else:
                diff = first_difference(dist, brute)
                if diff is None:
                    verdict = "match"
                else:
                    verdict = "mismatch: weight {} predicted {} enumerated {}".format(*diff)
                    code = 2
        dual = dual_distance_probe(spec) if args.dual else None
    except CycloCodeError as exc:
        return _fail(exc)
    h = min_distance(dist)
    report = {
        "spec": spec.as_dict(),
        "method": args.method,
        "distribution": [{"w": w, "count": c} for w, c in dist.entries],
        "min_distance": h,
        "lower_bound": min_distance_lower_bound(spec),
        "griesmer_optimal": is_griesmer_optimal(spec, h),
        "dual_distance": dual,
        "verdict": verdict,
        "ms": round((time.perf_counter() - t0) * 1000, 3),
    }
    if args.enumerator:
        report["enumerator"] = dist.enumerator()
    print(json.dumps(report))
    return code


def _parse_sweep(text):
    fields = dict(part.split("=", 1) for part in text.split(","))
    return int(fields["q"]), int(fields["k"]), int(fields.get("e-max", 8))


def cmd_verify(args):
    workers = args.threads or 1
    results = property_suite() + golden_suite(workers=workers, dual=args.dual)
    if args.sweep:
        try:
            q, k, e_max = _parse_sweep(args.sweep)
        except (KeyError, ValueError):
            return _fail(f"bad --sweep value {args.sweep!r}; expected q=Q,k=K,e-max=M")
        results += sweep_suite(q, k, e_max, workers=workers)
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 2 if failed else 0


def cmd_gauss(args):
    try:
        base = build_base_field(args.p, args.e)
    except (CycloCodeError, ValueError) as exc:
        return _fail(exc)
    orders = args.order or [d for d in range(2, base.order + 1) if base.order % d == 0]
    tol = tolerance(base.q)
    for order in orders:
        try:
            char = CharSpec(base, order)
        except CycloCodeError as exc:
            return _fail(f"{exc} (q-1 = {base.order})")
        g = gauss_sum(char)
        ok = abs(abs(g) ** 2 - base.q) < tol
        line = f"order={order} G={g.real:.9f}{g.imag:+.9f}i |G|^2={abs(g) ** 2:.9f}"
        if order == 2 and base.p != 2:
            exact = gauss_quadratic_exact(base.p, base.e)
            ok = ok and abs(g - exact.value) < tol
            line += f" exact={exact}"
        print(line + f" check={'ok' if ok else 'FAIL'}")
        if not ok:
            return 2
    return 0


def cmd_jacobi(args):
    try:
        base = as_base_field(args.q)
        j = jacobi_cubic(base)
    except (CycloCodeError, ValueError) as exc:
        return _fail(exc)
    g = gauss_sum(CharSpec(base, 3))
    ok = abs(g**3 - base.q * complex(j)) < tolerance(base.q, 2)
    ab = cubic_AB(base)
    ok = ok and 4 * base.q == ab.A**2 + 27 * ab.B**2
    print(f"q={base.q} J={j.a}{j.b:+d}w A={ab.A} B={ab.B} G^3=qJ:{'ok' if ok else 'FAIL'}")
    if base.q % 4 == 1:
        mn = quartic_decompose(base)
        print(f"m={mn.m} n={mn.n}")
    return 0 if ok else 2


def cmd_table(args):
    try:
        p, e = args.p, args.e
        rows = table_rows(args.table_id, build_base_field(p, e), args.k)
    except (CycloCodeError, ValueError) as exc:
        return _fail(exc)
    dist, _ = merge_rows(rows)
    seen = {}
    for r in rows:
        seen.setdefault(r.weight, []).append(r.tag)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["table", "row", "weight", "frequency", "merge"])
    for r in rows:
        tags = seen[r.weight]
        note = "" if len(tags) == 1 else "merged with " + "; ".join(t for t in tags if t != r.tag)
        writer.writerow([args.table_id, r.tag, r.weight, r.frequency, note])
    return 0


def build_parser():
    parser = _Parser(prog="cyclocode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("weights", help="weight distribution of one code")
    w.add_argument("-p", type=int, required=True)
    w.add_argument("-e", type=int, default=1)
    w.add_argument("-k", type=int, required=True)
    w.add_argument("--e1", type=int, required=True)
    w.add_argument("--e2", type=int, required=True)
    w.add_argument("--method", choices=("brute", "theory", "both"), default="both")
    w.add_argument("--dual", action="store_true", help="also probe the dual distance")
    w.add_argument("--enumerator", action="store_true", help="add the 1+Az^w string")
    w.add_argument("--threads", type=int, default=None)
    w.set_defaults(func=cmd_weights)

    v = sub.add_parser("verify", help="property suite and golden examples")
    v.add_argument("--sweep", help="e.g. q=3,k=3,e-max=6")
    v.add_argument("--dual", action="store_true")
    v.add_argument("--threads", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gauss", help="Gauss sums over GF(p^e)")
    g.add_argument("-p", type=int, required=True)
    g.add_argument("-e", type=int, default=1)
    g.add_argument("--order", type=int, action="append")
    g.set_defaults(func=cmd_gauss)

    j = sub.add_parser("jacobi", help="cubic Jacobi sum, (A, B) and (m, n)")
    j.add_argument("-q", type=int, required=True)
    j.set_defaults(func=cmd_jacobi)

    t = sub.add_parser("table", help="CSV rows of a weight table")
    t.add_argument("table_id", type=int)
    t.add_argument("-p", type=int, required=True)
    t.add_argument("-e", type=int, default=1)
    t.add_argument("-k", type=int, default=None)
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
