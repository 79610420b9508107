"""Command-line front end.

Exit codes: 0 when everything checked passes, 1 when a discrepancy was
found, 2 for usage errors, capacity refusals and unwritable output.
"""

import argparse
import json
import statistics
import sys
import time

import numpy as np

from . import catalog, report
from .circulant import Circulant, FloatCapacityError, dft, eigenvalues, matvec
from .config import DEFAULT_TOLERANCES
from .verifier import reproduce_table3, scan, verify_family

EXIT_OK = 0
EXIT_FLAGGED = 1
EXIT_ERROR = 2

DEFAULT_BENCH_SIZES = (64, 100, 256, 500, 1024, 2048)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _family_name(text):
    try:
        return catalog.family(text).name
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}") from None


def _family_list(text):
    if text.strip().lower() == "all":
        return [spec.name for spec in catalog.FAMILIES.values()]
    return [_family_name(part) for part in text.split(",") if part.strip()]


def _order(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"order must be >= 1, got {n}")
    return n


def _order_range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo = int(lo)
        hi = int(hi) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; use LO..HI") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 1 <= LO <= HI")
    return lo, hi


def _int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "markdown"), default="markdown")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--rtol", type=float, help="relative spectral tolerance")
    common.add_argument("--dft-rtol", type=float, help="direct vs fast transform tolerance")
    common.add_argument("--dense-atol", type=float, help="dense eigensolver tolerance")

    parser = _Parser(prog="circnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("table3", parents=[common], help="reproduce and audit Table 3")

    p = sub.add_parser("verify", parents=[common], help="verify one family at one order")
    p.add_argument("--family", type=_family_name, required=True)
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--no-float", action="store_true", help="skip the floating route")
    p.add_argument("--allow-rounding", action="store_true",
                   help="run the floating route past the 2**53 entry cap")

    p = sub.add_parser("scan", parents=[common], help="verify families over a range of orders")
    p.add_argument("--families", type=_family_list, default=None, help="e.g. B1,B2 or all")
    p.add_argument("--range", dest="n_range", type=_order_range, default=(1, 70))
    p.add_argument("--no-float", action="store_true")
    p.add_argument("--allow-rounding", action="store_true")
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("row", parents=[common], help="print a family's first row")
    p.add_argument("--family", type=_family_name, required=True)
    p.add_argument("--n", type=_order, required=True)

    p = sub.add_parser("eig", parents=[common], help="print the circulant spectrum")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", type=_family_name)
    src.add_argument("--row", type=_int_list, help="explicit first row, e.g. 0,1,2")
    p.add_argument("--n", type=_order)
    p.add_argument("--method", choices=("auto", "direct", "fast"), default="auto")
    p.add_argument("--allow-rounding", action="store_true")

    p = sub.add_parser("bench", parents=[common], help="time matvec and transform kernels")
    p.add_argument("--sizes", type=_int_list, default=list(DEFAULT_BENCH_SIZES))
    p.add_argument("--repeats", type=int, default=5)

    p = sub.add_parser("catalog", parents=[common], help="dump the identity catalog (errata)")
    p.add_argument("--families", action="store_true", help="dump the family catalog instead")
    return parser


def _tolerances(args):
    return DEFAULT_TOLERANCES.with_overrides(
        spectral_rtol=args.rtol, dft_rtol=args.dft_rtol, dense_atol=args.dense_atol
    )


def _records_markdown(records):
    if not records:
        return "(empty)\n"
    header = list(records[0])
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for rec in records:
        lines.append("| " + " | ".join("-" if rec[k] is None else str(rec[k]) for k in header) + " |")
    return "\n".join(lines) + "\n"


def _records(records, fmt):
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        return report._csv(records, list(records[0]) if records else [])
    return _records_markdown(records)


def _reports(reports, fmt):
    if fmt == "json":
        return report.reports_to_json(reports) + "\n"
    if fmt == "csv":
        return report.reports_to_csv(reports)
    return report.reports_to_markdown(reports)


def _cmd_table3(args, tol):
    grid, discrepancies = reproduce_table3()
    if args.format == "json":
        text = report.table3_to_json(grid, discrepancies) + "\n"
    elif args.format == "csv":
        text = report.table3_to_csv(grid, discrepancies)
    else:
        text = report.table3_to_markdown(grid, discrepancies)
    return text, EXIT_FLAGGED if discrepancies else EXIT_OK


def _cmd_verify(args, tol):
    r = verify_family(args.family, args.n, tol, not args.no_float, args.allow_rounding)
    return _reports([r], args.format), EXIT_OK if r.passed else EXIT_FLAGGED


def _cmd_scan(args, tol):
    families = args.families if args.families is not None else list(catalog.FAMILIES)
    result = scan(families, args.n_range, tol, not args.no_float,
                  args.allow_rounding, args.workers)
    return _reports(result.reports, args.format), EXIT_OK if result.all_passed else EXIT_FLAGGED


def _cmd_row(args, tol):
    row = catalog.family_first_row(args.family, args.n)
    records = [{"i": i, "value": v} for i, v in enumerate(row)]
    if args.format == "json":
        return json.dumps({"family": args.family, "n": args.n, "row": row}) + "\n", EXIT_OK
    return _records(records, args.format), EXIT_OK


def _cmd_eig(args, tol):
    if args.family is not None:
        if args.n is None:
            raise UsageError("eig --family needs --n")
        c = Circulant.from_family(args.family, args.n)
    else:
        c = Circulant(args.row)
    spectrum = eigenvalues(c, args.method, args.allow_rounding, tol)
    records = [
        {"j": j, "re": float(z.real), "im": float(z.imag), "abs": float(abs(z))}
        for j, z in enumerate(spectrum.values)
    ]
    return _records(records, args.format), EXIT_OK


def _median_seconds(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def _cmd_bench(args, tol):
    if args.repeats < 5:
        raise UsageError("bench needs --repeats >= 5")
    if any(n < 1 for n in args.sizes):
        raise UsageError("bench sizes must be >= 1")
    rng = np.random.default_rng(0)
    records = []
    for n in args.sizes:
        c = Circulant(tuple(int(a) for a in rng.integers(0, 100, n)))
        v = rng.standard_normal(n)
        x = c.float_row()
        timings = {
            "naive_matvec_ms": lambda: matvec(c, v, "naive"),
            "convolution_matvec_ms": lambda: matvec(c, v, "convolution", "fast"),
            "direct_dft_ms": lambda: dft(x, +1, "direct"),
            "fast_dft_ms": lambda: dft(x, +1, "fast"),
        }
        rec = {"n": n}
        for name, fn in timings.items():
            rec[name] = round(1e3 * _median_seconds(fn, args.repeats), 4)
        records.append(rec)
    return _records(records, args.format), EXIT_OK


def _cmd_catalog(args, tol):
    records = catalog.families_as_json() if args.families else catalog.identities_as_json()
    if args.format == "json":
        return json.dumps(records, indent=2) + "\n", EXIT_OK
    return _records(records, args.format), EXIT_OK


_COMMANDS = {
    "table3": _cmd_table3,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "row": _cmd_row,
    "eig": _cmd_eig,
    "bench": _cmd_bench,
    "catalog": _cmd_catalog,
}


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text, code = _COMMANDS[args.command](args, _tolerances(args))
    except UsageError as exc:
        print(f"circnorm: error: {exc}", file=stderr)
        return EXIT_ERROR
    except FloatCapacityError as exc:
        print(f"circnorm: capacity error: {exc}", file=stderr)
        return EXIT_ERROR
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"circnorm: cannot write {args.output}: {exc.strerror}", file=stderr)
            return EXIT_ERROR
    else:
        stdout.write(text)
    return code


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
