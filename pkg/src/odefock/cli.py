"""Command-line front end.

JSON goes to standard output (compact, deterministically ordered); a
human-readable rendering goes to standard error under --pretty.  Exit codes:
0 success, 1 verification failure, 2 usage or parse error, 3 domain error.
All numeric output uses exact fraction strings; there is no floating point
anywhere in this package.
"""

import argparse
import json
import sys

from .errors import DomainError
from .partitions import Partition
from .boson import EPoly, SchurVector, epoly_to_schur, schur_to_epoly
from .series import series_from_obj, cauchy_decompose
from .vertex import g_strip, g_vee, gamma, gamma_vee
from .verify import SUITE_NAMES, run_suite
from .infinity import kp_residual

_OPS = ("G", "Gvee", "Gamma", "Gammavee")


def _emit(obj, pretty=False, pretty_text=None):
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    if pretty and pretty_text is not None:
        sys.stderr.write(pretty_text + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="odefock",
        description="Exact computations in truncated Fock spaces: basis "
                    "expansions, vertex operators, solution decompositions "
                    "and identity verification.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="convert between the e-monomial and "
                                      "Schur bases")
    p.add_argument("--r", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", help="partition in 3,2,1 format")
    group.add_argument("--epoly", help="e-polynomial as JSON")
    p.add_argument("--to", choices=("e", "schur"), required=True)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("vertex", help="apply a vertex-type operator to a "
                                      "Schur class")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--op", choices=_OPS, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--zorder", type=int, default=None,
                   help="z-truncation, required for Gamma only")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("decompose", help="coordinates of a solution series "
                                         "over the kernel basis")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--series", default=None,
                   help="series as JSON (default: read standard input)")
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("kp-check", help="bilinear residual of the untruncated "
                                        "solution series")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--torder", type=int, required=True)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--corrupt", action="store_true",
                   help="damage one series coefficient; the residual is then "
                        "expected to be nonzero and the exit code 1")
    p.add_argument("--pretty", action="store_true")
    return parser


def _cmd_expand(args):
    if args.partition is not None:
        lam = Partition.parse(args.partition)
        v = SchurVector.basis(lam, args.r)
    else:
        v = epoly_to_schur(EPoly.from_obj(json.loads(args.epoly)))
        if v.r != args.r:
            raise DomainError(f"input truncation {v.r} does not match --r {args.r}")
    if args.to == "e":
        out = schur_to_epoly(v)
        _emit(out.to_obj(), args.pretty, repr(out))
    else:
        _emit(v.to_obj(), args.pretty, repr(v))
    return 0


def _cmd_vertex(args, parser):
    lam = Partition.parse(args.partition)
    v = SchurVector.basis(lam, args.r)
    if args.op == "Gamma":
        if args.zorder is None:
            parser.error("--zorder is required for --op Gamma")
        out = gamma(v, args.zorder)
    elif args.op == "G":
        out = g_strip(v)
    elif args.op == "Gvee":
        out = g_vee(v)
    else:
        out = gamma_vee(v)
    _emit(out.to_obj(), args.pretty, repr(out))
    return 0


def _cmd_decompose(args):
    text = args.series if args.series is not None else sys.stdin.read()
    phi = series_from_obj(json.loads(text))
    first = phi.coeffs[0]
    if isinstance(first, EPoly):
        if first.r != args.r:
            raise DomainError(f"series truncation {first.r} does not match --r {args.r}")
    else:
        phi = phi.map(lambda c: EPoly.const(c, args.r))
    coords = cauchy_decompose(phi, args.r)
    obj = {"r": args.r, "coefficients": [c.to_obj() for c in coords]}
    _emit(obj, args.pretty, " ; ".join(repr(c) for c in coords))
    return 0


def _cmd_verify(args):
    report = run_suite(args.suite, args.r, args.max_weight)
    summary = (f"suite {report['suite']}: {report['cases']} cases, "
               f"{len(report['failures'])} failures")
    _emit(report, args.pretty, summary)
    return 0 if not report["failures"] else 1


def _cmd_kp_check(args):
    res = kp_residual(args.j, args.n, args.torder, bound=args.M,
                      corrupt=args.corrupt)
    first_bad = next((i for i, c in enumerate(res.coeffs) if c), None)
    bound = args.M if args.M is not None else max(args.j + args.torder + 4 * args.n, 2)
    obj = {"j": args.j, "n": args.n, "torder": args.torder, "M": bound,
           "corrupt": args.corrupt,
           "residual_is_zero": first_bad is None,
           "first_nonzero_order": first_bad}
    _emit(obj, args.pretty,
          "residual identically zero" if first_bad is None
          else f"nonzero residual from order {first_bad}")
    return 0 if first_bad is None else 1


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.verb == "expand":
            return _cmd_expand(args)
        if args.verb == "vertex":
            return _cmd_vertex(args, parser)
        if args.verb == "decompose":
            return _cmd_decompose(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "kp-check":
            return _cmd_kp_check(args)
        parser.error(f"unknown verb {args.verb!r}")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    return 0


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
