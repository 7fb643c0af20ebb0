"""Command-line front end.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error,
3 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codec, hirota, reduction, wave
from .errors import ConsistencyError, PolytauError
from .partitions import FrobeniusCoords, Partition, to_frobenius
from .polyring import Poly, to_rat
from .schur import ArgSpec, schur_jt
from .seeds import SeedSpec, gen_constants, gen_vector
from .tauforge import (
    ConstMatrix,
    TauPoly,
    shape_ckp,
    shape_giambelli,
    shape_kp_jt,
    shape_reduced,
    tau_bkp,
    tau_ckp,
    tau_ckp_reduced,
    tau_kp_giambelli,
    tau_kp_jt,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _UsageError(PolytauError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _UsageError(f"expected comma-separated integers, got {text!r}") from None


def _frobenius(text: str) -> FrobeniusCoords:
    """``"a1,a2|b1,b2"``, or ``"a1,a2"`` for self-conjugate data."""
    if "|" in text:
        a, b = text.split("|", 1)
        return FrobeniusCoords(_ints(a), _ints(b))
    return FrobeniusCoords.self_conjugate(_ints(text))


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read JSON input: {exc}") from None


def _load_tau(path):
    obj = codec.from_json(_read_json(path))
    if not isinstance(obj, (TauPoly, Poly)):
        raise _UsageError("input must be a tau-function or polynomial JSON object")
    return obj


def _constants(args, shape) -> ConstMatrix:
    if args.seed is not None:
        return gen_constants(SeedSpec(args.seed, tuple(shape), args.bound))
    if args.constants in (None, "zero"):
        return ConstMatrix.zero()
    return codec.constants_from_json(_read_json(args.constants))


def _emit(obj, args):
    print(codec.dumps(obj, pretty=args.pretty))


# -- subcommands --------------------------------------------------------------------

def cmd_schur(args):
    lam = Partition(_ints(args.lam))
    spec = ArgSpec.times()
    if args.shift:
        spec = ArgSpec.times(shift=tuple(to_rat(x) for x in _read_json(args.shift)))
    _emit(schur_jt(lam, spec), args)
    return EXIT_OK


def _tau_from_args(args) -> TauPoly:
    kind = args.family
    if kind == "kp-jt":
        if not args.lam:
            raise _UsageError("kp-jt needs --lambda")
        lam = Partition(_ints(args.lam))
        return tau_kp_jt(lam, _constants(args, shape_kp_jt(lam)))
    if kind == "bkp":
        if not args.lam:
            raise _UsageError("bkp needs --lambda (a strict partition)")
        lam = _ints(args.lam)
        padded = lam + (0,) * (len(lam) % 2)
        # entry (i, j) reads constants up to index lam_i + lam_j
        shape = [padded[0] + x for x in padded] if padded else []
        return tau_bkp(lam, _constants(args, shape))
    if args.frobenius:
        f = _frobenius(args.frobenius)
    elif args.lam:
        f = to_frobenius(_ints(args.lam))
    else:
        raise _UsageError(f"{kind} needs --frobenius or --lambda")
    if kind == "kp-giambelli":
        cb, db = shape_giambelli(f)
        c = _constants(args, cb)
        if args.seed is not None:
            d = gen_constants(SeedSpec(args.seed + 1, tuple(db), args.bound))
        elif args.d:
            d = codec.constants_from_json(_read_json(args.d))
        else:
            d = ConstMatrix.zero()
        return tau_kp_giambelli(f, c, d)
    if not f.is_self_conjugate():
        raise _UsageError(f"{kind} needs self-conjugate Frobenius data")
    if kind == "ckp":
        return tau_ckp(f.a, _constants(args, shape_ckp(f.a)))
    if kind == "ckp-reduced":
        if args.n is None:
            raise _UsageError("ckp-reduced needs --n")
        bounds = shape_reduced(args.n, f.a)
        if args.seed is not None:
            cc = {r: gen_vector(args.seed + r, L, args.bound) for r, L in sorted(bounds.items())}
        elif args.constants in (None, "zero"):
            cc = {}
        else:
            raw = _read_json(args.constants)
            cc = {int(r): tuple(to_rat(x) for x in v) for r, v in raw.items()}
        return tau_ckp_reduced(args.n, f, cc)
    raise _UsageError(f"unknown family {kind}")


def cmd_tau(args):
    _emit(_tau_from_args(args), args)
    return EXIT_OK


def _emit_reports(reports, args):
    payload = [codec.report_to_json(r, quiet=args.quiet) for r in reports]
    print(json.dumps(payload[0] if len(payload) == 1 else payload,
                     indent=2 if args.pretty else None,
                     separators=None if args.pretty else (",", ":")))
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"check {r.identity} failed ({len(r.residual)} residual terms)", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args):
    tau = _load_tau(args.input)
    kind = args.identity
    if kind == "kp":
        reports = [hirota.verify_kp(tau, method=args.method)]
    elif kind == "ckp":
        reports = [hirota.verify_ckp(tau, method=args.method)]
    elif kind == "reduced":
        n = args.n if args.n is not None else getattr(tau, "n", None)
        if n is None:
            raise _UsageError("verify reduced needs --n")
        reports = hirota.verify_reduced(tau, n, args.pmax, method=args.method)
    elif kind == "schur-constraint":
        reports = list(hirota.verify_schur_constraint(tau))
    else:
        n = args.n if args.n is not None else getattr(tau, "n", None)
        if n is None:
            raise _UsageError("verify time-indep needs --n")
        reports = hirota.verify_time_independence(tau, n)
    return _emit_reports(reports, args)


def cmd_wave(args):
    if args.route == "jt":
        lam = Partition(_ints(args.lam or ""))
        tau = tau_kp_jt(lam, _constants(args, shape_kp_jt(lam)))
    else:
        args.family = "kp-giambelli"
        tau = _tau_from_args(args)
    if args.check:
        return _emit_reports([wave.cross_check_wave(tau, args.route)], args)
    if args.route == "jt":
        w = wave.wave_jt_det(tau.lam, tau.constants)
    else:
        w = wave.wave_giambelli_det(tau.lam, tau.constants, tau.d)
    _emit(w, args)
    return EXIT_OK


def cmd_kk(args):
    return _emit_reports([reduction.verify_kk(_load_tau(args.input))], args)


def cmd_kdv(args):
    return _emit_reports([reduction.verify_kdv(_load_tau(args.input))], args)


def cmd_gen_constants(args):
    _emit(gen_constants(SeedSpec(args.seed, _ints(args.shape), args.bound)), args)
    return EXIT_OK


def cmd_export_latex(args):
    obj = _load_tau(args.input)
    print(codec.export_latex(obj))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def output_flags(default):
        # subcommands suppress their defaults so flags given before the
        # subcommand name survive
        q = argparse.ArgumentParser(add_help=False)
        q.add_argument("--pretty", action="store_true", default=default, help="indent JSON output")
        q.add_argument("--quiet", action="store_true", default=default, help="omit residual bodies")
        return q

    common = output_flags(argparse.SUPPRESS)

    consts = argparse.ArgumentParser(add_help=False)
    consts.add_argument("--constants", metavar="FILE|zero",
                        help="JSON constant matrix (list of columns), or 'zero'")
    consts.add_argument("--seed", type=int, help="draw constants from this seed instead")
    consts.add_argument("--bound", type=int, default=5, help="value bound for seeded draws")

    p = argparse.ArgumentParser(prog="polytau", description=__doc__.splitlines()[0],
                                parents=[output_flags(False)])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schur", parents=[common], help="Schur polynomial s_lambda(t + shift)")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--shift", metavar="FILE", help="JSON list of rational shifts")
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("tau", parents=[common, consts], help="construct a tau-function")
    s.add_argument("family", choices=["kp-jt", "kp-giambelli", "ckp", "ckp-reduced", "bkp"])
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--frobenius", help="'a1,a2|b1,b2', or 'a1,a2' when self-conjugate")
    s.add_argument("--d", metavar="FILE", help="second constant matrix (kp-giambelli)")
    s.add_argument("--n", type=int, help="reduction order (ckp-reduced)")
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("verify", parents=[common], help="run bilinear or differential checks")
    s.add_argument("identity", choices=["kp", "ckp", "reduced", "schur-constraint", "time-indep"])
    s.add_argument("--input", default="-", help="JSON file, '-' for stdin (default)")
    s.add_argument("--n", type=int)
    s.add_argument("--pmax", type=int, default=2)
    s.add_argument("--method", choices=["auto", "schur", "direct"], default="auto")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("wave", parents=[common, consts], help="determinant wave function")
    s.add_argument("route", choices=["jt", "giambelli"])
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--frobenius")
    s.add_argument("--d", metavar="FILE")
    s.add_argument("--check", action="store_true", help="cross-check against the Miwa shift")
    s.set_defaults(func=cmd_wave)

    for name, fn, what in (("kk-check", cmd_kk, "Kaup-Kupershmidt equation"),
                           ("kdv-check", cmd_kdv, "KdV equation")):
        s = sub.add_parser(name, parents=[common], help=f"check the {what}")
        s.add_argument("--input", default="-")
        s.set_defaults(func=fn)

    s = sub.add_parser("gen-constants", parents=[common], help="seeded constant matrix")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--shape", required=True, help="column lengths, e.g. '3,2'")
    s.add_argument("--bound", type=int, default=5)
    s.set_defaults(func=cmd_gen_constants)

    s = sub.add_parser("export-latex", parents=[common], help="LaTeX rendering of a polynomial")
    s.add_argument("--input", default="-")
    s.set_defaults(func=cmd_export_latex)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PolytauError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
