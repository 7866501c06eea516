"""Command-line interface.

Exit status: 0 on success, 1 when the computation answers "no" (a projector
does not exist, a realization fails), 2 on usage errors, 3 when an internal
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .diagram import enumerate_diagrams
from .jw import (
    NotExists,
    check_idempotent,
    jw_generic,
    jw_specialize,
    rotatability_check,
    rotation_compare,
    valuation_audit,
    verify_ptr,
)
from .polyarith import NotDivisible
from .qnum import (
    Color,
    DomainError,
    VerificationFailed,
    binom_ideal_generator,
    inv_binom_ideal_generator,
    psi,
    qbezout,
    qbinom,
    quantum_number,
    theta_bezout,
    theta_two_color,
)
from .realization import InvalidRealization, Realization, validate
from .rings import RingMismatch, Specialization, UnsupportedRing
from .tlalgebra import generators_annihilate


class UsageError(Exception):
    pass


def _color(text: str) -> Color:
    try:
        return Color(text)
    except ValueError:
        raise argparse.ArgumentTypeError("color must be 's' or 't'") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _specialization(args) -> Specialization:
    if args.ring is None:
        if args.xs is not None or args.xt is not None:
            raise UsageError("--xs/--xt need --ring")
        return Specialization.generic()
    try:
        return Specialization.parse(args.ring, args.xs, args.xt)
    except (ValueError, RingMismatch) as exc:
        raise UsageError(str(exc)) from exc


def _element_text(elem) -> str:
    R = elem.context.ring
    lines = [f"# n={elem.context.n} leading={elem.context.leading_color.value} ring={R}"]
    for d, v in elem.terms():
        lines.append(f"{d}\t{R.format(v)}")
    return "\n".join(lines)


def _report_json(rep, n: int, color: Color, sp: Specialization) -> dict:
    R = sp.ring
    out = {
        "n": n,
        "leading_color": color.value,
        "specialization": sp.describe(),
        "exists": rep.exists,
        "binomials": [{"k": k, "value": R.to_json(v), "invertible": ok} for k, v, ok in rep.witness],
    }
    if rep.rotatable is not None:
        out["rotatable"] = rep.rotatable
        out.update(rep.details)
    return out


# -- subcommands --------------------------------------------------------------

def cmd_qnum(args) -> int:
    v = quantum_number(args.n, args.color)
    _emit(args, {"n": args.n, "color": args.color.value, "value": str(v)}, str(v))
    return 0


def cmd_qbinom(args) -> int:
    v = qbinom(args.n, args.k, args.color)
    _emit(args, {"n": args.n, "k": args.k, "color": args.color.value, "value": str(v)}, str(v))
    return 0


def cmd_theta(args) -> int:
    v = theta_two_color(args.n, args.color)
    payload = {"n": args.n, "color": args.color.value, "theta": str(v)}
    if args.n > 2:
        payload["psi"] = psi(args.n).to_string("y")
    _emit(args, payload, str(v))
    return 0


def cmd_bezout(args) -> int:
    m, n, c = args.m, args.n, args.color
    if m < 1 or n < 1:
        raise DomainError("bezout needs positive arguments")
    a, b = qbezout(m, n, c)
    payload = {"m": m, "n": n, "color": c.value, "gcd": math.gcd(m, n),
               "quantum": {"a": str(a), "b": str(b)}}
    text = [f"a = {a}", f"b = {b}", f"a*[{m}]_{c.value} + b*[{n}]_{c.value} = [{math.gcd(m, n)}]_{c.value}"]
    if m % n and n % m:
        ta, tb = theta_bezout(m, n, c)
        payload["theta"] = {"a": str(ta), "b": str(tb)}
        text += [f"theta a = {ta}", f"theta b = {tb}"]
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_ideal_gen(args) -> int:
    if args.inverse:
        v = inv_binom_ideal_generator(args.n, args.color)
    else:
        v = binom_ideal_generator(args.n, args.color)
    _emit(args, {"n": args.n, "color": args.color.value, "inverse": args.inverse, "generator": str(v)}, str(v))
    return 0


def cmd_jw(args) -> int:
    n, c = args.n, args.color
    sp = _specialization(args)
    generic = sp == Specialization.generic()
    if generic:
        elem = jw_generic(n, c).as_element()
    else:
        try:
            elem = jw_specialize(n, c, sp)
        except NotExists as exc:
            payload = _report_json(exc.report, n, c, sp)
            payload["error"] = str(exc)
            print(json.dumps(payload, indent=2, sort_keys=True))
            return 1
    payload = elem.to_json()
    text = _element_text(elem)
    if args.check:
        checks = {
            "annihilated": generators_annihilate(elem, "left") and generators_annihilate(elem, "right"),
            "idempotent": check_idempotent(elem),
        }
        if generic and n >= 1:
            checks["ptr_scalar"] = str(verify_ptr(n, c))
            checks["valuations"] = valuation_audit(n, c)["min_valuation"]
        payload["checks"] = checks
        text += "\n# checks: " + json.dumps(checks, sort_keys=True)
        if not (checks["annihilated"] and checks["idempotent"]):
            _emit(args, payload, text)
            return 1
    _emit(args, payload, text)
    return 0


def cmd_ptr(args) -> int:
    v = verify_ptr(args.n, args.color)
    _emit(args, {"n": args.n, "color": args.color.value,
                 "scalar": {"num": str(v.num), "den": str(v.den)}}, str(v))
    return 0


def cmd_rotatable(args) -> int:
    sp = _specialization(args)
    rep = rotatability_check(args.n, args.color, sp)
    payload = _report_json(rep, args.n, args.color, sp)
    if rep.exists and rep.details["other_exists"]:
        lam = rotation_compare(args.n, sp, args.color)
        payload["rotation_scalar"] = None if lam is None else sp.ring.to_json(lam)
    text = f"rotatable = {str(rep.rotatable).lower()}"
    if payload.get("rotation_scalar") is not None:
        text += f"\nrotation scalar = {sp.ring.format(lam)}"
    _emit(args, payload, text)
    return 0 if rep.rotatable else 1


def cmd_realization_check(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from exc
    try:
        re = Realization.from_config(cfg)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed config: {exc}") from exc
    rep = validate(re, demazure=args.demazure)
    print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    return 0 if rep.passed else 1


def cmd_enumerate(args) -> int:
    ds = enumerate_diagrams(args.n)
    _emit(args, {"n": args.n, "count": len(ds), "diagrams": [d.to_json()["matching"] for d in ds]},
          "\n".join(str(d) for d in ds))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twotl", description="Two-colored Temperley-Lieb algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[fmt], help=help_)
        sp.set_defaults(func=fn)
        return sp

    def color(sp):
        sp.add_argument("--color", type=_color, default=Color.s)

    def ring(sp, required=False):
        sp.add_argument("--ring", required=required)
        sp.add_argument("--xs")
        sp.add_argument("--xt")

    s = add("qnum", cmd_qnum, "two-colored quantum number [n]")
    s.add_argument("--n", type=int, required=True)
    color(s)
    s = add("qbinom", cmd_qbinom, "two-colored quantum binomial")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    color(s)
    s = add("theta", cmd_theta, "cyclotomic factor Theta_n")
    s.add_argument("--n", type=int, required=True)
    color(s)
    s = add("bezout", cmd_bezout, "quantum and theta Bezout certificates")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    color(s)
    s = add("ideal-gen", cmd_ideal_gen, "generator of the binomial ideal")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--inverse", action="store_true")
    color(s)
    s = add("jw", cmd_jw, "Jones-Wenzl projector, generic or specialized")
    s.add_argument("--n", type=int, required=True)
    color(s)
    ring(s)
    s.add_argument("--check", action="store_true")
    s = add("ptr", cmd_ptr, "partial trace scalar of the generic projector")
    s.add_argument("--n", type=int, required=True)
    color(s)
    s = add("rotatable", cmd_rotatable, "existence and rotatability over a ring")
    s.add_argument("--n", type=int, required=True)
    color(s)
    ring(s, required=True)
    s = add("realization-check", cmd_realization_check, "validate a realization config")
    s.add_argument("--config", required=True)
    s.add_argument("--demazure", action="store_true")
    s = add("enumerate", cmd_enumerate, "list all diagrams on n strands")
    s.add_argument("--n", type=int, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, UnsupportedRing, InvalidRealization, RingMismatch,
            NotDivisible, ValueError) as exc:
        print(f"twotl: error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:  # pragma: no cover - indicates a bug
        print(f"twotl: internal check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
