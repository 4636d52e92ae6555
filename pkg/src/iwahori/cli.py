"""Command-line front end.

Every command prints JSON (or DOT for ``kr-poset --dot``) on stdout.  Exit
status: 0 success, 1 domain error, 2 usage error; errors are printed as a
single ``{"error": ...}`` record.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .admissible import admissible_set, admissible_set_J, curve_chain, kr_poset_very_special
from .data import inner_twist, restriction_of_scalars, standard_datum, unitary_twist
from .errors import IwahoriError
from .frobenius import FrobeniusTwist, kottwitz_Gamma, kottwitz_I
from .loops.cases import DEFAULT_MAX_Q, verify_cases
from .sigma import b_of_g_mu, is_sigma_straight, mu_ordinary, newton_point
from .weyl import (
    element_from_json,
    element_to_json,
    identity,
    multiply,
    simple_reflection_by_name,
    sort_key,
    translation,
    word_string,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rat(x) -> str:
    return str(Fraction(x))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# -- loading ----------------------------------------------------------------


def _load(args) -> tuple:
    if getattr(args, "datum", None):
        return io.load(args.datum)
    if getattr(args, "kind", None):
        d = standard_datum(args.kind)
        return d, FrobeniusTwist(d)
    raise UsageError("one of --datum FILE or --kind KIND is required")


def _check_rank(datum, v, what):
    if len(v) != datum.lattice_rank:
        raise UsageError(f"{what} must have {datum.lattice_rank} entries")


def _element(datum, args):
    if args.element:
        return element_from_json(datum, json.loads(args.element))
    if args.translation is None:
        raise UsageError("one of --element JSON or --translation VEC is required")
    _check_rank(datum, args.translation, "--translation")
    w = translation(datum, args.translation)
    if args.word:
        prefix = identity(datum)
        for name in args.word.split():
            prefix = multiply(prefix, simple_reflection_by_name(datum, name))
        w = multiply(prefix, w)
    return w


def _element_record(w) -> dict:
    rec = element_to_json(w)
    rec["length"] = w.length
    rec["word"] = word_string(w)
    return rec


# -- commands -----------------------------------------------------------------


def cmd_datum(args):
    d = standard_datum(args.kind)
    twist = None
    if args.unitary:
        twist = unitary_twist(d)
    elif args.inner:
        twist = inner_twist(d)
    if args.res > 1:
        d, twist = restriction_of_scalars(d, twist, args.res)
    if twist is None:
        twist = FrobeniusTwist(d)
    _emit(io.datum_to_json(d, twist))


def cmd_adm(args):
    d, twist = _load(args)
    _check_rank(d, args.mu, "--mu")
    if args.parahoric is not None:
        names = [n for n in args.parahoric.replace(",", " ").split() if n]
        els = admissible_set_J(twist, args.mu, names)
    else:
        els = admissible_set(twist, args.mu).elements
    _emit([_element_record(w) for w in sorted(els, key=sort_key)])


def cmd_straight(args):
    d, twist = _load(args)
    w = _element(d, args)
    nu, nubar = newton_point(twist, w)
    _emit({
        "element": _element_record(w),
        "straight": is_sigma_straight(twist, w),
        "newton_dominant": [_rat(x) for x in nubar],
    })


def cmd_newton(args):
    d, twist = _load(args)
    w = _element(d, args)
    nu, nubar = newton_point(twist, w)
    _emit({
        "element": _element_record(w),
        "newton": [_rat(x) for x in nu],
        "newton_dominant": [_rat(x) for x in nubar],
        "kappa_I": list(kottwitz_I(w)),
        "kappa": list(kottwitz_Gamma(twist, w)),
    })


def cmd_bg(args):
    d, twist = _load(args)
    _check_rank(d, args.mu, "--mu")
    _emit([p.to_json() for p in b_of_g_mu(twist, args.mu)])


def cmd_mu_ordinary(args):
    d, twist = _load(args)
    _check_rank(d, args.mu, "--mu")
    p = mu_ordinary(twist, args.mu)
    _emit([] if p is None else [p.to_json()])


def cmd_kr_poset(args):
    d, twist = _load(args)
    _check_rank(d, args.mu, "--mu")
    poset = kr_poset_very_special(twist, args.mu)
    if args.dot:
        sys.stdout.write(poset.to_dot())
    else:
        _emit(poset.to_json())


def cmd_chain(args):
    d, twist = _load(args)
    _check_rank(d, args.mu, "--mu")
    _check_rank(d, args.start, "--from")
    _emit([list(v) for v in curve_chain(twist, args.start, args.mu)])


def cmd_verify_loop(args):
    report = verify_cases(args.case, args.q, args.unramified, max_q=args.max_q)
    _emit(report)
    return 0 if report["all_pass"] else 1


def cmd_selftest(args):
    from .selftest import run_selftest

    report = run_selftest(seed=args.seed, jobs=args.jobs)
    _emit(report)
    return 0 if report["all_pass"] else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="iwahori", description="Iwahori-Weyl group combinatorics.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def with_datum(sp):
        sp.add_argument("--datum", help="datum JSON file")
        sp.add_argument("--kind", help="standard split datum instead of a file, e.g. gl3")
        return sp

    def with_element(sp):
        sp.add_argument("--element", help='element JSON {"translation": [...], "finite_part": [[...]]}')
        sp.add_argument("--translation", type=_vector, help="translation part, e.g. 1,0")
        sp.add_argument("--word", help="simple reflections multiplied on the left, e.g. 's1 s0'")
        return sp

    sp = sub.add_parser("datum", help="write a standard datum as JSON")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--res", type=int, default=1, help="Weil restriction degree")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--unitary", action="store_true")
    g.add_argument("--inner", action="store_true")
    sp.set_defaults(func=cmd_datum)

    sp = with_datum(sub.add_parser("adm", help="the mu-admissible set"))
    sp.add_argument("--mu", type=_vector, required=True)
    sp.add_argument("--parahoric", help="J as names, e.g. s1,s2")
    sp.set_defaults(func=cmd_adm)

    sp = with_element(with_datum(sub.add_parser("straight", help="sigma-straightness test")))
    sp.set_defaults(func=cmd_straight)

    sp = with_element(with_datum(sub.add_parser("newton", help="Newton point and Kottwitz class")))
    sp.set_defaults(func=cmd_newton)

    for name, func in (("bg", cmd_bg), ("mu-ordinary", cmd_mu_ordinary)):
        sp = with_datum(sub.add_parser(name))
        sp.add_argument("--mu", type=_vector, required=True)
        sp.set_defaults(func=func)

    sp = with_datum(sub.add_parser("kr-poset", help="very special strata poset"))
    sp.add_argument("--mu", type=_vector, required=True)
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_kr_poset)

    sp = with_datum(sub.add_parser("chain", help="Stembridge / Frobenius-orbit chain"))
    sp.add_argument("--from", dest="start", type=_vector, required=True)
    sp.add_argument("--mu", type=_vector, required=True)
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("verify-loop", help="finite-field membership sweep")
    sp.add_argument("--case", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--unramified", action="store_true")
    sp.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q)
    sp.set_defaults(func=cmd_verify_loop)

    sp = sub.add_parser("selftest", help="run the invariant suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_selftest)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args) or 0
    except UsageError as exc:
        _emit({"error": str(exc), "kind": "usage"})
        return 2
    except (IwahoriError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
