"""Exhaustive finite-field checks of three loop-group memberships.

For each case we have a left-hand unipotent element L(x), a unipotent prefix
P(x) and a monomial lift T of a translation, and we check that

    k(x) = (P(x) T)^{-1} L(x)

lies in the relevant parahoric, for every x in F_q^x.

Coordinates for 3x3 matrices are ordered (x_{-1}, x_0, x_1), i.e. index
``i + 1`` holds x_i.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..errors import ConstraintViolated, LiftNotFound, NotInLoopGroup, UnsupportedKind, ZeroDenominator
from .laurent import (
    LaurentPoly,
    LoopMatrix,
    Model,
    preserves_hermitian_form,
    ramified_model,
    split_model,
    unramified_model,
)

KINDS = ("sl2_standard", "su3_standard", "su3_nonstandard")
DEFAULT_MAX_Q = 9


def _idx(i: int) -> int:
    return i + 1


# -- unipotent elements ------------------------------------------------------


def sl2_unipotent(model: Model, sign: int, c: LaurentPoly) -> LoopMatrix:
    """u_{alpha}(c) = [[1, c], [0, 1]] for sign +1, u_{-alpha}(c) the transpose."""
    rows = [[1, 0], [0, 1]]
    if sign > 0:
        rows[0][1] = c
    else:
        rows[1][0] = c
    return LoopMatrix(model, rows)


def su3_constraint(c: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return c.tau() * c + d + d.tau()


def su3_unipotent(i: int, c: LaurentPoly, d: LaurentPoly) -> LoopMatrix:
    """I_3 + g with g_{-i,0} = -tau(c), g_{0,i} = c, g_{-i,i} = d."""
    if i not in (1, -1):
        raise ValueError("i must be 1 or -1")
    model = c.model
    if not su3_constraint(c, d).is_zero():
        raise ConstraintViolated("tau(c) c + d + tau(d) must vanish")
    m = LoopMatrix.identity(model, 3)
    m.rows[_idx(-i)][_idx(0)] = -c.tau()
    m.rows[_idx(0)][_idx(i)] = c
    m.rows[_idx(-i)][_idx(i)] = d
    return m


def su3_unipotent_inverse(i: int, c: LaurentPoly, d: LaurentPoly) -> LoopMatrix:
    """u_i(c, d)^{-1} = u_i(-c, -d - tau(c) c)."""
    return su3_unipotent(i, -c, -d - c.tau() * c)


# -- parahoric membership -----------------------------------------------------


def _check_loop_group(m: LoopMatrix, kind: str):
    if not m.det() == 1:
        raise NotInLoopGroup("determinant is not 1")
    if kind != "sl2_standard" and not preserves_hermitian_form(m):
        raise NotInLoopGroup("matrix does not preserve the hermitian form")


def parahoric_member(m: LoopMatrix, kind: str) -> bool:
    """Integrality test; for ``su3_nonstandard`` the test is on s^{-1} m s with s = diag(1, 1, v)."""
    if kind not in KINDS:
        raise UnsupportedKind(kind)
    expected = 2 if kind == "sl2_standard" else 3
    if m.n != expected:
        raise NotInLoopGroup(f"{kind} needs a {expected}x{expected} matrix")
    _check_loop_group(m, kind)
    vals = m.valuations()
    if kind != "su3_nonstandard":
        return all(v >= 0 for row in vals for v in row)
    if not m.model.ramified:
        raise UnsupportedKind("the non-standard parahoric needs the ramified model")
    shift = (0, 0, 1)  # s = diag(1, 1, v)
    return all(vals[i][j] - shift[i] + shift[j] >= 0 for i in range(3) for j in range(3))


# -- translation lifts ------------------------------------------------------

# valuation of the (0, 0) entry of the pinned lift; 1 means the lift of t_{alpha^vee}
PINNED_DIRECTION = {"sl2_standard": 1, "su3_standard": 1, "su3_nonstandard": 1}


def lift_candidates(kind: str, model: Model, max_exp: int = 1, lead: int | None = None):
    """Yield diagonal c_i u^{a_i} (|a_i| <= max_exp, a_0 != 0) with det 1 in the loop group.

    Translations lift to the diagonal torus, so no other monomial shapes are
    searched.  The last unit is solved from det = 1; ``lead`` fixes a_0.
    """
    n = 2 if kind == "sl2_standard" else 3
    F = model.field
    units = list(F.nonzero())
    for exps in itertools.product(range(-max_exp, max_exp + 1), repeat=n):
        if sum(exps) or exps[0] == 0 or (lead is not None and exps[0] != lead):
            continue
        for cs in itertools.product(units, repeat=n - 1):
            prod = 1
            for c in cs:
                prod = F.mul(prod, c)
            cs = cs + (F.inv(prod),)
            m = LoopMatrix.diagonal(model, [LaurentPoly.monomial(model, c, e) for c, e in zip(cs, exps)])
            try:
                _check_loop_group(m, kind)
            except NotInLoopGroup:
                continue
            yield m


def lift_image(m: LoopMatrix) -> tuple[int]:
    """Translation part of a diagonal lift, as an element of the rank-one lattice of SL_2."""
    return (m.rows[0][0].valuation(),)


def translation_lift(kind: str, model: Model, direction: int | None = None) -> LoopMatrix:
    """The first candidate (in search order) whose image is t_{direction * alpha^vee}."""
    if direction is None:
        direction = PINNED_DIRECTION[kind]
    return _first_lift(kind, model, direction)


@lru_cache(maxsize=None)
def _first_lift(kind: str, model: Model, direction: int) -> LoopMatrix:
    for m in lift_candidates(kind, model, lead=direction):
        return m
    raise LiftNotFound(f"no monomial lift for {kind} over {model.field}")


# -- the three cases ------------------------------------------------------------


def model_for(case: int, q: int, unramified: bool = False) -> Model:
    if q % 2 == 0:
        raise UnsupportedKind("q must be odd")
    if case == 1:
        return split_model(q)  # SL_2 is split, so the unramified flag changes nothing
    if case == 2:
        return unramified_model(q) if unramified else ramified_model(q)
    if case == 3:
        if unramified:
            raise UnsupportedKind("case 3 is only defined for the ramified model")
        return ramified_model(q)
    raise UnsupportedKind(f"unknown case {case}")


def case_kind(case: int) -> str:
    return {1: "sl2_standard", 2: "su3_standard", 3: "su3_nonstandard"}[case]


def _trace_zero_unit(model: Model) -> int:
    """Smallest eps in F_{q^2} with tau(eps) = -eps, eps != 0."""
    F = model.field
    return next(e for e in F.nonzero() if model.tau_coeff(e) == F.neg(e))


def case_elements(case: int, model: Model, x: int):
    """Return ``(L, P)`` for x in F_q (x = 0 gives only L)."""
    F = model.field
    X = LaurentPoly.const(model, x)
    zero = LaurentPoly.zero(model)
    if case == 1:
        L = sl2_unipotent(model, -1, LaurentPoly.monomial(model, x, -1))
        P = None if x == 0 else sl2_unipotent(model, 1, LaurentPoly.monomial(model, F.inv(x), 1))
        return L, P
    if case == 2:
        if model.ramified:
            dL = LaurentPoly.monomial(model, x, -1)
        else:
            # no uniformizer is tau-anti-invariant here; eps t^{-1} x plays its role
            dL = LaurentPoly.monomial(model, F.mul(_trace_zero_unit(model), x), -1)
        L = su3_unipotent(-1, zero, dL)
        P = None if x == 0 else su3_unipotent(1, zero, dL.inverse())
        return L, P
    if case == 3:
        half = F.inv(F.from_int(2))
        L = su3_unipotent(-1, X, LaurentPoly.const(model, F.neg(F.mul(half, F.mul(x, x)))))
        if x == 0:
            return L, None
        two = F.from_int(2)
        xi = F.inv(x)
        c = LaurentPoly.monomial(model, F.neg(F.mul(two, xi)), 0)
        d = LaurentPoly.monomial(model, F.neg(F.mul(two, F.mul(xi, xi))), 0)
        return L, su3_unipotent(1, c, d)
    raise UnsupportedKind(f"unknown case {case}")


def case3_literal_prefix(model: Model, x: int) -> LoopMatrix:
    """u_1(2/x, 2/x^2) built literally; raises ConstraintViolated since 8/x^2 != 0."""
    F = model.field
    xi = F.inv(x)
    two = F.from_int(2)
    c = LaurentPoly.const(model, F.mul(two, xi))
    d = LaurentPoly.const(model, F.mul(two, F.mul(xi, xi)))
    return su3_unipotent(1, c, d)


def membership_witness(case: int, model: Model, x: int, lift: LoopMatrix | None = None) -> LoopMatrix:
    """k = (P T)^{-1} L for x != 0."""
    if x == 0:
        raise ZeroDenominator("x = 0 has no prefix; use the base-point check")
    L, P = case_elements(case, model, x)
    if lift is None:
        lift = translation_lift(case_kind(case), model)
    return (P * lift).inverse() * L


def check_case(case: int, q: int, x: int, unramified: bool = False, lift: LoopMatrix | None = None):
    """Return ``(passed, witness)``; x = 0 checks that L(0) itself is integral."""
    model = model_for(case, q, unramified)
    kind = case_kind(case)
    if x == 0:
        k, _ = case_elements(case, model, 0)
    else:
        k = membership_witness(case, model, x, lift)
    return parahoric_member(k, kind), k


def verify_cases(case: int, q: int, unramified: bool = False, max_q: int = DEFAULT_MAX_Q) -> dict:
    """Sweep x over F_q^x; report per-x results and the first failing witness."""
    if q > max_q:
        raise ValueError(f"q = {q} exceeds the cap {max_q}")
    model = model_for(case, q, unramified)
    lift = translation_lift(case_kind(case), model)
    results = []
    first_failure = None
    for x in model.base_scalars():
        ok, k = check_case(case, q, x, unramified, lift)
        results.append({"x": x, "pass": ok})
        if not ok and first_failure is None:
            first_failure = {"x": x, "witness": k.to_json()}
    return {
        "case": case,
        "q": q,
        "unramified": unramified,
        "all_pass": all(r["pass"] for r in results),
        "checked": len(results),
        "lift": lift.to_json(),
        "results": results,
        "first_failure": first_failure,
    }
