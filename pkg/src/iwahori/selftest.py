"""Invariant suite behind ``iwahori selftest``.

Each check is a function ``check(rng)`` that raises AssertionError on
failure.  Checks are independent, so ``jobs > 1`` fans them out over
processes; the report is identical either way.
"""

from __future__ import annotations

import itertools
import random
import traceback
import tracemalloc
from concurrent.futures import ProcessPoolExecutor

from . import linalg
from .admissible import (
    admissible_set,
    admissible_set_bruteforce,
    admissible_set_J,
    curve_chain,
    kr_poset_very_special,
    very_special_map,
)
from .data import gl, pgl, product_datum, quotient_datum, restriction_of_scalars, sl, sp4, gsp4
from .fixtures import dominant_in_box, omega_window, twist_fixtures
from .frobenius import kottwitz_Gamma, kottwitz_I, mu_diamond, mu_natural, pi1_I, split_twist
from .rootsystem import dominance_leq, dominant_rep, integral_dominance_leq, length_translation
from .sigma import (
    b_of_g_mu,
    b_of_g_mu_bruteforce,
    b_point,
    is_central,
    is_sigma_straight,
    is_sigma_straight_by_products,
    levi_of,
    mu_ordinary,
    newton_point,
    sigma_conjugate,
    straight_translations_in_orbit,
)
from .weyl import (
    ExtendedAffineElement,
    bruhat_interval_below,
    bruhat_leq,
    enumerate_up_to_length,
    finite_parahoric,
    identity,
    multiply,
    omega_component,
    reduced_word,
    simple_reflections,
    translation,
)

DEFAULT_SEED = 0


def _data():
    return [gl(2), gl(3), sp4()]


def _random_element(rng, datum, radius=2):
    lam = tuple(rng.randint(-radius, radius) for _ in range(datum.lattice_rank))
    return ExtendedAffineElement(datum, lam, rng.randrange(len(datum.weyl)))


def _small(twist, L=4, radius=1):
    d = twist.datum
    return list(enumerate_up_to_length(d, L, omega_window(d, radius)))


# -- root system ------------------------------------------------------------------


def check_length_formula(rng):
    for d in _data():
        for lam in itertools.product(range(-3, 4), repeat=d.lattice_rank):
            t = translation(d, lam)
            word, om = reduced_word(t)
            assert len(word) == t.length == length_translation(d, lam), (d.name, lam)


def check_dominance_orders(rng):
    for d in _data():
        box = dominant_in_box(d, -2, 2)
        rat = {(a, b): dominance_leq(d, a, b) for a in box for b in box}
        ints = {(a, b): integral_dominance_leq(d, a, b) for a in box for b in box}
        for rel in (rat, ints):
            for a in box:
                assert rel[a, a]
            for a, b in itertools.product(box, repeat=2):
                if a != b:
                    assert not (rel[a, b] and rel[b, a])
            for a, b, c in itertools.product(box, repeat=3):
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]
        assert all(rat[k] for k, v in ints.items() if v)


def check_dominant_rep(rng):
    for d in _data():
        for lam in itertools.product(range(-2, 3), repeat=d.lattice_rank):
            bar, w = dominant_rep(d, lam)
            assert d.is_dominant(bar) and dominant_rep(d, bar)[0] == bar
            assert tuple(d.weyl.act(w, lam)) == bar
            for u in range(len(d.weyl)):
                assert dominant_rep(d, d.weyl.act(u, lam))[0] == bar


def check_constructed_data(rng):
    # construction validates the root-system axioms; exercise every builder
    for d in (gl(2), gl(4), sl(3), pgl(3), sp4(), gsp4(), product_datum(gl(2), 3)):
        assert d.two_rho == tuple(sum(d.roots[j][i] for j in d.positive) for i in range(d.lattice_rank))


# -- affine Weyl group -------------------------------------------------------------


def check_length_homomorphism(rng):
    for d in _data():
        refl = simple_reflections(d)
        oms = omega_window(d, 1)
        for _ in range(200):
            w = _random_element(rng, d)
            for s in refl:
                assert abs(multiply(s, w).length - w.length) == 1
                assert abs(multiply(w, s).length - w.length) == 1
            for om in oms:
                assert multiply(om, w).length == w.length == multiply(w, om).length


def check_group_law(rng):
    for d in _data():
        for _ in range(200):
            a, b, c = (_random_element(rng, d) for _ in range(3))
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
            assert multiply(a, a.inverse()) == identity(d)


def check_bruhat_oracle(rng):
    for d, L in ((gl(2), 6), (gl(3), 4), (sp4(), 6)):
        els = list(enumerate_up_to_length(d, L, omega_window(d, 1)))
        below = {w: bruhat_interval_below(w) for w in els}
        for v in els:
            for w in els:
                assert bruhat_leq(v, w) == (v in below[w]), (d.name, v, w)


def check_exact_sequence(rng):
    for d in _data():
        q = pi1_I(d)
        for w in enumerate_up_to_length(d, 3, omega_window(d, 1)):
            om = omega_component(w)
            assert om.length == 0
            word, om2 = reduced_word(w)
            assert om2 == om and kottwitz_I(w) == kottwitz_I(om)
            assert (om == identity(d)) == (kottwitz_I(w) == q.zero())


# -- Frobenius ----------------------------------------------------------------------


def check_sigma_automorphism(rng):
    for name, tw in twist_fixtures().items():
        d = tw.datum
        names = {s.name for s in simple_reflections(d)}
        assert set(tw.simple_perm) == names and set(tw.simple_perm.values()) == names
        for _ in range(50):
            a, b = _random_element(rng, d), _random_element(rng, d)
            assert tw.apply(multiply(a, b)) == multiply(tw.apply(a), tw.apply(b)), name
            assert tw.apply(a).length == a.length
            # kottwitz_I o sigma = sigma_0 o kottwitz_I
            q = pi1_I(d)
            assert kottwitz_I(tw.apply(a)) == q.image(tw.sigma0_apply(a.translation))


def check_sigma0(rng):
    for name, tw in twist_fixtures().items():
        d = tw.datum
        assert tw.order_N >= 1
        for lam in dominant_in_box(d, -2, 2):
            assert d.is_dominant(tw.sigma0_apply(lam)), name


def check_kappa_invariance(rng):
    for name, tw in twist_fixtures().items():
        if name == "res2-GL3":
            continue
        movers = list(simple_reflections(tw.datum)) + omega_window(tw.datum, 1)
        for w in _small(tw, 4):
            k, p = kottwitz_Gamma(tw, w), b_point(tw, w)
            for u in movers:
                y = sigma_conjugate(tw, u, w)
                assert kottwitz_Gamma(tw, y) == k and b_point(tw, y) == p, (name, w, u)


# -- sigma-conjugacy -----------------------------------------------------------------


def check_newton_equivariance(rng):
    for name, tw in twist_fixtures().items():
        for w in _small(tw, 3):
            nu, nubar = newton_point(tw, w)
            nu_s, _ = newton_point(tw, tw.apply(w))
            expected = linalg.mat_vec(tw.linear_part, nu)
            if tw.omega_part is not None:  # conjugation by tau_sigma moves nu by its finite part
                expected = linalg.mat_vec(tw.omega_part.finite_part, expected)
            assert tuple(nu_s) == tuple(expected), name
            assert tuple(tw.sigma0_apply(nubar)) == tuple(nubar)


def check_straightness(rng):
    for name, tw in twist_fixtures().items():
        L = 3 if name == "res2-GL3" else 4
        for w in _small(tw, L):
            assert is_sigma_straight(tw, w, check=False) == is_sigma_straight_by_products(tw, w), (name, w)


def _mus(tw, hi=2):
    return [mu for mu in dominant_in_box(tw.datum, 0, hi) if tw.datum.lattice_rank <= 3 or max(mu) <= 1]


def check_centrality(rng):
    for name, tw in twist_fixtures().items():
        d = tw.datum
        for mu in _mus(tw):
            for lam, _ in straight_translations_in_orbit(tw, mu):
                nu, _ = newton_point(tw, translation(d, lam))
                assert is_central(levi_of(d, nu, tw), lam), (name, mu, lam)


def check_b_of_g_mu(rng):
    for name, tw in twist_fixtures().items():
        d = tw.datum
        for mu in _mus(tw, 1):
            pts = b_of_g_mu(tw, mu)
            mud, nat = mu_diamond(tw, mu), mu_natural(tw, mu)
            assert all(p.kappa == nat and dominance_leq(d, p.newton, mud) for p in pts)
            assert sum(1 for p in pts if p.newton == mud) <= 1
            if d.lattice_rank <= 3:
                assert pts == b_of_g_mu_bruteforce(tw, mu), (name, mu)
            adm = admissible_set(tw, mu)
            straight = [w for w in adm.elements if is_sigma_straight(tw, w)]
            assert {b_point(tw, w) for w in straight} <= set(pts)
            for w in straight:
                if b_point(tw, w).newton == mud:
                    assert w.w == 0, (name, mu, w)


def check_quotients(rng):
    g2, s2 = gl(2), sl(2)
    cases = [
        (split_twist(g2), [[1, -1]], (1, 0)),
        (twist_fixtures()["inner-GL2"], [[1, -1]], (1, 0)),
        (split_twist(s2), [[2]], (1,)),
        (split_twist(g2), [[1, 0], [0, 1]], (1, 0)),
    ]
    for tw, m, mu in cases:
        d2, tw2 = quotient_datum(tw.datum, tw, m)
        mu2 = tuple(linalg.mat_vec(m, mu))
        assert (mu_ordinary(tw, mu) is None) == (mu_ordinary(tw2, mu2) is None)


# -- admissible sets ------------------------------------------------------------------


def check_admissible(rng):
    for d in _data():
        tw = split_twist(d)
        for mu in dominant_in_box(d, 0, 2):
            adm = admissible_set(tw, mu)
            assert adm.elements == admissible_set_bruteforce(d, mu), (d.name, mu)
            tau = adm.tau_min
            assert tau.length == 0 and kottwitz_I(tau) == kottwitz_I(translation(d, mu))
            assert all(bruhat_leq(tau, w) for w in adm.elements)
            k = kottwitz_I(translation(d, mu))
            assert all(kottwitz_I(w) == k for w in adm.elements)


def check_very_special_order(rng):
    for d in _data():
        tw = split_twist(d)
        J = finite_parahoric(d)
        for mu in dominant_in_box(d, 0, 3):
            poset = kr_poset_very_special(tw, mu)
            reps = admissible_set_J(tw, mu, J.names)
            image = {lam: very_special_map(d, lam, J) for lam in poset.nodes}
            assert set(image.values()) == set(reps) and len(image) == len(reps), (d.name, mu)
            for a, b in itertools.product(poset.nodes, repeat=2):
                assert integral_dominance_leq(d, a, b) == bruhat_leq(image[a], image[b]), (d.name, mu, a, b)


def check_chains(rng):
    for tw in (split_twist(gl(2)), split_twist(gl(3)), split_twist(sp4()), restriction_of_scalars(gl(2), None, 2)[1]):
        d = tw.datum
        for mu in dominant_in_box(d, 0, 2):
            if tw.sigma0_apply(mu) != mu:
                continue
            for lam in kr_poset_very_special(tw, mu).nodes:
                if tw.sigma0_apply(lam) != lam:
                    continue
                chain = curve_chain(tw, lam, mu)
                assert chain[0] == lam and chain[-1] == mu
                height = sum(d.coroot_coordinates(linalg.sub(mu, lam)))
                assert len(chain) - 1 <= height
                for a, b in zip(chain, chain[1:]):
                    assert a != b and integral_dominance_leq(d, a, b) and integral_dominance_leq(d, b, mu)


def check_restriction_sizes(rng):
    for d in (gl(2), gl(3)):
        for mu in dominant_in_box(d, 0, 1):
            d2, tw2 = restriction_of_scalars(d, None, 2)
            big = mu + (0,) * d.lattice_rank
            assert len(admissible_set(tw2, big)) == len(admissible_set(split_twist(d), mu))


# -- loop identities ---------------------------------------------------------------------


def check_su3_unipotents(rng):
    from .loops.cases import su3_unipotent
    from .loops.laurent import LaurentPoly, preserves_hermitian_form, ramified_model, unramified_model

    for model in (ramified_model(5), unramified_model(3)):
        F = model.field
        half = F.inv(F.from_int(2))
        eps = None if model.ramified else next(e for e in F.nonzero() if model.tau_coeff(e) == F.neg(e))
        base = [0] + model.base_scalars()
        for _ in range(200):
            c = LaurentPoly(model, {e: rng.randrange(F.q) for e in range(-2, 3)})
            if model.ramified:
                anti = LaurentPoly(model, {e: rng.choice(base) for e in (-3, -1, 1)})
            else:
                anti = LaurentPoly(model, {e: F.mul(eps, rng.choice(base)) for e in (-1, 0, 1)})
            d = (c.tau() * c).scale(F.neg(half)) + anti
            for i in (1, -1):
                m = su3_unipotent(i, c, d)
                assert m.det() == 1 and preserves_hermitian_form(m)
        zero = LaurentPoly.zero(model)
        d1 = LaurentPoly(model, {1: 1}) if model.ramified else LaurentPoly(model, {0: eps})
        d2 = d1.scale(F.from_int(2))
        assert su3_unipotent(1, zero, d1) * su3_unipotent(1, zero, d1) == su3_unipotent(1, zero, d2)


def check_loop_cases(rng):
    from .loops.cases import verify_cases

    runs = [(c, q, False) for c in (1, 2, 3) for q in (3, 5, 7, 9)] + [(1, 9, True), (2, 9, True)]
    for case, q, unr in runs:
        rep = verify_cases(case, q, unr)
        assert rep["all_pass"] and rep["checked"] == q - 1, (case, q, unr)


def check_lift_consistency(rng):
    from .loops.cases import KINDS, lift_image, translation_lift
    from .loops.laurent import ramified_model, split_model, unramified_model

    coroot = sl(2).coroots[sl(2).simple_indices[0]]
    for kind in KINDS:
        models = [split_model(5)] if kind == "sl2_standard" else [ramified_model(5)]
        if kind == "su3_standard":
            models.append(unramified_model(5))
        for model in models:
            m = translation_lift(kind, model)
            assert m.is_monomial_matrix()
            assert translation(sl(2), lift_image(m)) == translation(sl(2), coroot)


# -- CLI / performance ------------------------------------------------------------------------


def check_cli_determinism(rng):
    import contextlib
    import io

    from .cli import run

    for argv in (["adm", "--kind", "gl3", "--mu", "1,1,0"], ["bg", "--kind", "gl2", "--mu", "1,0"],
                 ["kr-poset", "--kind", "gl3", "--mu", "2,1,0", "--dot"]):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                assert run(argv) == 0
            outs.append(buf.getvalue())
        assert outs[0] == outs[1]


def check_streaming_gl4(rng):
    tracemalloc.start()
    try:
        d = gl(4)
        n = sum(1 for _ in enumerate_up_to_length(d, 6, omega_window(d, 1)))
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert n > 0 and peak < 2 * 1024**3


CHECKS = [
    check_length_formula,
    check_dominance_orders,
    check_dominant_rep,
    check_constructed_data,
    check_length_homomorphism,
    check_group_law,
    check_bruhat_oracle,
    check_exact_sequence,
    check_sigma_automorphism,
    check_sigma0,
    check_kappa_invariance,
    check_newton_equivariance,
    check_straightness,
    check_centrality,
    check_b_of_g_mu,
    check_quotients,
    check_admissible,
    check_very_special_order,
    check_chains,
    check_restriction_sizes,
    check_su3_unipotents,
    check_loop_cases,
    check_lift_consistency,
    check_cli_determinism,
    check_streaming_gl4,
]


def _run_one(args):
    index, seed = args
    fn = CHECKS[index]
    try:
        fn(random.Random(seed * 1000 + index))
        return {"name": fn.__name__[len("check_"):], "pass": True}
    except Exception as exc:  # report, don't crash the suite
        detail = "".join(traceback.format_exception_only(type(exc), exc)).strip()
        return {"name": fn.__name__[len("check_"):], "pass": False, "detail": detail}


def run_selftest(seed: int = DEFAULT_SEED, jobs: int = 1) -> dict:
    tasks = [(i, seed) for i in range(len(CHECKS))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks))
    else:
        results = [_run_one(t) for t in tasks]
    return {"seed": seed, "all_pass": all(r["pass"] for r in results), "checks": results}
