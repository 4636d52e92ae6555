from __future__ import annotations

import itertools

import pytest

from iwahori.admissible import (
    admissible_set,
    admissible_set_bruteforce,
    admissible_set_J,
    coroot_height,
    curve_chain,
    dominant_below,
    frob_orbit_step,
    kr_poset_very_special,
    stembridge_step,
    very_special_map,
)
from iwahori.data import gl, restriction_of_scalars, sp4, torus, unitary_twist
from iwahori.errors import NoStep, NonDominantInput, NonSigmaStableJ
from iwahori.fixtures import dominant_in_box
from iwahori.frobenius import split_twist
from iwahori.rootsystem import integral_dominance_leq
from iwahori.weyl import bruhat_leq, finite_parahoric, identity, omega_element, translation


@pytest.mark.parametrize(
    "d, mu, size",
    [(gl(2), (1, 0), 3), (gl(3), (1, 0, 0), 7), (gl(3), (1, 1, 0), 7), (gl(4), (1, 1, 0, 0), 33)],
    ids=["GL2", "GL3", "GL3-dual", "GL4"],
)
def test_admissible_counts(d, mu, size):
    adm = admissible_set(d, mu)
    assert len(adm) == size
    assert adm.tau_min == omega_element(d, mu)


@pytest.mark.parametrize("d", [gl(2), gl(3), sp4()], ids=lambda d: d.name)
def test_admissible_matches_bruteforce(d):
    for mu in dominant_in_box(d, 0, 2 if d.lattice_rank < 3 else 1):
        assert admissible_set(d, mu).elements == admissible_set_bruteforce(d, mu), mu


def test_admissible_is_bruhat_closed():
    adm = admissible_set(gl(3), (2, 1, 0))
    for w, v in itertools.product(adm.elements, repeat=2):
        if bruhat_leq(v, w):
            assert v in adm


def test_admissible_on_torus():
    adm = admissible_set(torus(2), (1, -1))
    assert adm.elements == frozenset({translation(torus(2), (1, -1))})


def test_admissible_requires_dominant():
    with pytest.raises(NonDominantInput):
        admissible_set(gl(2), (0, 1))


def test_parahoric_images_gl2():
    tw = split_twist(gl(2))
    assert len(admissible_set_J(tw, (1, 0), ["s1"])) == 1
    assert len(admissible_set_J(tw, (1, 0), ["s0"])) == 1
    assert len(admissible_set_J(tw, (1, 0), [])) == 3
    assert len(admissible_set_J(tw, (2, 0), ["s1"])) == 2


def test_non_sigma_stable_parahoric():
    with pytest.raises(NonSigmaStableJ):
        admissible_set_J(unitary_twist(gl(3)), (1, 0, 0), ["s1"])
    assert admissible_set_J(unitary_twist(gl(3)), (1, 0, 0), ["s1", "s2"])


def test_dominant_below():
    assert dominant_below(gl(3), (2, 1, 0)) == [(1, 1, 1), (2, 1, 0)]
    assert dominant_below(sp4(), (2, 0)) == [(0, 0), (1, 0), (1, 1), (2, 0)]


def test_kr_poset_gl3():
    poset = kr_poset_very_special(split_twist(gl(3)), (2, 1, 0))
    assert poset.edges == [((1, 1, 1), (2, 1, 0))]
    assert poset.is_top((2, 1, 0))
    dot = poset.to_dot()
    assert dot.startswith("digraph") and "(1,1,1)" in dot
    js = poset.to_json()
    assert js["mu"] == [2, 1, 0] and len(js["nodes"]) == 2


def test_kr_poset_matches_parahoric_image():
    for d in (gl(3), sp4()):
        tw = split_twist(d)
        J = finite_parahoric(d)
        for mu in dominant_in_box(d, 0, 2):
            poset = kr_poset_very_special(tw, mu)
            assert {very_special_map(d, lam, J) for lam in poset.nodes} == set(admissible_set_J(tw, mu, J))


def test_stembridge_step():
    d = gl(3)
    j = stembridge_step(d, (1, 1, 1), (2, 1, 0))
    assert d.coroots[j] == (1, 0, -1)
    assert j == 2
    with pytest.raises(NoStep):
        stembridge_step(d, (2, 1, 0), (2, 1, 0))
    with pytest.raises(NoStep):
        stembridge_step(d, (3, 0, 0), (2, 1, 0))


def test_frobenius_orbit_step_on_restriction():
    d, tw = restriction_of_scalars(gl(2), None, 2)
    assert frob_orbit_step(tw, (1, 1, 1, 1), (2, 0, 2, 0)) == (2, 0, 2, 0)
    with pytest.raises(NoStep):
        frob_orbit_step(tw, (1, 1, 1, 1), (2, 0, 1, 1))


@pytest.mark.parametrize("d", [gl(2), gl(3), sp4()], ids=lambda d: d.name)
def test_chains_climb_to_mu(d):
    tw = split_twist(d)
    for mu in dominant_in_box(d, 0, 3):
        for lam in dominant_below(d, mu):
            chain = curve_chain(tw, lam, mu)
            assert chain[0] == lam and chain[-1] == mu
            assert len(chain) - 1 <= coroot_height(d, tuple(m - l for m, l in zip(mu, lam)))
            for a, b in zip(chain, chain[1:]):
                assert integral_dominance_leq(d, a, b) and a != b


def test_identity_map_at_bottom():
    d = gl(2)
    assert very_special_map(d, (0, 0)) == identity(d)


def test_gl2_single_step():
    d = gl(2)
    j = stembridge_step(d, (1, 1), (2, 0))
    assert d.coroots[j] == (1, -1)
    assert frob_orbit_step(split_twist(d), (1, 1), (2, 0)) == (2, 0)
    assert curve_chain(split_twist(d), (1, 1), (2, 0)) == [(1, 1), (2, 0)]
