from __future__ import annotations

import json

import pytest

from iwahori import io
from iwahori.data import (
    embed_factor,
    gl,
    gsp4,
    inner_twist,
    pgl,
    quotient_datum,
    restriction_of_scalars,
    sl,
    sp4,
    torus,
    transport_element,
    unitary_twist,
)
from iwahori.errors import IncompatibleQuotient, InvalidDatum, UnsupportedKind
from iwahori.fixtures import omega_window
from iwahori.frobenius import apply_sigma, split_twist
from iwahori.sigma import b_of_g_mu, mu_ordinary
from iwahori.weyl import enumerate_up_to_length, multiply, simple_reflection_by_name, translation


def test_restriction_of_scalars_shape():
    d, tw = restriction_of_scalars(gl(2), None, 3)
    assert d.lattice_rank == 6 and len(d.roots) == 6
    assert tw.order == 3
    x = translation(d, (1, 0, 0, 0, 0, 0))
    assert apply_sigma(tw, x) == translation(d, (0, 0, 1, 0, 0, 0))


def test_restriction_of_degree_one_is_identity():
    d = gl(3)
    tw = unitary_twist(d)
    assert restriction_of_scalars(d, tw, 1) == (d, tw)
    with pytest.raises(ValueError):
        restriction_of_scalars(d, tw, 0)


def test_restriction_names_components():
    d, _ = restriction_of_scalars(gl(2), None, 2)
    names = {simple_reflection_by_name(d, n).name for n in ("s0_1", "s0_2", "s1", "s2")}
    assert len(names) == 4


def test_embed_factor_commutes_across_factors():
    d2, _ = restriction_of_scalars(gl(2), None, 2)
    s = simple_reflection_by_name(gl(2), "s1")
    a, b = embed_factor(d2, s, 0, 2), embed_factor(d2, s, 1, 2)
    assert multiply(a, b) == multiply(b, a)
    assert a != b and a.length == b.length == 1


def test_unitary_twist_of_restriction_has_order_four():
    _, tw = restriction_of_scalars(gl(2), unitary_twist(gl(2)), 2)
    assert tw.order == 4


def test_small_kinds():
    assert len(sl(3).weyl) == len(pgl(3).weyl) == 6
    assert gsp4().lattice_rank == 3
    with pytest.raises(UnsupportedKind):
        unitary_twist(torus(1))


def test_quotient_gl2_to_pgl2():
    d2, tw2 = quotient_datum(gl(2), None, [[1, -1]])
    assert d2.lattice_rank == 1 and d2.coroots[d2.simple_indices[0]] == (2,)
    assert mu_ordinary(tw2, (1,)) is not None
    assert mu_ordinary(split_twist(gl(2)), (1, 0)) is not None


def test_quotient_sl2_to_pgl2():
    d2, tw2 = quotient_datum(sl(2), None, [[2]])
    assert len(b_of_g_mu(tw2, (2,))) == len(b_of_g_mu(split_twist(sl(2)), (1,)))


def test_identity_quotient_keeps_everything():
    d = gl(3)
    tw = unitary_twist(d)
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    d2, tw2 = quotient_datum(d, tw, m)
    assert d2.key == d.key
    assert b_of_g_mu(tw2, (1, 0, 0)) == b_of_g_mu(tw, (1, 0, 0))


def test_quotient_transports_multiplication():
    d = gl(2)
    m = [[1, -1]]
    d2, _ = quotient_datum(d, None, m)
    els = list(enumerate_up_to_length(d, 2, omega_window(d, 1)))
    for a in els:
        for b in els:
            ab = transport_element(d2, multiply(a, b), m)
            assert ab == multiply(transport_element(d2, a, m), transport_element(d2, b, m))


def test_quotient_keeps_inner_twist():
    d2, tw2 = quotient_datum(gl(2), inner_twist(gl(2)), [[1, -1]])
    assert tw2.omega_part is not None and tw2.omega_part.length == 0


@pytest.mark.parametrize("m", [[[1, 1]], [[1, 0], [0, 1], [1, 1]], [[2, -2]], []])
def test_incompatible_quotients(m):
    with pytest.raises(IncompatibleQuotient):
        quotient_datum(gl(2), None, m)


def test_twist_that_does_not_descend():
    with pytest.raises(IncompatibleQuotient):
        quotient_datum(gl(3), unitary_twist(gl(3)), [[1, 0, 0]])


@pytest.mark.parametrize(
    "make",
    [lambda: (gl(3), unitary_twist(gl(3))), lambda: (gl(2), inner_twist(gl(2))), lambda: restriction_of_scalars(sp4(), None, 2)],
    ids=["unitary", "inner", "res"],
)
def test_json_roundtrip(make, tmp_path):
    d, tw = make()
    path = tmp_path / "datum.json"
    io.dump(path, d, tw)
    d2, tw2 = io.load(path)
    assert d2 == d
    assert tw2.linear_part == tw.linear_part and tw2.omega_part == tw.omega_part
    assert json.loads(io.dumps(d2, tw2)) == json.loads(io.dumps(d, tw))


def test_json_without_sigma_is_split():
    d, tw = gl(2), split_twist(gl(2))
    rec = io.datum_to_json(d, tw)
    rec.pop("sigma", None)
    d2, tw2 = io.datum_from_json(rec)
    assert d2 == d and tw2.is_quasi_split()


def test_malformed_json():
    with pytest.raises(InvalidDatum):
        io.datum_from_json({"roots": []})
    assert io.datum_from_json({"lattice_rank": 2})[0] == torus(2)
    rec = io.datum_to_json(gl(2), split_twist(gl(2)))
    rec["coroots"] = rec["coroots"][:1]
    with pytest.raises(InvalidDatum):
        io.datum_from_json(rec)
