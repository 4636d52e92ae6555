"""Builders for the standard example data and Weil restriction."""

from __future__ import annotations

import re
from fractions import Fraction

from . import linalg
from .errors import IncompatibleQuotient, UnsupportedKind
from .frobenius import FrobeniusTwist
from .rootsystem import AffineWeylDatum
from .weyl import ExtendedAffineElement, omega_element


def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _type_a_roots(n):
    """Positive roots e_i - e_j (i < j) ordered by height, then the negatives."""
    pos = [(i, j) for h in range(1, n) for i in range(n - h) for j in [i + h]]
    return pos + [(j, i) for i, j in pos]


def gl(n: int) -> AffineWeylDatum:
    pairs = _type_a_roots(n)
    roots = [linalg.sub(_unit(n, i), _unit(n, j)) for i, j in pairs]
    return AffineWeylDatum(n, roots, roots, list(range(n - 1)), name=f"GL{n}")


def sl(n: int) -> AffineWeylDatum:
    """Lambda = coroot lattice, basis b_k = e_k - e_{k+1}."""
    m = n - 1
    roots, coroots = [], []
    for i, j in _type_a_roots(n):
        cov = tuple(
            int(i == k) - int(i == k + 1) - int(j == k) + int(j == k + 1) for k in range(m)
        )
        lo, hi = min(i, j), max(i, j)
        sign = 1 if i < j else -1
        cor = tuple(sign * int(lo <= k < hi) for k in range(m))
        roots.append(cov)
        coroots.append(cor)
    return AffineWeylDatum(m, roots, coroots, list(range(n - 1)), name=f"SL{n}")


def pgl(n: int) -> AffineWeylDatum:
    """Lambda = Z^n / Z(1,...,1), basis the images of e_1..e_{n-1}."""
    m = n - 1

    def img(i):
        return _unit(m, i) if i < m else tuple([-1] * m)

    roots, coroots = [], []
    for i, j in _type_a_roots(n):
        roots.append(tuple(int(k == i) - int(k == j) for k in range(m)))
        coroots.append(linalg.sub(img(i), img(j)))
    return AffineWeylDatum(m, roots, coroots, list(range(n - 1)), name=f"PGL{n}")


def sp4() -> AffineWeylDatum:
    pos_roots = [(1, -1), (0, 2), (1, 1), (2, 0)]
    pos_coroots = [(1, -1), (0, 1), (1, 1), (1, 0)]
    roots = pos_roots + [linalg.scale(-1, a) for a in pos_roots]
    coroots = pos_coroots + [linalg.scale(-1, a) for a in pos_coroots]
    return AffineWeylDatum(2, roots, coroots, [0, 1], name="Sp4")


def gsp4() -> AffineWeylDatum:
    """X_*(T) = {(a1, a2, c)} for diag(x^a1, x^a2, x^(c-a2), x^(c-a1))."""
    pos_roots = [(1, -1, 0), (0, 2, -1), (1, 1, -1), (2, 0, -1)]
    pos_coroots = [(1, -1, 0), (0, 1, 0), (1, 1, 0), (1, 0, 0)]
    roots = pos_roots + [linalg.scale(-1, a) for a in pos_roots]
    coroots = pos_coroots + [linalg.scale(-1, a) for a in pos_coroots]
    return AffineWeylDatum(3, roots, coroots, [0, 1], name="GSp4")


def torus(n: int) -> AffineWeylDatum:
    return AffineWeylDatum(n, [], [], [], name=f"T{n}")


_KIND = re.compile(r"^\s*([a-z]+)\s*\(?\s*(\d*)\s*\)?\s*$")


def standard_datum(kind: str) -> AffineWeylDatum:
    """``gl(n)``, ``sl(n)``, ``pgl(n)``, ``sp(4)``, ``gsp(4)`` or ``torus(n)``; ``gl3`` also accepted."""
    m = _KIND.match(kind.lower())
    if not m:
        raise UnsupportedKind(kind)
    name, n = m.group(1), int(m.group(2) or 0)
    if name in ("gl", "sl", "pgl"):
        if n < 2:
            raise UnsupportedKind(f"{kind}: need n >= 2")
        return {"gl": gl, "sl": sl, "pgl": pgl}[name](n)
    if name == "sp" and n == 4:
        return sp4()
    if name == "gsp" and n == 4:
        return gsp4()
    if name == "torus" and n >= 1:
        return torus(n)
    raise UnsupportedKind(kind)


def unitary_twist(datum: AffineWeylDatum) -> FrobeniusTwist:
    """varsigma(lam) = -reverse(lam) on a GL_n datum (quasi-split unitary form)."""
    n = datum.lattice_rank
    if n < 2:
        raise UnsupportedKind("unitary twist needs n >= 2")
    m = tuple(tuple(-int(j == n - 1 - i) for j in range(n)) for i in range(n))
    return FrobeniusTwist(datum, m)


def inner_twist(datum: AffineWeylDatum, lam=None) -> FrobeniusTwist:
    """varsigma = id, tau_sigma = the length-zero element in the component of t_lam (default e_1)."""
    if lam is None:
        lam = _unit(datum.lattice_rank, 0)
    return FrobeniusTwist(datum, None, omega_element(datum, lam))


def product_datum(datum: AffineWeylDatum, f: int) -> AffineWeylDatum:
    r = datum.lattice_rank
    roots, coroots, simple = [], [], []
    nroots = len(datum.roots)
    # keep per-factor positive roots first so fixed root enumeration stays by factor
    for k in range(f):
        for a, c in zip(datum.roots, datum.coroots):
            roots.append((0,) * (r * k) + a + (0,) * (r * (f - 1 - k)))
            coroots.append((0,) * (r * k) + c + (0,) * (r * (f - 1 - k)))
        simple.extend(k * nroots + i for i in datum.simple_indices)
    name = datum.name if f == 1 else f"Res{f}({datum.name})"
    return AffineWeylDatum(r * f, roots, coroots, simple, name=name)


def embed_factor(datum_f: AffineWeylDatum, x: ExtendedAffineElement, k: int, f: int) -> ExtendedAffineElement:
    """Put ``x`` in factor k of the f-fold product (identity elsewhere)."""
    r = x.datum.lattice_rank
    n = r * f
    lam = (0,) * (r * k) + x.translation + (0,) * (r * (f - 1 - k))
    m = [list(row) for row in linalg.identity(n)]
    fin = x.finite_part
    for i in range(r):
        for j in range(r):
            m[r * k + i][r * k + j] = fin[i][j]
    w = datum_f.weyl.index[tuple(map(tuple, m))]
    return ExtendedAffineElement(datum_f, lam, w)


def restriction_of_scalars(datum: AffineWeylDatum, twist: FrobeniusTwist | None, f: int, rotation_twist=None):
    """The f-fold product with sigma'(x_1..x_f) = (sigma(x_f), x_1, ..., x_{f-1}).

    ``rotation_twist`` is accepted for interface compatibility; the rotation
    is always the cyclic shift above.
    """
    if f < 1:
        raise ValueError("f must be positive")
    if twist is None:
        twist = FrobeniusTwist(datum)
    if f == 1:
        return datum, twist
    r = datum.lattice_rank
    n = r * f
    d2 = product_datum(datum, f)
    lin = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            lin[i][r * (f - 1) + j] = twist.linear_part[i][j]
    for k in range(1, f):
        for i in range(r):
            lin[r * k + i][r * (k - 1) + i] = 1
    om = None
    if twist.omega_part is not None:
        om = embed_factor(d2, twist.omega_part, 0, f)
    return d2, FrobeniusTwist(d2, lin, om)


def _integral(rows, what):
    out = []
    for row in rows:
        if any(Fraction(x).denominator != 1 for x in row):
            raise IncompatibleQuotient(f"{what} is not integral on the new lattice")
        out.append(tuple(int(x) for x in row))
    return out


def quotient_datum(datum: AffineWeylDatum, twist: FrobeniusTwist | None, m):
    """Transport (datum, twist) along an isogeny-like map M: Lambda -> Lambda'.

    ``m`` is an r' x r integer matrix of full row rank.  Roots alpha' are
    determined by alpha' M = alpha, coroots are M alpha^vee, and the twist
    is carried by M varsigma = varsigma' M.
    """
    m = [tuple(int(x) for x in row) for row in m]
    r = datum.lattice_rank
    if not m or any(len(row) != r for row in m) or linalg.rank(m) != len(m):
        raise IncompatibleQuotient("the map must be an r' x r matrix of full row rank")
    if twist is None:
        twist = FrobeniusTwist(datum)
    mt = linalg.transpose(m)
    pinv = linalg.mat_mul(mt, linalg.inverse(linalg.mat_mul(m, mt)))  # M pinv = 1
    roots = _integral([linalg.vec_mat(a, pinv) for a in datum.roots], "a root")
    for a, b in zip(datum.roots, roots):
        if tuple(linalg.vec_mat(b, m)) != a:
            raise IncompatibleQuotient("a root does not factor through the map")
    coroots = [linalg.mat_vec(m, c) for c in datum.coroots]
    d2 = AffineWeylDatum(len(m), roots, coroots, datum.simple_indices, name=f"{datum.name}/M")
    lin = _integral(linalg.mat_mul(linalg.mat_mul(m, twist.linear_part), pinv), "the twist")
    if linalg.mat_mul(lin, m) != linalg.mat_mul(m, twist.linear_part):
        raise IncompatibleQuotient("the twist does not descend")
    om = None
    if twist.omega_part is not None:
        om = _transport(d2, twist.omega_part, m)
    return d2, FrobeniusTwist(d2, lin, om)


def _transport(d2: AffineWeylDatum, x: ExtendedAffineElement, m) -> ExtendedAffineElement:
    W2 = d2.weyl
    mat = linalg.identity(d2.lattice_rank)
    for k in x.datum.weyl.words[x.w]:
        mat = linalg.mat_mul(mat, W2.generators[k])
    return ExtendedAffineElement(d2, linalg.mat_vec(m, x.translation), W2.index[mat])


def transport_element(d2: AffineWeylDatum, x: ExtendedAffineElement, m) -> ExtendedAffineElement:
    """Image of x = t_lam v under the map used by quotient_datum."""
    return _transport(d2, x, [tuple(row) for row in m])
