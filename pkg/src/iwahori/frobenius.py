"""Frobenius twists on W, pi_1 quotients and the Kottwitz maps.

A twist is stored as (varsigma, tau_sigma) and acts on W by

    sigma(w) = tau_sigma * varsigma(w) * tau_sigma^{-1},
    varsigma(t_lam v) = t_{varsigma lam} (varsigma v varsigma^{-1}).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import IncompatibleTwist, NonDominantInput
from .rootsystem import AffineWeylDatum, dominant_rep, normalize
from .weyl import (
    ExtendedAffineElement,
    _simple_reflections,
    identity,
    multiply,
    translation,
)


class LatticeQuotient:
    """Z^r modulo the span of ``relations``, presented through Smith normal form.

    Classes are tuples ``(free coords..., torsion coords...)``; torsion
    coordinates are reduced into ``[0, d)``.  The free part uses the Hermite
    basis of the annihilator, so e.g. pi_1(GL_n) is the coordinate sum.
    """

    def __init__(self, rank: int, relations):
        self.rank = rank
        rel = [tuple(r) for r in relations if any(r)]
        if rel:
            a = linalg.transpose(rel)  # rank x k
            U, D, _ = linalg.smith_normal_form(a)
            diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
        else:
            U, diag = linalg.identity(rank), []
        r = sum(1 for d in diag if d)
        self.torsion_rows = [(U[i], diag[i]) for i in range(r) if diag[i] > 1]
        self.free_rows = linalg.hermite_rows(U[r:]) if r < rank else ()
        self.moduli = tuple([0] * len(self.free_rows) + [d for _, d in self.torsion_rows])

    def image(self, v) -> tuple[int, ...]:
        free = [linalg.dot(row, v) for row in self.free_rows]
        tors = [linalg.dot(row, v) % d for row, d in self.torsion_rows]
        return tuple(free + tors)

    def add(self, a, b):
        return tuple((x + y) % m if m else x + y for x, y, m in zip(a, b, self.moduli))

    def neg(self, a):
        return tuple((-x) % m if m else -x for x, m in zip(a, self.moduli))

    def zero(self):
        return (0,) * len(self.moduli)

    def describe(self) -> str:
        parts = ["Z"] * sum(1 for m in self.moduli if m == 0)
        parts += [f"Z/{m}" for m in self.moduli if m]
        return " + ".join(parts) or "0"


def pi1_I(datum: AffineWeylDatum) -> LatticeQuotient:
    """pi_1(G)_I = Lambda / Q^vee(Sigma)."""
    q = datum.__dict__.get("_pi1")
    if q is None:
        q = LatticeQuotient(datum.lattice_rank, datum.coroots)
        datum.__dict__["_pi1"] = q
    return q


def kottwitz_I(w: ExtendedAffineElement):
    """Image of w in pi_1(G)_I: the class of its translation part."""
    return pi1_I(w.datum).image(w.translation)


class FrobeniusTwist:
    """The Frobenius action on W, with its L-action sigma_0 = w_0 o varsigma."""

    def __init__(self, datum: AffineWeylDatum, linear_part=None, omega_part: ExtendedAffineElement | None = None):
        n = datum.lattice_rank
        self.datum = datum
        self.linear_part = tuple(tuple(int(x) for x in row) for row in (linear_part or linalg.identity(n)))
        self.omega_part = omega_part
        self._check()

    def _check(self):
        d = self.datum
        m = self.linear_part
        if len(m) != d.lattice_rank or any(len(r) != d.lattice_rank for r in m):
            raise IncompatibleTwist("linear part has the wrong shape")
        if abs(linalg.det(m)) != 1:
            raise IncompatibleTwist("linear part is not invertible over Z")
        self.linear_inverse = linalg.inverse(m)
        if any(isinstance(x, Fraction) for row in self.linear_inverse for x in row):
            raise IncompatibleTwist("linear part is not invertible over Z")
        # varsigma must permute Sigma compatibly with coroots
        self.root_map = []
        for a, c in zip(d.roots, d.coroots):
            b = linalg.vec_mat(a, self.linear_inverse)
            k = d.root_index.get(b)
            if k is None or d.coroots[k] != linalg.mat_vec(m, c):
                raise IncompatibleTwist("linear part does not permute the root system")
            self.root_map.append(k)
        if self.omega_part is not None:
            if self.omega_part.datum != d:
                raise IncompatibleTwist("omega part belongs to another datum")
            if self.omega_part.length != 0:
                raise IncompatibleTwist("omega part must have length zero")
            if self.omega_part == identity(d):
                self.omega_part = None
        W = d.weyl
        self._conj = [W.index[linalg.mat_mul(linalg.mat_mul(m, W.matrices[i]), self.linear_inverse)] for i in range(len(W))]
        if d.roots:
            refl = _simple_reflections(d)
            self.simple_perm = []
            for s in refl:
                t = self.apply(s)
                try:
                    self.simple_perm.append(next(r.name for r in refl if r == t))
                except StopIteration:
                    raise IncompatibleTwist("sigma does not preserve the base alcove") from None
            self.simple_perm = dict(zip((s.name for s in refl), self.simple_perm))
        else:
            self.simple_perm = {}

    def __repr__(self):
        return f"FrobeniusTwist({self.datum.name}, N={self.order_N}, omega={self.omega_part!r})"

    # -- actions ---------------------------------------------------------

    def varsigma(self, x: ExtendedAffineElement) -> ExtendedAffineElement:
        return ExtendedAffineElement(x.datum, linalg.mat_vec(self.linear_part, x.translation), self._conj[x.w])

    def apply(self, x: ExtendedAffineElement) -> ExtendedAffineElement:
        y = self.varsigma(x)
        om = self.omega_part
        if om is None:
            return y
        return multiply(multiply(om, y), om.inverse())

    def __call__(self, x):
        return self.apply(x)

    @cached_property
    def chamber_restorer(self) -> int:
        """w_0 in W_0 with w_0 varsigma(C+) = C+, by descent on a regular dominant vector."""
        d = self.datum
        reg = [0] * d.lattice_rank
        for j in d.positive:
            reg = [x + y for x, y in zip(reg, d.coroots[j])]
        _, w = dominant_rep(d, linalg.mat_vec(self.linear_part, reg))
        return w

    @cached_property
    def sigma0(self):
        d = self.datum
        m = linalg.mat_mul(d.weyl.matrices[self.chamber_restorer], self.linear_part)
        # sigma_0 must map positive roots to positive roots
        minv = linalg.inverse(m)
        for j in d.positive:
            b = linalg.vec_mat(d.roots[j], minv)
            if not d.is_positive[d.root_index[b]]:
                raise IncompatibleTwist("w_0 o varsigma does not preserve the dominant chamber")
        return m

    def sigma0_apply(self, v):
        return linalg.mat_vec(self.sigma0, v)

    @cached_property
    def order_N(self) -> int:
        n = len(self.sigma0)
        ident = linalg.identity(n)
        m, k = self.sigma0, 1
        while m != ident:
            m = linalg.mat_mul(self.sigma0, m)
            k += 1
        return k

    @cached_property
    def order(self) -> int:
        """Smallest n with sigma^n = id on W (checked on generators of Lambda ⋊ W_0)."""
        d = self.datum
        gens = [translation(d, e) for e in linalg.identity(d.lattice_rank)]
        gens += [ExtendedAffineElement(d, (0,) * d.lattice_rank, s) for s in d.weyl.simple]
        cur = list(gens)
        n = 1
        while True:
            cur = [self.apply(g) for g in cur]
            if cur == gens:
                return n
            n += 1

    @cached_property
    def pi1_Gamma(self) -> LatticeQuotient:
        """pi_1(G)_Gamma = Lambda / (Q^vee + (sigma_0 - 1) Lambda)."""
        d = self.datum
        rel = list(d.coroots)
        for i, e in enumerate(linalg.identity(d.lattice_rank)):
            col = linalg.sub(self.sigma0_apply(e), e)
            rel.append(col)
        return LatticeQuotient(d.lattice_rank, rel)

    def is_quasi_split(self) -> bool:
        return self.omega_part is None

    def to_json(self) -> dict:
        from .weyl import element_to_json

        return {
            "linear_part": [list(r) for r in self.linear_part],
            "omega_part": None if self.omega_part is None else element_to_json(self.omega_part),
        }


def split_twist(datum: AffineWeylDatum) -> FrobeniusTwist:
    return FrobeniusTwist(datum)


def apply_sigma(twist: FrobeniusTwist, w: ExtendedAffineElement) -> ExtendedAffineElement:
    if w.datum != twist.datum:
        raise IncompatibleTwist("element and twist live on different data")
    return twist.apply(w)


def kottwitz_Gamma(twist: FrobeniusTwist, w: ExtendedAffineElement):
    return twist.pi1_Gamma.image(w.translation)


def _require_dominant(datum, mu):
    if not datum.is_dominant(mu):
        raise NonDominantInput(f"{tuple(mu)} is not dominant")


def mu_diamond(twist: FrobeniusTwist, mu) -> tuple:
    """The sigma_0-average (1/N) sum_{i=1}^N sigma_0^i(mu)."""
    _require_dominant(twist.datum, mu)
    N = twist.order_N
    acc = [Fraction(0)] * len(mu)
    v = tuple(mu)
    for _ in range(N):
        v = twist.sigma0_apply(v)
        acc = [a + b for a, b in zip(acc, v)]
    return normalize(tuple(a / N for a in acc))


def mu_natural(twist: FrobeniusTwist, mu):
    """Image of mu under Lambda -> pi_1(G)_I -> pi_1(G)_Gamma."""
    return twist.pi1_Gamma.image(tuple(mu))


def sigma0_orbit_size(twist: FrobeniusTwist, v) -> int:
    """Smallest n >= 1 with sigma_0^n(v) = v."""
    v = tuple(v)
    w = twist.sigma0_apply(v)
    n = 1
    while w != v:
        w = twist.sigma0_apply(w)
        n += 1
    return n
