"""Newton points, sigma-straight elements and the set B(G, {mu}).

B(G, {mu}) is represented through the pairs (newton, kappa) attached to
sigma-straight elements; two classes with the same pair coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg
from .errors import NonDominantInput
from .frobenius import FrobeniusTwist, kottwitz_Gamma, mu_diamond, mu_natural
from .rootsystem import (
    AffineWeylDatum,
    dominance_leq,
    dominant_rep,
    normalize,
    weyl_orbit,
)
from .weyl import (
    ExtendedAffineElement,
    _simple_reflections,
    enumerate_up_to_length,
    identity,
    multiply,
    omega_element,
    translation,
)


def fraction_str(x) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class BPoint:
    newton: tuple
    kappa: tuple

    def __post_init__(self):
        object.__setattr__(self, "newton", normalize(tuple(Fraction(x) for x in self.newton)))
        object.__setattr__(self, "kappa", tuple(self.kappa))

    def sort_key(self):
        return (sum(Fraction(x) for x in self.newton), tuple(Fraction(x) for x in self.newton), self.kappa)

    def to_json(self) -> dict:
        return {"newton": [fraction_str(x) for x in self.newton], "kappa": list(self.kappa)}


def twisted_product(twist: FrobeniusTwist, w: ExtendedAffineElement, n: int) -> ExtendedAffineElement:
    """w sigma(w) ... sigma^{n-1}(w)."""
    out = identity(w.datum)
    cur = w
    for _ in range(n):
        out = multiply(out, cur)
        cur = twist.apply(cur)
    return out


def newton_data(twist: FrobeniusTwist, w: ExtendedAffineElement):
    """Return ``(n, lam)`` for the least n with sigma^n = id and the n-fold product = t_lam."""
    m = twist.order
    block = twisted_product(twist, w, m)
    cap = 2 * m * len(w.datum.weyl)
    p = block
    k = 1
    while p.w != 0:
        p = multiply(p, block)
        k += 1
        if m * k > cap:
            raise RuntimeError("Newton search exceeded its bound")
    n = m * k
    # independent of the admissible n: doubling must double the translation
    assert multiply(p, p).translation == tuple(2 * x for x in p.translation)
    return n, p.translation


def newton_point(twist: FrobeniusTwist, w: ExtendedAffineElement):
    """Return ``(nu, nubar)``: the non-dominant Newton vector and its dominant representative."""
    n, lam = newton_data(twist, w)
    nu = tuple(Fraction(x, n) for x in lam)
    nubar, _ = dominant_rep(w.datum, nu)
    return normalize(nu), normalize(nubar)


def newton_bar(twist: FrobeniusTwist, w: ExtendedAffineElement):
    return newton_point(twist, w)[1]


def pair_2rho(datum: AffineWeylDatum, v) -> Fraction:
    return linalg.dot(v, datum.two_rho)


def is_sigma_straight(twist: FrobeniusTwist, w: ExtendedAffineElement, check: bool = True) -> bool:
    """l(w) = <nubar_w, 2 rho>.

    With ``check`` the product-length form l(w sigma(w) ... ) = n l(w) is
    asserted for n up to 2 * order(sigma) whenever the test is positive.
    """
    nubar = newton_bar(twist, w)
    res = w.length == pair_2rho(w.datum, nubar)
    if check and res:
        for n in range(1, 2 * twist.order + 1):
            assert twisted_product(twist, w, n).length == n * w.length
    return res


def is_sigma_straight_by_products(twist: FrobeniusTwist, w: ExtendedAffineElement, n_max: int | None = None) -> bool:
    """The defining form: l(w sigma(w) ... sigma^{n-1}(w)) = n l(w) for n <= n_max."""
    if n_max is None:
        n_max = 2 * twist.order * len(w.datum.weyl)
    lw = w.length
    out = identity(w.datum)
    cur = w
    for n in range(1, n_max + 1):
        out = multiply(out, cur)
        cur = twist.apply(cur)
        if out.length != n * lw:
            return False
    return True


def sigma_conjugate(twist: FrobeniusTwist, u: ExtendedAffineElement, w: ExtendedAffineElement) -> ExtendedAffineElement:
    """u^{-1} w sigma(u)."""
    return multiply(multiply(u.inverse(), w), twist.apply(u))


def b_point(twist: FrobeniusTwist, w: ExtendedAffineElement) -> BPoint:
    return BPoint(newton_bar(twist, w), kottwitz_Gamma(twist, w))


# -- Levi subsystems ---------------------------------------------------------


@dataclass(frozen=True)
class LeviSubsystem:
    datum: AffineWeylDatum
    vector: tuple
    roots: tuple  # indices into datum.roots
    defined_over_F: bool | None = None

    def __len__(self):
        return len(self.roots)


def levi_of(datum: AffineWeylDatum, v, twist: FrobeniusTwist | None = None) -> LeviSubsystem:
    """Sigma_M = {alpha : <v, alpha> = 0}; flagged defined over F when varsigma(v) = v."""
    v = tuple(v)
    roots = tuple(j for j, a in enumerate(datum.roots) if linalg.dot(v, a) == 0)
    flag = None
    if twist is not None:
        flag = tuple(linalg.mat_vec(twist.linear_part, v)) == v
    return LeviSubsystem(datum, normalize(v), roots, flag)


def is_central(sub: LeviSubsystem, lam) -> bool:
    return all(linalg.dot(lam, sub.datum.roots[j]) == 0 for j in sub.roots)


# -- B(G, {mu}) ----------------------------------------------------------------


def straight_translations_in_orbit(twist: FrobeniusTwist, mu) -> list[tuple[tuple, BPoint]]:
    """All mu' in W_0 mu with t_{mu'} sigma-straight, each with its (newton, kappa)."""
    d = twist.datum
    if not d.is_dominant(mu):
        raise NonDominantInput(f"{tuple(mu)} is not dominant")
    out = []
    for lam in weyl_orbit(d, mu):
        t = translation(d, lam)
        if is_sigma_straight(twist, t):
            out.append((lam, b_point(twist, t)))
    return out


def sorted_points(points: Iterable[BPoint]) -> list[BPoint]:
    return sorted(set(points), key=BPoint.sort_key)


def b_of_g_mu(twist: FrobeniusTwist, mu) -> list[BPoint]:
    """(newton, kappa) of the sigma-straight elements of Adm({mu}), sorted (sum, then lex)."""
    from .admissible import admissible_set

    adm = admissible_set(twist, mu)
    return sorted_points(b_point(twist, w) for w in adm.elements if is_sigma_straight(twist, w))


def mu_ordinary(twist: FrobeniusTwist, mu) -> BPoint | None:
    target = mu_diamond(twist, mu)
    hits = [p for p in b_of_g_mu(twist, mu) if p.newton == target]
    assert len(hits) <= 1, "mu-ordinary class must be unique"
    return hits[0] if hits else None


# -- brute-force sigma-conjugacy classes (oracle side) -------------------------


def _omega_generators(twist: FrobeniusTwist):
    """Length-zero u (and inverses) with kappa(u) = kappa(sigma u), so that
    u^{-1} x sigma(u) stays in the Omega-component of x."""
    d = twist.datum
    r = d.lattice_rank
    simple = [d.coroots[i] for i in d.simple_indices]
    # (sigma_0 - 1) lam = sum c_i alpha_i^vee, solved in (lam, c)
    rows = []
    for i in range(r):
        row = [twist.sigma0[i][j] - int(i == j) for j in range(r)]
        row += [-col[i] for col in simple]
        rows.append(row)
    gens = []
    for sol in linalg.integer_kernel(rows, r + len(simple)):
        om = omega_element(d, sol[:r])
        if om != identity(d):
            gens.extend([om, om.inverse()])
    return list(dict.fromkeys(gens))


def sigma_conjugacy_class(twist: FrobeniusTwist, w: ExtendedAffineElement, cap: int) -> frozenset:
    """Closure of w under x -> s x sigma(s) (s in S) and x -> om^{-1} x sigma(om), within l <= cap."""
    d = w.datum
    movers = list(_simple_reflections(d)) if d.roots else []
    movers += _omega_generators(twist)
    seen = {w}
    stack = [w]
    while stack:
        x = stack.pop()
        for s in movers:
            y = sigma_conjugate(twist, s, x)
            if y.length <= cap and y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def canonical_rep(cls: Iterable[ExtendedAffineElement]) -> ExtendedAffineElement:
    return min(cls, key=lambda x: (x.length, x.translation, x.w))


def b_of_g_mu_bruteforce(twist: FrobeniusTwist, mu) -> list[BPoint]:
    """Oracle for B(G, {mu}) that never looks at Adm({mu}).

    Enumerates the Omega-component of t_mu up to length l(t_mu), splits it into
    sigma-conjugacy classes, keeps classes whose minimal-length members are
    sigma-straight, and filters by kappa = mu^natural and nubar <= mu^diamond.
    """
    d = twist.datum
    tmu = translation(d, mu)
    cap = tmu.length
    om = omega_element(d, mu)
    target_k = mu_natural(twist, mu)
    mud = mu_diamond(twist, mu)
    elements = list(enumerate_up_to_length(d, cap, [om]))
    remaining = set(elements)
    points = set()
    for x in elements:
        if x not in remaining:
            continue
        cls = sigma_conjugacy_class(twist, x, cap)
        remaining -= cls
        lmin = min(y.length for y in cls)
        straight = [y for y in cls if y.length == lmin and is_sigma_straight_by_products(twist, y)]
        if not straight:
            continue
        p = b_point(twist, straight[0])
        if p.kappa == target_k and dominance_leq(d, p.newton, mud):
            points.add(p)
    return sorted_points(points)
