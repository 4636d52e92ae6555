"""mu-admissible sets, their parahoric images and the very special strata poset."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .errors import NoStep, NonDominantInput, NonDominantResult, NonSigmaStableJ
from .frobenius import FrobeniusTwist, sigma0_orbit_size
from .rootsystem import AffineWeylDatum, integral_dominance_leq, weyl_orbit
from .weyl import (
    ExtendedAffineElement,
    ParahoricType,
    bruhat_leq,
    double_coset_rep,
    enumerate_up_to_length,
    finite_parahoric,
    omega_component,
    reduced_word,
    sort_key,
    translation,
)


@dataclass(frozen=True)
class AdmissibleSet:
    mu: tuple
    elements: frozenset
    tau_min: ExtendedAffineElement

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def sorted(self):
        return sorted(self.elements, key=sort_key)


def _check_dominant(datum, mu):
    if not datum.is_dominant(mu):
        raise NonDominantInput(f"{tuple(mu)} is not dominant")


def extreme_translations(datum: AffineWeylDatum, mu) -> list[ExtendedAffineElement]:
    return [translation(datum, lam) for lam in weyl_orbit(datum, mu)]


def admissible_set(twist_or_datum, mu) -> AdmissibleSet:
    """{w : w <= t_{x(mu)} for some x in W_0}, as the union of subword closures."""
    datum = getattr(twist_or_datum, "datum", twist_or_datum)
    mu = tuple(mu)
    _check_dominant(datum, mu)
    out = set()
    if not datum.roots:
        out.add(translation(datum, mu))
    else:
        memo: dict = {}
        for t in extreme_translations(datum, mu):
            word, om = reduced_word(t)
            out |= _suffix_closure(tuple(word), om, memo)
    taus = [w for w in out if w.length == 0]
    assert len(taus) == 1, "Adm({mu}) must contain exactly one length-zero element"
    return AdmissibleSet(mu, frozenset(out), taus[0])


def _suffix_closure(word, om, memo):
    # subword products of word[i:] * om, shared between extreme translations
    key = (tuple(s.name for s in word), om)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not word:
        res = frozenset([om])
    else:
        rest = _suffix_closure(word[1:], om, memo)
        s = word[0]
        res = rest | frozenset(s * y for y in rest)
    memo[key] = res
    return res


def admissible_set_bruteforce(datum: AffineWeylDatum, mu) -> frozenset:
    """Oracle: scan the Omega-component of t_mu up to l(t_mu) with the recursive Bruhat order."""
    mu = tuple(mu)
    tops = extreme_translations(datum, mu)
    L = tops[0].length
    om = omega_component(tops[0])
    return frozenset(
        w for w in enumerate_up_to_length(datum, L, [om]) if any(bruhat_leq(w, t) for t in tops)
    )


def _check_sigma_stable(twist: FrobeniusTwist, J: ParahoricType):
    names = set(J.names)
    if {twist.simple_perm[n] for n in names} != names:
        raise NonSigmaStableJ(f"J = {sorted(names)} is not sigma-stable")


def admissible_set_J(twist: FrobeniusTwist, mu, J) -> frozenset:
    """Image of Adm({mu}) in W_J \\ W / W_J, as minimal double coset representatives."""
    if not isinstance(J, ParahoricType):
        J = ParahoricType(twist.datum, J)
    _check_sigma_stable(twist, J)
    adm = admissible_set(twist, mu)
    if not J.names:
        return adm.elements
    return frozenset(double_coset_rep(w, J) for w in adm.elements)


# -- the very special case ----------------------------------------------------


@dataclass
class StrataPoset:
    mu: tuple
    nodes: list  # dominant lambda with lambda ≼ mu, sorted
    edges: list  # cover relations (lower, upper)
    orbit_size: dict = field(default_factory=dict)

    @property
    def top(self):
        return self.mu

    def is_top(self, lam) -> bool:
        return tuple(lam) == self.mu

    def to_dot(self) -> str:
        def label(v):
            return "(" + ",".join(str(x) for x in v) + ")"

        lines = ["digraph kr_poset {", "  rankdir=BT;"]
        for v in self.nodes:
            extra = ", peripheries=2" if self.is_top(v) else ""
            lines.append(f'  "{label(v)}" [label="{label(v)} n={self.orbit_size.get(v, 1)}"{extra}];')
        for a, b in self.edges:
            lines.append(f'  "{label(a)}" -> "{label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "nodes": [
                {"lambda": list(v), "field_degree": self.orbit_size.get(v, 1), "top": self.is_top(v)}
                for v in self.nodes
            ],
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }


def dominant_below(datum: AffineWeylDatum, mu) -> list[tuple]:
    """All dominant lambda with lambda ≼ mu.

    Scans mu - sum c_i alpha_i^vee over the box 0 <= c_i <= coeff_i(mu - w_0 mu),
    which contains every solution because w_0 mu <= w_0 lambda <= lambda.
    """
    mu = tuple(mu)
    _check_dominant(datum, mu)
    if not datum.roots:
        return [mu]
    orbit = weyl_orbit(datum, mu)
    lowest = min(orbit, key=lambda v: linalg.dot(v, datum.two_rho))
    bound = datum.coroot_coordinates(linalg.sub(mu, lowest))
    simple = [datum.coroots[i] for i in datum.simple_indices]
    out = []
    for cs in itertools.product(*(range(int(b) + 1) for b in bound)):
        lam = list(mu)
        for c, col in zip(cs, simple):
            if c:
                lam = [x - c * y for x, y in zip(lam, col)]
        lam = tuple(lam)
        if datum.is_dominant(lam):
            out.append(lam)
    return sorted(out, key=lambda v: (linalg.dot(v, datum.two_rho), v))


def kr_poset_very_special(twist: FrobeniusTwist, mu) -> StrataPoset:
    datum = twist.datum
    mu = tuple(mu)
    nodes = dominant_below(datum, mu)
    leq = {(a, b): integral_dominance_leq(datum, a, b) for a in nodes for b in nodes}
    edges = []
    for a in nodes:
        for b in nodes:
            if a != b and leq[a, b]:
                if not any(c not in (a, b) and leq[a, c] and leq[c, b] for c in nodes):
                    edges.append((a, b))
    sizes = {v: sigma0_orbit_size(twist, v) for v in nodes}
    return StrataPoset(mu, nodes, edges, sizes)


def stembridge_step(datum: AffineWeylDatum, lam, mu) -> int:
    """First positive root alpha (datum order) with lam + alpha^vee dominant and ≼ mu."""
    lam, mu = tuple(lam), tuple(mu)
    if lam == mu or not integral_dominance_leq(datum, lam, mu):
        raise NoStep(f"need {lam} ≺ {mu}")
    for j in datum.positive:
        nxt = linalg.add(lam, datum.coroots[j])
        if datum.is_dominant(nxt) and integral_dominance_leq(datum, nxt, mu):
            return j
    raise NoStep(f"no Stembridge step from {lam} towards {mu}")


def frob_orbit_step(twist_q: FrobeniusTwist, lam, mu) -> tuple:
    """lam' = lam + sum over the sigma_q-orbit of the Stembridge coroot."""
    datum = twist_q.datum
    lam, mu = tuple(lam), tuple(mu)
    for v in (lam, mu):
        if twist_q.sigma0_apply(v) != v:
            raise NoStep(f"{v} is not sigma_q-fixed")
    j = stembridge_step(datum, lam, mu)
    orbit = [datum.coroots[j]]
    c = twist_q.sigma0_apply(orbit[0])
    while c != orbit[0]:
        orbit.append(c)
        c = twist_q.sigma0_apply(c)
    new = lam
    for c in orbit:
        new = linalg.add(new, c)
    if not datum.is_dominant(new):
        raise NonDominantResult(f"{new} is not dominant")
    assert new != lam and integral_dominance_leq(datum, lam, new)
    assert integral_dominance_leq(datum, new, mu), "orbit sum overshoots mu"
    assert twist_q.sigma0_apply(new) == new
    return new


def curve_chain(twist_q: FrobeniusTwist, lam, mu) -> list[tuple]:
    """lam = lam_0 ≺ lam_1 ≺ ... ≺ lam_r = mu by repeated orbit steps."""
    lam, mu = tuple(lam), tuple(mu)
    chain = [lam]
    while chain[-1] != mu:
        chain.append(frob_orbit_step(twist_q, chain[-1], mu))
    return chain


def coroot_height(datum: AffineWeylDatum, v) -> int:
    """Sum of the simple-coroot coefficients of v."""
    return int(sum(datum.coroot_coordinates(v)))


def very_special_map(datum: AffineWeylDatum, lam, J: ParahoricType | None = None) -> ExtendedAffineElement:
    """lam -> minimal representative of W_J t_lam W_J for J the finite simple reflections."""
    if J is None:
        J = finite_parahoric(datum)
    return double_coset_rep(translation(datum, lam), J)

