"""Reduced root systems acting on a free coinvariant lattice.

Roots are stored as integer covectors and coroots as integer vectors on
``Lambda = Z^rank``, so the pairing <lambda, alpha> is a plain dot product.
Rational vectors are tuples of ``Fraction``.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import InvalidDatum, NonDominantInput

Vector = tuple


def as_rational(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def normalize(v) -> tuple:
    """Collapse integral Fractions back to ints (for printing and hashing)."""
    return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in v)


class FiniteWeylGroup:
    """W_0 as an explicit table of integer matrices acting on the lattice.

    Elements are referred to by their index in ``matrices``; index 0 is the
    identity and indices are sorted by Coxeter length (BFS order).
    """

    def __init__(self, datum: "AffineWeylDatum"):
        self.datum = datum
        n = datum.lattice_rank
        gens = [datum.reflection_matrix(j) for j in datum.simple_indices]
        self.generators = gens
        ident = linalg.identity(n)
        self.matrices = [ident]
        self.lengths = [0]
        self.words: list[tuple[int, ...]] = [()]
        self.index = {ident: 0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for k, g in enumerate(gens):
                m = linalg.mat_mul(g, self.matrices[i])
                if m not in self.index:
                    self.index[m] = len(self.matrices)
                    self.matrices.append(m)
                    self.lengths.append(self.lengths[i] + 1)
                    self.words.append((k,) + self.words[i])
                    queue.append(self.index[m])
        self._mul: dict[tuple[int, int], int] = {}
        self.inverse = [self.index[linalg.inverse(m)] for m in self.matrices]
        # root_perm[w][j] = index of the root w(alpha_j) = alpha_j o w^{-1}
        roots = datum.roots
        self.root_perm = []
        for i, m in enumerate(self.matrices):
            minv = self.matrices[self.inverse[i]]
            self.root_perm.append(tuple(datum.root_index[linalg.vec_mat(a, minv)] for a in roots))
        self.simple = [self.index[g] for g in gens]

    def __len__(self):
        return len(self.matrices)

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            r = self.index[linalg.mat_mul(self.matrices[a], self.matrices[b])]
            self._mul[key] = r
        return r

    def act(self, w: int, v):
        return linalg.mat_vec(self.matrices[w], v)

    def length(self, w: int) -> int:
        return self.lengths[w]

    def word(self, w: int) -> tuple[int, ...]:
        """Reduced word as positions into ``datum.simple_indices``."""
        return self.words[w]


class AffineWeylDatum:
    """The tuple (Lambda, Sigma, W_0) underlying an Iwahori-Weyl group."""

    def __init__(
        self,
        lattice_rank: int,
        roots: Sequence[Sequence[int]],
        coroots: Sequence[Sequence[int]],
        simple_indices: Sequence[int],
        name: str = "",
    ):
        if lattice_rank < 1:
            raise InvalidDatum("lattice_rank must be positive")
        self.lattice_rank = int(lattice_rank)
        self.roots = tuple(tuple(int(x) for x in a) for a in roots)
        self.coroots = tuple(tuple(int(x) for x in a) for a in coroots)
        self.simple_indices = tuple(int(i) for i in simple_indices)
        self.name = name
        self._validate()

    # -- identity ---------------------------------------------------------

    @cached_property
    def key(self):
        return (self.lattice_rank, self.roots, self.coroots, self.simple_indices)

    def __eq__(self, other):
        return isinstance(other, AffineWeylDatum) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"AffineWeylDatum({self.name or 'unnamed'}, rank={self.lattice_rank}, |Sigma|={len(self.roots)})"

    # -- validation -------------------------------------------------------

    def _validate(self):
        r = self.lattice_rank
        if len(self.roots) != len(self.coroots):
            raise InvalidDatum("roots and coroots must be index-aligned")
        for a, c in zip(self.roots, self.coroots):
            if len(a) != r or len(c) != r:
                raise InvalidDatum("root/coroot of wrong length")
            if linalg.dot(c, a) != 2:
                raise InvalidDatum(f"<coroot, root> != 2 for {a}")
        if len(set(self.roots)) != len(self.roots):
            raise InvalidDatum("duplicate roots")
        index = self.root_index
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                # reduced: the only roots proportional to alpha are +-alpha
                if i != j and linalg.rank([a, b]) == 1 and any(x + y for x, y in zip(a, b)):
                    raise InvalidDatum(f"not reduced: {a} and {b} proportional")
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                sb = self._reflect_covector(i, b)
                k = index.get(sb)
                if k is None:
                    raise InvalidDatum(f"reflection in {a} does not permute the roots")
                sc = self.reflect(i, self.coroots[j])
                if sc != self.coroots[k]:
                    raise InvalidDatum("reflections do not respect the coroot pairing")
        if self.roots:
            simple = [self.roots[i] for i in self.simple_indices]
            if linalg.rank(simple) != len(simple):
                raise InvalidDatum("simple roots are linearly dependent")
            for j in range(len(self.roots)):
                c = self.simple_coefficients[j]
                if c is None or any(isinstance(x, Fraction) for x in c):
                    raise InvalidDatum("root is not an integral combination of simple roots")
                if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                    raise InvalidDatum("root has mixed-sign simple coefficients")
        elif self.simple_indices:
            raise InvalidDatum("simple roots given for an empty root system")

    # -- basic structure --------------------------------------------------

    @cached_property
    def root_index(self) -> dict:
        return {a: i for i, a in enumerate(self.roots)}

    @cached_property
    def simple_coefficients(self):
        simple = [self.roots[i] for i in self.simple_indices]
        p = linalg.left_inverse(simple, self.lattice_rank)
        return [linalg.coordinates(p, simple, a) for a in self.roots]

    @cached_property
    def positive(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.simple_coefficients) if sum(c) > 0)

    @cached_property
    def is_positive(self) -> tuple[bool, ...]:
        pos = set(self.positive)
        return tuple(j in pos for j in range(len(self.roots)))

    @cached_property
    def _coroot_basis(self):
        simple = [self.coroots[i] for i in self.simple_indices]
        return simple, linalg.left_inverse(simple, self.lattice_rank)

    def coroot_coordinates(self, v):
        """Coefficients of ``v`` in the simple coroots, or None if outside their span."""
        cols, p = self._coroot_basis
        return linalg.coordinates(p, cols, v)

    def pair(self, v, j: int):
        return linalg.dot(v, self.roots[j])

    def reflect(self, j: int, v):
        """s_alpha(v) = v - <v, alpha> alpha^vee."""
        a, c = self.roots[j], self.coroots[j]
        k = linalg.dot(v, a)
        if not k:
            return tuple(v)
        return tuple(x - k * y for x, y in zip(v, c))

    def _reflect_covector(self, j: int, b):
        a, c = self.roots[j], self.coroots[j]
        k = linalg.dot(c, b)
        return tuple(x - k * y for x, y in zip(b, a))

    def reflection_matrix(self, j: int):
        n = self.lattice_rank
        cols = [self.reflect(j, e) for e in linalg.identity(n)]
        return linalg.transpose(cols)

    @cached_property
    def weyl(self) -> FiniteWeylGroup:
        return FiniteWeylGroup(self)

    @cached_property
    def components(self) -> list[list[int]]:
        """Irreducible components, as lists of positions into ``simple_indices``."""
        s = self.simple_indices
        seen, out = set(), []
        for start in range(len(s)):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                a = stack.pop()
                comp.append(a)
                for b in range(len(s)):
                    if b not in seen and linalg.dot(self.coroots[s[a]], self.roots[s[b]]) != 0:
                        seen.add(b)
                        stack.append(b)
            out.append(sorted(comp))
        return out

    def highest_root(self, component: list[int]) -> int:
        comp = set(component)
        best = None
        for j in self.positive:
            c = self.simple_coefficients[j]
            if all(c[k] == 0 for k in range(len(c)) if k not in comp):
                h = sum(c)
                if best is None or h > best[0]:
                    best = (h, j)
        return best[1]

    @cached_property
    def two_rho(self) -> tuple[int, ...]:
        return two_rho(self)

    def is_dominant(self, v) -> bool:
        return all(linalg.dot(v, self.roots[i]) >= 0 for i in self.simple_indices)


def two_rho(datum: AffineWeylDatum) -> tuple[int, ...]:
    """Sum of the positive roots, as an integer covector."""
    out = [0] * datum.lattice_rank
    for j in datum.positive:
        for i, x in enumerate(datum.roots[j]):
            out[i] += x
    return tuple(out)


def dominant_rep(datum: AffineWeylDatum, v):
    """Return ``(vbar, w)`` with ``vbar = w . v`` dominant and ``w`` of minimal length.

    ``w`` is an index into ``datum.weyl``.  Works for integer and rational
    vectors alike.
    """
    W = datum.weyl
    v = tuple(v)
    w = 0
    while True:
        for k, j in enumerate(datum.simple_indices):
            if linalg.dot(v, datum.roots[j]) < 0:
                v = datum.reflect(j, v)
                w = W.mul(W.simple[k], w)
                break
        else:
            return v, w


def length_translation(datum: AffineWeylDatum, v) -> int:
    """l(t_v) = <vbar, 2 rho>."""
    vbar, _ = dominant_rep(datum, v)
    return linalg.dot(vbar, datum.two_rho)


def _check_dominant(datum, *vs):
    for v in vs:
        if not datum.is_dominant(v):
            raise NonDominantInput(f"{normalize(v)} is not dominant")


def dominance_leq(datum: AffineWeylDatum, lam, lam2) -> bool:
    """lam <= lam2: the difference is a non-negative rational combination of positive coroots."""
    _check_dominant(datum, lam, lam2)
    c = datum.coroot_coordinates(tuple(Fraction(b) - Fraction(a) for a, b in zip(lam, lam2)))
    return c is not None and all(x >= 0 for x in c)


def integral_dominance_leq(datum: AffineWeylDatum, lam, lam2) -> bool:
    """lam ≼ lam2: the difference is a non-negative integral combination of positive coroots."""
    _check_dominant(datum, lam, lam2)
    c = datum.coroot_coordinates(tuple(b - a for a, b in zip(lam, lam2)))
    return c is not None and all(isinstance(x, int) and x >= 0 for x in c)


def weyl_orbit(datum: AffineWeylDatum, v) -> list[tuple]:
    """Distinct W_0-translates of ``v`` in a fixed (sorted) order."""
    W = datum.weyl
    return sorted({W.act(w, v) for w in range(len(W))})
