"""The Iwahori-Weyl group W = Lambda ⋊ W_0.

Elements are ``t_lambda * v`` with ``v`` an index into the datum's finite
Weyl group table.  Length and Bruhat order are taken relative to the base
alcove in the dominant chamber cut out by <x, theta> < 1 for each highest
root theta.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

from . import linalg
from .errors import DatumMismatch, EmptyRootSystem, InfiniteWJ
from .rootsystem import AffineWeylDatum


class ExtendedAffineElement:
    __slots__ = ("datum", "translation", "w", "_length")

    def __init__(self, datum: AffineWeylDatum, translation, w: int = 0):
        self.datum = datum
        self.translation = tuple(translation)
        self.w = w
        self._length = None

    @property
    def finite_part(self):
        return self.datum.weyl.matrices[self.w]

    def __eq__(self, other):
        return (
            isinstance(other, ExtendedAffineElement)
            and self.translation == other.translation
            and self.w == other.w
            and (self.datum is other.datum or self.datum == other.datum)
        )

    def __hash__(self):
        return hash((self.translation, self.w))

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        word = "" if self.w == 0 else " * v" + "".join(str(k + 1) for k in self.datum.weyl.word(self.w))
        return f"t{self.translation}{word}"

    def inverse(self):
        W = self.datum.weyl
        vi = W.inverse[self.w]
        return ExtendedAffineElement(self.datum, tuple(-x for x in W.act(vi, self.translation)), vi)

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = length(self)
        return self._length

    def is_translation(self) -> bool:
        return self.w == 0


def sort_key(x: ExtendedAffineElement):
    return (x.length, x.translation, x.w)


def identity(datum: AffineWeylDatum) -> ExtendedAffineElement:
    return ExtendedAffineElement(datum, (0,) * datum.lattice_rank, 0)


def translation(datum: AffineWeylDatum, lam) -> ExtendedAffineElement:
    return ExtendedAffineElement(datum, tuple(int(x) for x in lam), 0)


def finite(datum: AffineWeylDatum, w: int) -> ExtendedAffineElement:
    return ExtendedAffineElement(datum, (0,) * datum.lattice_rank, w)


def multiply(a: ExtendedAffineElement, b: ExtendedAffineElement) -> ExtendedAffineElement:
    """(t_lam v)(t_mu u) = t_{lam + v mu} (v u)."""
    if a.datum is not b.datum and a.datum != b.datum:
        raise DatumMismatch("elements belong to different data")
    W = a.datum.weyl
    moved = W.act(a.w, b.translation) if a.w else b.translation
    return ExtendedAffineElement(
        a.datum, tuple(x + y for x, y in zip(a.translation, moved)), W.mul(a.w, b.w)
    )


def product(elements: Iterable[ExtendedAffineElement], datum=None) -> ExtendedAffineElement:
    out = None
    for e in elements:
        out = e if out is None else multiply(out, e)
    if out is None:
        return identity(datum)
    return out


def power(a: ExtendedAffineElement, n: int) -> ExtendedAffineElement:
    out = identity(a.datum)
    for _ in range(n):
        out = multiply(out, a)
    return out


def length(x: ExtendedAffineElement) -> int:
    """Iwahori-Matsumoto length: count of affine root hyperplanes separating a and x(a)."""
    d = x.datum
    W = d.weyl
    perm = W.root_perm[W.inverse[x.w]]
    pos = d.is_positive
    lam = x.translation
    total = 0
    for j in d.positive:
        k = linalg.dot(lam, d.roots[j])
        if pos[perm[j]]:
            total += abs(k)
        else:
            total += abs(k - 1)
    return total


class SimpleReflection(ExtendedAffineElement):
    __slots__ = ("name",)

    def __init__(self, datum, translation, w, name):
        super().__init__(datum, translation, w)
        self.name = name

    def __repr__(self):
        return self.name


def simple_reflections(datum: AffineWeylDatum) -> list[SimpleReflection]:
    """The finite simple reflections s1..sr followed by one affine s0 per component."""
    return list(_simple_reflections(datum))


def _simple_reflections(datum: AffineWeylDatum):
    cache = datum.__dict__.get("_simple_refl")
    if cache is not None:
        return cache
    if not datum.roots:
        raise EmptyRootSystem("no simple reflections for an empty root system")
    W = datum.weyl
    zero = (0,) * datum.lattice_rank
    out = []
    for k, j in enumerate(datum.simple_indices):
        out.append(SimpleReflection(datum, zero, W.simple[k], f"s{k + 1}"))
    comps = datum.components
    for c, comp in enumerate(comps):
        theta = datum.highest_root(comp)
        m = datum.reflection_matrix(theta)
        name = "s0" if len(comps) == 1 else f"s0_{c + 1}"
        out.append(SimpleReflection(datum, datum.coroots[theta], W.index[m], name))
    out = tuple(out)
    datum.__dict__["_simple_refl"] = out
    return out


def simple_reflection_by_name(datum: AffineWeylDatum, name: str) -> SimpleReflection:
    for s in _simple_reflections(datum):
        if s.name == name:
            return s
    raise KeyError(name)


def left_descent(x: ExtendedAffineElement):
    lx = x.length
    if lx == 0:
        return None
    for s in _simple_reflections(x.datum):
        if multiply(s, x).length < lx:
            return s
    raise AssertionError("positive length element without a left descent")


def right_descent(x: ExtendedAffineElement):
    lx = x.length
    if lx == 0:
        return None
    for s in _simple_reflections(x.datum):
        if multiply(x, s).length < lx:
            return s
    raise AssertionError("positive length element without a right descent")


def reduced_word(x: ExtendedAffineElement) -> tuple[list[SimpleReflection], ExtendedAffineElement]:
    """Greedy left descent: x = s_1 s_2 ... s_k * omega with omega of length zero."""
    word = []
    y = x
    while True:
        s = left_descent(y)
        if s is None:
            return word, y
        word.append(s)
        y = multiply(s, y)


def omega_component(x: ExtendedAffineElement) -> ExtendedAffineElement:
    """The length-zero element omega with x in W_a * omega."""
    if not x.datum.roots:
        return x
    return reduced_word(x)[1]


def omega_element(datum: AffineWeylDatum, lam) -> ExtendedAffineElement:
    """The length-zero element in the component of t_lam."""
    return omega_component(translation(datum, lam))


def bruhat_leq(v: ExtendedAffineElement, w: ExtendedAffineElement) -> bool:
    """Bruhat order, by recursive descent: v <= w iff min(sv, v) <= sw for a left descent s of w."""
    if v.datum is not w.datum and v.datum != w.datum:
        raise DatumMismatch("elements belong to different data")
    if omega_component(v) != omega_component(w):
        return False
    return _bruhat(v, w, w.datum.__dict__.setdefault("_bruhat_cache", {}))


def _bruhat(v, w, cache) -> bool:
    if v.length > w.length:
        return False
    if v.length == w.length:
        return v == w
    key = (v, w)
    hit = cache.get(key)
    if hit is not None:
        return hit
    s = left_descent(w)
    sv = multiply(s, v)
    res = _bruhat(sv if sv.length < v.length else v, multiply(s, w), cache)
    cache[key] = res
    return res


def subword_products(word, omega) -> set:
    """All products of subwords of ``word`` (a reduced word), times ``omega``."""
    current = {omega}
    for s in reversed(word):
        current |= {multiply(s, y) for y in current}
    return current


def bruhat_interval_below(w: ExtendedAffineElement) -> set:
    """{v : v <= w} via the subword property."""
    word, omega = reduced_word(w)
    return subword_products(word, omega)


def bruhat_leq_subword(v: ExtendedAffineElement, w: ExtendedAffineElement) -> bool:
    """Brute-force Bruhat order: v <= w iff v is a subword product of a reduced word of w."""
    return v in bruhat_interval_below(w)


# -- parahoric subgroups ------------------------------------------------------


class ParahoricType:
    """A subset J of the simple affine reflections, by name."""

    def __init__(self, datum: AffineWeylDatum, names: Iterable[str]):
        self.datum = datum
        self.names = tuple(sorted(set(names)))
        refl = {s.name: s for s in _simple_reflections(datum)}
        unknown = [n for n in self.names if n not in refl]
        if unknown:
            raise KeyError(f"unknown simple reflections {unknown}")
        self.reflections = [refl[n] for n in self.names]
        self._check_finite()

    def _check_finite(self):
        # W_J is finite iff J omits at least one node of each affine component.
        d = self.datum
        comps = d.components
        js = set(self.names)
        for c, comp in enumerate(comps):
            zero = "s0" if len(comps) == 1 else f"s0_{c + 1}"
            nodes = {f"s{k + 1}" for k in comp} | {zero}
            if nodes <= js:
                raise InfiniteWJ(f"W_J is infinite: J contains every node of component {c + 1}")

    @cached_property
    def elements(self) -> frozenset:
        d = self.datum
        seen = {identity(d)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for s in self.reflections:
                    y = multiply(s, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)


def finite_parahoric(datum: AffineWeylDatum) -> ParahoricType:
    """J = the finite simple reflections (the special vertex at the origin)."""
    return ParahoricType(datum, [f"s{k + 1}" for k in range(len(datum.simple_indices))])


def double_coset_rep(x: ExtendedAffineElement, J: ParahoricType | Iterable[str]) -> ExtendedAffineElement:
    """The minimal-length element of W_J x W_J (greedy descent inside J on both sides)."""
    if not isinstance(J, ParahoricType):
        J = ParahoricType(x.datum, J)
    y = x
    changed = True
    while changed:
        changed = False
        for s in J.reflections:
            z = multiply(s, y)
            if z.length < y.length:
                y, changed = z, True
            z = multiply(y, s)
            if z.length < y.length:
                y, changed = z, True
    return y


def double_coset(x: ExtendedAffineElement, J: ParahoricType) -> set:
    """The full (finite) double coset W_J x W_J, for testing."""
    return {multiply(multiply(a, x), b) for a in J.elements for b in J.elements}


# -- enumeration --------------------------------------------------------------


def enumerate_up_to_length(
    datum: AffineWeylDatum, L: int, components: Iterable[ExtendedAffineElement] | None = None
) -> Iterator[ExtendedAffineElement]:
    """Stream every w with l(w) <= L lying in W_a * omega for the given omegas.

    Output is ordered by length, then translation, then finite part.  Only
    two length layers are held in memory at once.
    """
    if components is None:
        components = [identity(datum)]
    layer = sorted(set(components), key=sort_key)
    for om in layer:
        if om.length != 0:
            raise ValueError("components must be length-zero elements")
    refl = _simple_reflections(datum) if datum.roots else ()
    n = 0
    while layer and n <= L:
        yield from layer
        if n == L:
            return
        nxt = set()
        for x in layer:
            for s in refl:
                y = multiply(s, x)
                if y.length == n + 1:
                    nxt.add(y)
        layer = sorted(nxt, key=sort_key)
        n += 1


def element_to_json(x: ExtendedAffineElement) -> dict:
    return {"translation": list(x.translation), "finite_part": [list(r) for r in x.finite_part]}


def element_from_json(datum: AffineWeylDatum, obj: dict) -> ExtendedAffineElement:
    fin = obj.get("finite_part")
    if fin is None:
        w = 0
    else:
        m = tuple(tuple(int(v) for v in row) for row in fin)
        try:
            w = datum.weyl.index[m]
        except KeyError:
            raise ValueError("finite_part is not an element of W_0") from None
    return ExtendedAffineElement(datum, tuple(int(v) for v in obj["translation"]), w)


def word_string(x: ExtendedAffineElement) -> str:
    """Reduced word in S ∪ Omega notation, e.g. ``s0 s1 · ω(1)``."""
    from .frobenius import pi1_I  # local import: frobenius depends on this module

    if not x.datum.roots:
        return f"t{list(x.translation)}"
    word, om = reduced_word(x)
    parts = [s.name for s in word]
    if om.length == 0 and om != identity(x.datum):
        parts.append("ω(" + ",".join(str(c) for c in pi1_I(x.datum).image(om.translation)) + ")")
    return " ".join(parts) if parts else "1"
