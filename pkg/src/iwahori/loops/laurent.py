"""Laurent polynomials over a finite field and small matrices of them.

Two models of a quadratic extension K'/K of K = F_q((t)) are supported:

* ramified: K' = F_q((v)) with v^2 = t, and tau(v) = -v;
* unramified: K' = F_{q^2}((t)), and tau acts on coefficients by a -> a^q.

Elements carry their model so that ``tau`` is always available.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FiniteField, GF

INF = float("inf")


@dataclass(frozen=True)
class Model:
    """Coefficient field plus uniformizer of K' and the involution tau."""

    field: FiniteField
    q: int  # size of the residue field of K
    kind: str  # "split", "ramified" or "unramified"

    @property
    def var(self) -> str:
        return "v" if self.kind == "ramified" else "t"

    @property
    def ramified(self) -> bool:
        return self.kind == "ramified"

    def tau_coeff(self, a):
        return self.field.pow(a, self.q) if self.kind == "unramified" else a

    def base_scalars(self) -> list[int]:
        """Nonzero elements of F_q inside the coefficient field."""
        if self.field.q == self.q:
            return list(self.field.nonzero())
        return [a for a in self.field.subfield(self.q) if a]


def ramified_model(q: int) -> Model:
    return Model(GF(q), q, "ramified")


def unramified_model(q: int) -> Model:
    return Model(GF(q * q), q, "unramified")


def split_model(q: int) -> Model:
    """K itself, written in t; tau is the identity."""
    return Model(GF(q), q, "split")


class LaurentPoly:
    __slots__ = ("model", "terms")

    def __init__(self, model: Model, terms=None):
        self.model = model
        self.terms = {int(e): c for e, c in (terms or {}).items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, model: Model, c) -> "LaurentPoly":
        return cls(model, {0: c})

    @classmethod
    def monomial(cls, model: Model, c, e: int) -> "LaurentPoly":
        return cls(model, {e: c})

    @classmethod
    def zero(cls, model: Model) -> "LaurentPoly":
        return cls(model)

    @classmethod
    def one(cls, model: Model) -> "LaurentPoly":
        return cls(model, {0: 1})

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        return min(self.terms) if self.terms else INF

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        if other == 1:
            return self.terms == {0: 1}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        v = self.model.var
        return " + ".join(f"{c}*{v}^{e}" for e, c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    # -- arithmetic ------------------------------------------------------

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.const(self.model, self.model.field.from_int(other))

    def __add__(self, other):
        other = self._lift(other)
        F = self.model.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return LaurentPoly(self.model, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.model.field
        return LaurentPoly(self.model, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        F = self.model.field
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return LaurentPoly(self.model, out)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        F = self.model.field
        return LaurentPoly(self.model, {e: F.mul(c, a) for e, a in self.terms.items()})

    def inverse(self) -> "LaurentPoly":
        """Inverse of a monomial; other elements are not units of the Laurent ring."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self!r} is not invertible among Laurent polynomials")
        (e, c), = self.terms.items()
        return LaurentPoly(self.model, {-e: self.model.field.inv(c)})

    def tau(self) -> "LaurentPoly":
        m = self.model
        F = m.field
        out = {}
        for e, c in self.terms.items():
            c = m.tau_coeff(c)
            if m.ramified and e % 2:
                c = F.neg(c)
            out[e] = c
        return LaurentPoly(m, out)


class LoopMatrix:
    """A square matrix of LaurentPoly entries (exact arithmetic)."""

    __slots__ = ("model", "rows")

    def __init__(self, model: Model, rows):
        self.model = model
        self.rows = [[x if isinstance(x, LaurentPoly) else LaurentPoly.const(model, model.field.from_int(x)) for x in r] for r in rows]

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, model: Model, n: int) -> "LoopMatrix":
        return cls(model, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, model: Model, entries) -> "LoopMatrix":
        n = len(entries)
        return cls(model, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, LoopMatrix) and self.rows == other.rows

    def __repr__(self):
        return "LoopMatrix(" + repr(self.rows) + ")"

    def __mul__(self, other: "LoopMatrix") -> "LoopMatrix":
        n = self.n
        zero = LaurentPoly.zero(self.model)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LoopMatrix(self.model, out)

    def transpose(self) -> "LoopMatrix":
        return LoopMatrix(self.model, [list(r) for r in zip(*self.rows)])

    def tau(self) -> "LoopMatrix":
        return LoopMatrix(self.model, [[x.tau() for x in r] for r in self.rows])

    def _minor(self, i, j) -> "LoopMatrix":
        return LoopMatrix(
            self.model,
            [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(self.rows) if k != i],
        )

    def det(self) -> LaurentPoly:
        n = self.n
        if n == 1:
            return self.rows[0][0]
        acc = LaurentPoly.zero(self.model)
        for j in range(n):
            term = self.rows[0][j] * self._minor(0, j).det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def inverse(self) -> "LoopMatrix":
        """Adjugate over det; needs det to be a monomial."""
        d_inv = self.det().inverse()
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                c = self._minor(j, i).det() * d_inv
                row.append(c if (i + j) % 2 == 0 else -c)
            rows.append(row)
        return LoopMatrix(self.model, rows)

    def valuations(self):
        return [[x.valuation() for x in r] for r in self.rows]

    def is_monomial_matrix(self) -> bool:
        return all(sum(1 for x in r if x.terms) == 1 for r in self.rows) and all(
            sum(1 for x in c if x.terms) == 1 for c in zip(*self.rows)
        )

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]


def antidiagonal(model: Model, n: int) -> LoopMatrix:
    return LoopMatrix(model, [[int(i + j == n - 1) for j in range(n)] for i in range(n)])


def preserves_hermitian_form(m: LoopMatrix) -> bool:
    """tau(M)^T J M = J for J the anti-diagonal Gram matrix."""
    J = antidiagonal(m.model, m.n)
    return m.tau().transpose() * J * m == J
