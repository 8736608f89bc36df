"""Exact arithmetic substrate: rationals, polynomials, bases, matrices.

Every scalar in the package is a `fractions.Fraction`, which already
guarantees the canonical reduced form (gcd 1, positive denominator) and
arbitrary precision.  Nothing in this package ever rounds.

A `Poly` is a dense coefficient vector over the rationals, lowest power
first.  A `LaurentPoly` additionally admits negative powers and is stored
sparsely.  Polynomials can be expressed either in the monomial basis
1, y, y^2, ... or in the quasi-monomial basis 1, y, y(y-d), y(y-d)(y-2d), ...
whose elements vanish on the grid 0, d, 2d, ...; `basis_transplant` moves
coefficient vectors between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Union[int, Fraction]


class DegenerateSpectrumError(ValueError):
    """Two diagonal entries coincide where distinct eigenvalues are required."""

    def __init__(self, levels: Sequence[int], value: Fraction):
        self.levels = tuple(levels)
        self.value = value
        super().__init__(
            f"eigenvalue {rat_str(value)} occurs at levels {self.levels}"
        )


class NotTriangularError(ValueError):
    """A matrix expected to be triangular in its basis ordering is not."""


def rat(x: Rat | str) -> Fraction:
    """Coerce an int, Fraction, or "num/den" string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(str(x))


def rat_str(x: Rat) -> str:
    """Canonical string form "num/den", with "/den" omitted for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Dense polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial over the rationals, lowest power first.

    Immutable.  The coefficient tuple never has a trailing zero; the zero
    polynomial has an empty tuple and degree None (an explicit sentinel,
    so no arithmetic can be done on it by accident).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Poly is immutable")

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def monomial(power: int, coeff: Rat = 1) -> "Poly":
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return Poly([0] * power + [coeff])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        """Rescale so the leading coefficient is 1."""
        lead = self.leading
        return Poly([c / lead for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, k: Rat) -> "Poly":
        k = Fraction(k)
        return Poly([k * c for c in self.coeffs])

    def __call__(self, point: Rat) -> Fraction:
        """Evaluate by Horner's rule, exactly."""
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift_arg(self, offset: Rat) -> "Poly":
        """Return f(y + offset), expanded exactly."""
        offset = Fraction(offset)
        if offset == 0:
            return self
        out = Poly()
        shifted = Poly([offset, 1])
        power = Poly.one()
        for c in self.coeffs:
            if c != 0:
                out = out + power.scale(c)
            power = power * shifted
        return out

    def scale_arg(self, factor: Rat) -> "Poly":
        """Return f(factor * y)."""
        factor = Fraction(factor)
        return Poly([c * factor**i for i, c in enumerate(self.coeffs)])

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [
            f"{rat_str(c)}*y^{i}" for i, c in enumerate(self.coeffs) if c != 0
        ]
        return "Poly(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse polynomial with integer (possibly negative) powers.

    Stored as a power -> coefficient map with no explicit zeros.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rat] | Iterable[tuple[int, Rat]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for power, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            acc[power] = acc.get(power, Fraction(0)) + c
            if acc[power] == 0:
                del acc[power]
        object.__setattr__(self, "terms", dict(sorted(acc.items())))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def from_poly(p: Poly) -> "LaurentPoly":
        return LaurentPoly({i: c for i, c in enumerate(p.coeffs)})

    @staticmethod
    def monomial(power: int, coeff: Rat = 1) -> "LaurentPoly":
        return LaurentPoly({power: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, power: int) -> Fraction:
        return self.terms.get(power, Fraction(0))

    @property
    def min_power(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def max_power(self) -> int | None:
        return max(self.terms) if self.terms else None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for power, c in other.terms.items():
            out[power] = out.get(power, Fraction(0)) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, Fraction] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                out[p1 + p2] = out.get(p1 + p2, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    def scale(self, k: Rat) -> "LaurentPoly":
        k = Fraction(k)
        return LaurentPoly({p: k * c for p, c in self.terms.items()})

    def scale_arg(self, factor: Rat) -> "LaurentPoly":
        """Return f(factor * y); works for negative powers too."""
        factor = Fraction(factor)
        return LaurentPoly({p: c * factor**p for p, c in self.terms.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({p - 1: p * c for p, c in self.terms.items() if p != 0})

    def shift_arg(self, offset: Rat) -> "LaurentPoly":
        """Return f(y + offset).  Defined only when no negative powers occur."""
        if self.min_power is not None and self.min_power < 0:
            raise ValueError("cannot shift the argument of a pole term")
        return LaurentPoly.from_poly(self.to_poly().shift_arg(offset))

    def to_poly(self) -> Poly:
        """Convert to a dense Poly; raises if any negative power remains."""
        if self.min_power is not None and self.min_power < 0:
            raise ValueError("Laurent polynomial has poles")
        size = (self.max_power + 1) if self.terms else 0
        out = [Fraction(0)] * size
        for p, c in self.terms.items():
            out[p] = c
        return Poly(out)

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        terms = [f"{rat_str(c)}*y^{p}" for p, c in self.terms.items()]
        return "LaurentPoly(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# Bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """The basis 1, y, y^2, ..."""

    def __repr__(self) -> str:
        return "Monomial()"


@dataclass(frozen=True)
class QuasiMonomial:
    """The basis 1, y, y(y-d), ... with step d.

    Step 0 is permitted and collapses to the monomial basis, so callers
    never have to special-case it.
    """

    delta: Fraction

    def __repr__(self) -> str:
        return f"QuasiMonomial({rat_str(self.delta)})"


BasisKind = Union[Monomial, QuasiMonomial]


def quasi_monomial_expand(n: int, delta: Rat) -> Poly:
    """Expand the degree-n quasi-monomial y(y-d)(y-2d)...(y-(n-1)d).

    The empty product (n = 0) is 1; the result is always monic of degree
    exactly n and vanishes at the grid points 0, d, ..., (n-1)d.
    """
    if n < 0:
        raise ValueError("quasi-monomial degree must be non-negative")
    delta = Fraction(delta)
    out = Poly.one()
    for k in range(n):
        out = out * Poly([-k * delta, 1])
    return out


def basis_element(basis: BasisKind, n: int) -> Poly:
    """The n-th basis element, expanded in monomials."""
    if isinstance(basis, QuasiMonomial):
        return quasi_monomial_expand(n, basis.delta)
    return Poly.monomial(n)


def to_monomial_coeffs(coeffs: Sequence[Rat], basis: BasisKind) -> Poly:
    """Expand a coefficient vector given in `basis` into an actual polynomial."""
    out = Poly()
    for n, c in enumerate(coeffs):
        c = Fraction(c)
        if c != 0:
            out = out + basis_element(basis, n).scale(c)
    return out


def from_monomial_coeffs(p: Poly, basis: BasisKind) -> Poly:
    """Express a polynomial as a coefficient vector in `basis`.

    The change of basis is unitriangular (each quasi-monomial is monic of
    its degree), so peeling the leading term top-down is exact and total.
    The vector is returned packaged as a Poly.
    """
    if isinstance(basis, Monomial) or (
        isinstance(basis, QuasiMonomial) and basis.delta == 0
    ):
        return p
    out: dict[int, Fraction] = {}
    rest = p
    while not rest.is_zero:
        n = rest.degree
        c = rest.leading
        out[n] = c
        rest = rest - basis_element(basis, n).scale(c)
        if not rest.is_zero and rest.degree >= n:
            raise AssertionError("basis change failed to reduce the degree")
    size = max(out) + 1 if out else 0
    vec = [Fraction(0)] * size
    for n, c in out.items():
        vec[n] = c
    return Poly(vec)


def basis_transplant(
    coeffs: Sequence[Rat] | Poly, from_basis: BasisKind, to_basis: BasisKind
) -> Poly:
    """Reinterpret a coefficient vector from one basis in another.

    The input is read in `from_basis`, the same abstract element is
    re-expanded in `to_basis`, and the resulting coefficient vector is
    returned as a Poly.  The round trip from -> to -> from is the identity.
    """
    vec = coeffs.coeffs if isinstance(coeffs, Poly) else [Fraction(c) for c in coeffs]
    expanded = to_monomial_coeffs(vec, from_basis)
    return from_monomial_coeffs(expanded, to_basis)


# ---------------------------------------------------------------------------
# Exact matrices
# ---------------------------------------------------------------------------


class OperatorMatrix:
    """Square matrix of an operator on the flag space P_N, in a stated basis.

    Column j holds the coefficient vector of the image of basis element j.
    Entries are exact rationals.
    """

    __slots__ = ("rows", "basis")

    def __init__(self, rows: Sequence[Sequence[Rat]], basis: BasisKind):
        mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        size = len(mat)
        if any(len(row) != size for row in mat):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", mat)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("OperatorMatrix is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def top_degree(self) -> int:
        """N for a matrix acting on P_N."""
        return self.size - 1

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(self.size))

    def apply(self, vec: Sequence[Rat]) -> list[Fraction]:
        """Matrix-vector product with a coefficient vector (padded with 0)."""
        v = [Fraction(x) for x in vec]
        if len(v) > self.size:
            raise ValueError("vector longer than the matrix dimension")
        v += [Fraction(0)] * (self.size - len(v))
        return [sum((row[j] * v[j] for j in range(self.size)), Fraction(0)) for row in self.rows]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OperatorMatrix)
            and self.rows == other.rows
            and self.basis == other.basis
        )

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rat_str(x) for x in row) for row in self.rows
        )
        return f"OperatorMatrix[{self.basis!r}]({body})"


def back_substitute(matrix: OperatorMatrix, eigenvalue: Rat, pivot: int) -> Poly:
    """Solve the triangular eigenproblem M v = E v with v monic at `pivot`.

    The matrix must be triangular in its basis ordering with
    M[pivot][pivot] = E.  Rows above the pivot are solved upward; a
    diagonal entry equal to E above the pivot makes the division
    impossible and raises DegenerateSpectrumError.
    """
    eigenvalue = Fraction(eigenvalue)
    if not (0 <= pivot < matrix.size):
        raise ValueError("pivot outside the matrix")
    if matrix[pivot][pivot] != eigenvalue:
        raise ValueError("pivot diagonal entry does not match the eigenvalue")
    v = [Fraction(0)] * (pivot + 1)
    v[pivot] = Fraction(1)
    for i in range(pivot - 1, -1, -1):
        rhs = sum((matrix[i][j] * v[j] for j in range(i + 1, pivot + 1)), Fraction(0))
        denom = eigenvalue - matrix[i][i]
        if denom == 0:
            raise DegenerateSpectrumError([i, pivot], eigenvalue)
        v[i] = rhs / denom
    return Poly(v)
