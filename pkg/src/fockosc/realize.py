"""Concrete realizations of the algebra generators on polynomial spaces.

Three substitutions are supported:

* Differential:      a = d/dy,                 b = multiplication by y
* FiniteDifference:  a = D+,                   b = y(1 - delta*D-)
* QDilatation:       a = D_q,                  b = multiplication by y

with the forward/backward differences D+f = (f(y+d) - f(y))/d,
D-f = (f(y) - f(y-d))/d and the dilatation derivative

    D_q f = (f(qy) - f(y)) / (y(q - 1)).

The (q-1) denominator is the sign that satisfies a.b - q.b.a = 1 and
yields the spectrum -4{n}; the opposite sign flips both.  Note that
b under FiniteDifference collapses to f(y) -> y*f(y - delta), and that
D_q on y^n gives {n} y^(n-1), so every action below is exact.

Besides matrices, operators can be flattened to explicit stencils: a
list of coefficient functions c_j(y) with (H f)(y) = sum c_j(y) f(y + j*delta)
(shift mode) or sum c_j(y) f(q^j y) (scale mode).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import (
    LaurentPoly,
    Monomial,
    OperatorMatrix,
    Poly,
    QuasiMonomial,
    Rat,
    basis_element,
    from_monomial_coeffs,
    rat_str,
)
from .fock import AlgebraMismatchError, FockPoly, q_int


class UnsupportedDegreeError(ValueError):
    """Stencil extraction is limited to lowering degree at most 2."""


@dataclass(frozen=True)
class Differential:
    def __repr__(self) -> str:
        return "Differential()"


@dataclass(frozen=True)
class FiniteDifference:
    delta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.delta == 0:
            raise ValueError("finite-difference step must be nonzero")

    def __repr__(self) -> str:
        return f"FiniteDifference({rat_str(self.delta)})"


@dataclass(frozen=True)
class QDilatation:
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q in (0, 1):
            raise ValueError("dilatation parameter must differ from 0 and 1")

    def __repr__(self) -> str:
        return f"QDilatation({rat_str(self.q)})"


Realization = Union[Differential, FiniteDifference, QDilatation]


def realization_q(r: Realization) -> Fraction:
    """Deformation parameter realized by r (1 for the undeformed cases)."""
    return r.q if isinstance(r, QDilatation) else Fraction(1)


def apply_a(r: Realization, f: Poly) -> Poly:
    """Lowering generator: derivative, forward difference, or D_q."""
    if isinstance(r, Differential):
        return f.derivative()
    if isinstance(r, FiniteDifference):
        d = r.delta
        return (f.shift_arg(d) - f).scale(Fraction(1) / d)
    q = r.q
    return Poly([q_int(k, q) * c for k, c in enumerate(f.coeffs)][1:])


def apply_b(r: Realization, f: Poly) -> Poly:
    """Raising generator: y*f, y*f(y - delta), or y*f."""
    if isinstance(r, FiniteDifference):
        return Poly.monomial(1) * f.shift_arg(-r.delta)
    return Poly.monomial(1) * f


def apply_word(r: Realization, k: int, m: int, f: Poly) -> Poly:
    """Apply the realized word b^k a^m (a acts first)."""
    for _ in range(m):
        f = apply_a(r, f)
    for _ in range(k):
        f = apply_b(r, f)
    return f


def apply_op(h: FockPoly, r: Realization, f: Poly) -> Poly:
    """Apply the realized element h to f, exactly.

    The element's deformation parameter must match the realization: 1
    for Differential/FiniteDifference and r.q for QDilatation.
    """
    if h.q != realization_q(r):
        raise AlgebraMismatchError(
            f"element has q={rat_str(h.q)} but realization carries "
            f"q={rat_str(realization_q(r))}"
        )
    out = Poly()
    for (k, m), c in h.terms.items():
        out = out + apply_word(r, k, m, f).scale(c)
    return out


def default_basis(r: Realization):
    """Matrix basis for a realization: quasi-monomials carry FiniteDifference."""
    if isinstance(r, FiniteDifference):
        return QuasiMonomial(r.delta)
    return Monomial()


def realize_matrix(h: FockPoly, r: Realization, n: int) -> OperatorMatrix:
    """Matrix of the realized element on P_N in the realization's basis.

    Column j is the image of basis element j, re-expressed in the same
    basis; components of degree above N are projected away, which is
    lossless precisely for flag-preserving operators.  The
    FiniteDifference basis is QuasiMonomial(delta), which makes a
    flag-preserving matrix identical to its Differential counterpart.
    """
    if n < 0:
        raise ValueError("flag dimension must be non-negative")
    basis = default_basis(r)
    size = n + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        image = apply_op(h, r, basis_element(basis, j))
        vec = from_monomial_coeffs(image, basis)
        for i, c in enumerate(vec.coeffs):
            if i < size:
                rows[i][j] = c
    return OperatorMatrix(rows, basis)


def heisenberg_residual(r: Realization, q: Rat, f: Poly) -> Poly:
    """(a.b - q.b.a - 1) applied to f; identically zero for a valid realization.

    q must be 1 for Differential/FiniteDifference and the realization's
    own parameter for QDilatation.
    """
    if Fraction(q) != realization_q(r):
        raise ValueError(
            "tested bracket parameter does not match the realization"
        )
    ab = apply_a(r, apply_b(r, f))
    ba = apply_b(r, apply_a(r, f))
    return ab - ba.scale(q) - f


def vacuum_image(r: Realization) -> Poly:
    """a applied to the vacuum 1; the zero polynomial for every realization."""
    return apply_a(r, Poly.one())


# ---------------------------------------------------------------------------
# Stencils
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Stencil:
    """Explicit multi-point form of a realized operator.

    mode "shift": (H f)(y) = sum_j coeff[j](y) * f(y + j*param)
    mode "scale": (H f)(y) = sum_j coeff[j](y) * f(param^j * y)

    Offsets with zero coefficient are not stored.
    """

    mode: str  # "shift" | "scale"
    param: Fraction
    terms: tuple[tuple[int, LaurentPoly], ...]  # sorted by offset

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.terms)

    def coeff(self, offset: int) -> LaurentPoly:
        for j, c in self.terms:
            if j == offset:
                return c
        return LaurentPoly()

    def apply(self, f: Poly) -> Poly:
        """Evaluate the stencil on a polynomial; pole terms must cancel."""
        acc = LaurentPoly()
        for j, c in self.terms:
            if self.mode == "shift":
                moved = f.shift_arg(j * self.param)
            else:
                moved = f.scale_arg(self.param**j)
            acc = acc + c * LaurentPoly.from_poly(moved)
        return acc.to_poly()


def _compose_terms(
    x: dict[int, LaurentPoly], y: dict[int, LaurentPoly], mode: str, param: Fraction
) -> dict[int, LaurentPoly]:
    # (c(y) T^i)(d(y) T^j) = c(y) * d(moved y) * T^(i+j), where T moves the
    # argument by i steps: y + i*param for shifts, param^i * y for scalings.
    out: dict[int, LaurentPoly] = {}
    for i, c in x.items():
        for j, d in y.items():
            moved = d.scale_arg(param**i) if mode == "scale" else d.shift_arg(i * param)
            term = c * moved
            if not term.is_zero:
                key = i + j
                out[key] = out.get(key, LaurentPoly()) + term
    return {j: c for j, c in out.items() if not c.is_zero}


def stencil_of(h: FockPoly, r: Realization) -> Stencil:
    """Flatten the realized element to explicit coefficient functions.

    Supported for FiniteDifference (shift mode; the generators give
    a = E/d - 1/d and b = y*E^-1 with E the unit shift, so lowering
    degree <= 2 keeps the offsets inside {-2..2}) and QDilatation
    (scale mode, offsets {0..2}).
    """
    if isinstance(r, Differential):
        raise ValueError("the differential realization has no stencil")
    if h.q != realization_q(r):
        raise AlgebraMismatchError("element and realization deformation differ")
    if h.a_degree() > 2:
        raise UnsupportedDegreeError("stencils are derived for lowering degree <= 2")

    if isinstance(r, FiniteDifference):
        mode, param = "shift", r.delta
        inv = Fraction(1) / param
        a_term: dict[int, LaurentPoly] = {
            1: LaurentPoly({0: inv}),
            0: LaurentPoly({0: -inv}),
        }
        b_term: dict[int, LaurentPoly] = {-1: LaurentPoly({1: 1})}
    else:
        mode, param = "scale", r.q
        alpha = LaurentPoly({-1: Fraction(1) / (param - 1)})
        a_term = {1: alpha, 0: -alpha}
        b_term = {0: LaurentPoly({1: 1})}

    identity = {0: LaurentPoly({0: 1})}
    acc: dict[int, LaurentPoly] = {}
    for (k, m), coeff in h.terms.items():
        word = identity
        for _ in range(m):
            word = _compose_terms(word, a_term, mode, param)
        for _ in range(k):
            word = _compose_terms(b_term, word, mode, param)
        for j, c in word.items():
            acc[j] = acc.get(j, LaurentPoly()) + c.scale(coeff)
    terms = tuple(sorted((j, c) for j, c in acc.items() if not c.is_zero))
    return Stencil(mode=mode, param=param, terms=terms)
