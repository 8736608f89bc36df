"""Classical polynomial families and the weighted-state eigenchecks.

Hermite polynomials use the physicists' convention; associated Laguerre
polynomials come from the explicit coefficient formula with a
generalized (rational-argument) binomial, so half-integer superscripts
are exact.  The "modified" Laguerre family transplants the Laguerre
coefficients onto quasi-monomials.

The weighted states x^p * exp(-w x^2/2) * Q(x) close under the
inverse-square-plus-quadratic Hamiltonian

    K = -d^2/dx^2 + w^2 x^2 + p(p-1)/x^2 :

conjugating by the weight turns K into an operation on Q alone,

    Q  ->  -Q'' - 2(p/x - w x) Q' + w(2p+1) Q,

with the 1/x^2 terms cancelling identically, so everything stays inside
exact Laurent arithmetic (no square root of w is ever needed: w enters
only through w x^2 and the x^p prefactor).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    LaurentPoly,
    Monomial,
    Poly,
    QuasiMonomial,
    Rat,
    basis_transplant,
    rat_str,
)
from .fock import build_hf
from .realize import Differential, apply_op


class NotProportionalError(ValueError):
    """Two polynomials expected to be proportional are not."""


class NotEigenfunctionError(ValueError):
    """A state expected to be an eigenfunction has a nonzero residual."""


class GaugeMismatchError(ValueError):
    """No constant shift reconciles the weighted action with the flag action."""


def _binomial(top: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(top, k) for rational top."""
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    return num / factorial(k)


def laguerre(n: int, alpha: Rat) -> Poly:
    """Associated Laguerre polynomial L_n^(alpha) from the explicit formula.

    Coefficient of y^l is (-1)^l * C(n + alpha, n - l) / l!.
    """
    if n < 0:
        raise ValueError("Laguerre index must be non-negative")
    alpha = Fraction(alpha)
    coeffs = [
        (-1) ** l * _binomial(n + alpha, n - l) / factorial(l) for l in range(n + 1)
    ]
    return Poly(coeffs)


def hermite(k: int) -> Poly:
    """Physicists' Hermite polynomial H_k via the three-term recurrence."""
    if k < 0:
        raise ValueError("Hermite index must be non-negative")
    prev, cur = Poly.one(), Poly([0, 2])
    if k == 0:
        return prev
    for i in range(1, k):
        prev, cur = cur, Poly([0, 2]) * cur - prev.scale(2 * i)
    return cur


def modified_laguerre(n: int, alpha: Rat, delta: Rat) -> Poly:
    """Laguerre coefficients transplanted onto quasi-monomials with step delta.

    Returns the monomial expansion of sum_l a_l * y^(l-th quasi-monomial);
    delta = 0 collapses back to the plain Laguerre polynomial.
    """
    base = laguerre(n, alpha)
    return basis_transplant(base, QuasiMonomial(Fraction(delta)), Monomial())


def constant_ratio(a: LaurentPoly, b: LaurentPoly) -> Fraction | None:
    """The constant c with a = c * b, or None if no such constant exists."""
    if b.is_zero:
        return None
    if a.is_zero:
        return Fraction(0)
    candidate: Fraction | None = None
    for power in set(a.terms) | set(b.terms):
        ca, cb = a.coeff(power), b.coeff(power)
        if cb == 0:
            if ca != 0:
                return None
            continue
        ratio = ca / cb
        if candidate is None:
            candidate = ratio
        elif candidate != ratio:
            return None
    return candidate


def _even_substitute(p: Poly, omega: Fraction) -> LaurentPoly:
    """P(w x^2) as a Laurent polynomial in x."""
    return LaurentPoly({2 * k: c * omega**k for k, c in enumerate(p.coeffs) if c != 0})


def parity_relation_ratio(n: int, p: int, omega: Rat) -> Fraction:
    """Proportionality constant between H_(2n+p) and the Laguerre reduction.

    H_(2n+p) has pure parity, so it factors as z^p * G(z^2); with
    z = sqrt(w) x the two sides x^p G(w x^2) and x^p L_n^(p-1/2)(w x^2)
    are rational polynomials in x once the sqrt(w)^p prefactor is
    normalized away.  Both are expanded exactly and their constant ratio
    is returned; a structural mismatch raises NotProportionalError.
    """
    if p not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    omega = Fraction(omega)
    if omega <= 0:
        raise ValueError("frequency must be positive")
    h = hermite(2 * n + p)
    even_part = {}
    for i, c in enumerate(h.coeffs):
        if c == 0:
            continue
        if (i - p) % 2 != 0:
            raise NotProportionalError("Hermite parity pattern violated")
        even_part[(i - p) // 2] = c
    g = Poly([even_part.get(j, Fraction(0)) for j in range(n + 1)])
    left = _even_substitute(g, omega)
    right = _even_substitute(laguerre(n, Fraction(p) - Fraction(1, 2)), omega)
    ratio = constant_ratio(left, right)
    if ratio is None or ratio == 0:
        raise NotProportionalError(
            f"H_{2 * n + p} is not a multiple of the Laguerre reduction"
        )
    return ratio


# ---------------------------------------------------------------------------
# Weighted states and the inverse-square oscillator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightedState:
    """State x^p * exp(-w x^2 / 2) * Q(x) with exact Laurent part Q."""

    p: Fraction
    omega: Fraction
    q_part: LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "omega", Fraction(self.omega))
        if self.omega <= 0:
            raise ValueError("frequency must be positive")

    @property
    def is_zero(self) -> bool:
        return self.q_part.is_zero

    def _check_frame(self, other: "WeightedState") -> None:
        if self.p != other.p or self.omega != other.omega:
            raise ValueError("weighted states live in different (p, w) frames")

    def __add__(self, other: "WeightedState") -> "WeightedState":
        self._check_frame(other)
        return WeightedState(self.p, self.omega, self.q_part + other.q_part)

    def __sub__(self, other: "WeightedState") -> "WeightedState":
        self._check_frame(other)
        return WeightedState(self.p, self.omega, self.q_part - other.q_part)

    def scale(self, k: Rat) -> "WeightedState":
        return WeightedState(self.p, self.omega, self.q_part.scale(k))

    @staticmethod
    def ground(p: Rat, omega: Rat) -> "WeightedState":
        """The bare weight factor itself (Q = 1)."""
        return WeightedState(Fraction(p), Fraction(omega), LaurentPoly({0: 1}))


def kratzer_apply(state: WeightedState) -> WeightedState:
    """Apply -d^2/dx^2 + w^2 x^2 + p(p-1)/x^2 to a weighted state.

    Differentiating the weight twice produces exactly the p(p-1)/x^2 and
    w^2 x^2 terms with opposite sign, so the surviving action on Q is
    -Q'' - 2(p/x - w x) Q' + w(2p+1) Q.
    """
    p, omega, q = state.p, state.omega, state.q_part
    dq = q.derivative()
    mixed = (LaurentPoly({-1: p}) - LaurentPoly({1: omega})) * dq
    new_q = -q.derivative().derivative() - mixed.scale(2) + q.scale(omega * (2 * p + 1))
    return WeightedState(p, omega, new_q)


def kratzer_eigencheck(n: int, p: Rat, omega: Rat) -> Fraction:
    """Exact eigenvalue of the level-n weighted Laguerre state.

    Builds x^p L_n^(p-1/2)(w x^2) exp(-w x^2/2), applies the Hamiltonian,
    and demands that the image be an exact multiple of the input; the
    measured multiple w(4n + 2p + 1) is returned.
    """
    p = Fraction(p)
    omega = Fraction(omega)
    q = _even_substitute(laguerre(n, p - Fraction(1, 2)), omega)
    state = WeightedState(p, omega, q)
    image = kratzer_apply(state)
    value = constant_ratio(image.q_part, state.q_part)
    if value is None:
        raise NotEigenfunctionError(
            f"level {n} weighted state (p={rat_str(p)}, w={rat_str(omega)}) "
            "is not an eigenfunction"
        )
    return value


def gauge_conjugate_check(
    poly: Poly, p: Rat, omega: Rat
) -> tuple[Fraction, WeightedState]:
    """Match the weighted action of K against the flag operator.

    For Psi = x^p exp(-w x^2/2) P(w x^2) the claim is

        K Psi = Psi0 * [ (E0 * P - w * (h P)) at w x^2 ]

    with h the differential realization of the three-point element and a
    single constant E0 = w(2p+1).  The constant is solved for exactly;
    the returned residual is identically zero when the match holds, and
    GaugeMismatchError is raised when no constant works.
    """
    if poly.is_zero:
        raise ValueError("gauge check needs a nonzero polynomial")
    p = Fraction(p)
    omega = Fraction(omega)
    q_in = _even_substitute(poly, omega)
    state = WeightedState(p, omega, q_in)
    image = kratzer_apply(state)

    h_image = apply_op(build_hf(p), Differential(), poly)
    shifted = image.q_part + _even_substitute(h_image, omega).scale(omega)
    e0 = constant_ratio(shifted, q_in)
    if e0 is None:
        raise GaugeMismatchError("no constant reconciles the two actions")
    residual = shifted - q_in.scale(e0)
    return e0, WeightedState(p, omega, residual)
