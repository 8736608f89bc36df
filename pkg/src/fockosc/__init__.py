"""Exact computer algebra for the harmonic oscillator in Fock space.

The package builds the oscillator as a normal-ordered element of the
(optionally q-deformed) Heisenberg-Weyl algebra, realizes it as a
differential, finite-difference, or dilatation operator on polynomial
flags, and verifies spectra, eigenfunctions, and isospectrality claims
with arbitrary-precision rational arithmetic throughout.
"""

from .algebra import (
    BasisKind,
    DegenerateSpectrumError,
    LaurentPoly,
    Monomial,
    NotTriangularError,
    OperatorMatrix,
    Poly,
    QuasiMonomial,
    back_substitute,
    basis_transplant,
    quasi_monomial_expand,
    rat,
    rat_str,
)
from .fock import (
    AlgebraMismatchError,
    CasimirValue,
    FockPoly,
    NotScalarError,
    SL2Generators,
    act_on_poly,
    build_hf,
    build_hg,
    casimir_value,
    commutator,
    normal_order_product,
    q_bracket,
    sl2_generators,
)
from .realize import (
    Differential,
    FiniteDifference,
    QDilatation,
    Realization,
    Stencil,
    UnsupportedDegreeError,
    apply_op,
    heisenberg_residual,
    realize_matrix,
    stencil_of,
    vacuum_image,
)
from .spectral import (
    ComparisonReport,
    QNumber,
    SpectralReport,
    SpectrumKind,
    eigensolve_flag,
    isospectral_compare,
    pencil_solve,
    preserves_flag,
    q_number,
    reference_spectrum,
)
from .specfun import (
    GaugeMismatchError,
    NotEigenfunctionError,
    NotProportionalError,
    WeightedState,
    gauge_conjugate_check,
    hermite,
    kratzer_apply,
    kratzer_eigencheck,
    laguerre,
    modified_laguerre,
    parity_relation_ratio,
)

__version__ = "0.1.0"
