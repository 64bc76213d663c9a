"""Exact conversions between K(P^d), Chern polynomials with rank, and Hilbert polynomials."""
from .errors import (
    ChernHilbertError,
    DegreeTooHigh,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidBettiTable,
    NotAUnit,
    NotInHilbertLattice,
    NotNilpotent,
    NotNormalized,
    NotRepresentable,
    PolySyntaxError,
    WrongVariable,
)
from .expr import format_ascending, format_descending, parse_poly_expr
from .hrr import (
    CharSeries,
    ToddFactor,
    char_from_class,
    chern_character,
    chern_from_hilbert,
    hilbert_from_chern,
    hilbert_via_pcoeff,
    phi,
    todd_factor,
)
from .ktheory import (
    ChernRank,
    KClass,
    change_basis,
    eta,
    eta_inv,
    k_add,
    k_neg,
    reduce_twist,
    sl_class,
    zeta,
    zeta_inv,
)
from .numerical_poly import (
    SlCombo,
    UniPoly,
    binom_poly,
    combo_to_poly,
    poly_eval,
    poly_to_combo,
    twist_to_sl_combo,
)
from .resolutions import (
    BettiTable,
    chern_from_betti,
    chern_S_ell,
    class_from_betti,
    hilbert_from_betti,
    koszul_betti,
)
from .series import (
    TruncatedSeries,
    coeff_at,
    series_exp,
    series_int_pow,
    series_inv,
    series_log,
    series_mul,
)

__version__ = "0.1.0"
