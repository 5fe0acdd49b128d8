"""Orders, cofactors, and odd-density statistics of GF(2) polynomials.

The package studies polynomials f over GF(2) with f(0) = 1 through the
cofactor f* = (1 + x^D)/f at the order D: the balance of ones and zeros in
f*, the exact odd density gamma, robustness, two parametric quadrinomial
families achieving high density with closed-form cofactors, the equivalent
counting problem for generalized binary representations (Stern's sequence
included), and exhaustive scan / census / figure data generation.
"""

from .gf2poly import (
    BitCapExceeded,
    F2Poly,
    bit_cap,
    divrem,
    ell0,
    ell1,
    ensure_bits,
    from_index,
    modpow_x,
    mul,
    parse_poly,
    reciprocal,
)
from .order_beta import (
    BetaReport,
    GapCheck,
    OrderBoundExceeded,
    OrderCheck,
    beta,
    beta_N,
    cofactor,
    coordinate_gap_bound_check,
    is_robust,
    order,
    verify_order_divides,
)
from .families import (
    EXACT_ORDER_CEILING,
    FamilyPrediction,
    FamilySpec,
    FamilyVerdict,
    ab_lemma_check,
    build as build_family,
    family_prediction,
    g_product,
    glaisher_sum,
    h_closed_form,
    odd_binomial_count,
    one_plus_x_pow,
    verify_family,
)
from .representations import (
    DigitSet,
    ParityProfile,
    count_representations,
    diatomic_row,
    parity_profile,
    parity_series,
    parity_series_via_cofactor,
    phi,
    stern,
)
from .search import (
    FIGURE_COLUMNS,
    PRESETS,
    SCAN_COLUMNS,
    FigureRow,
    GapCensusEntry,
    ScanConfig,
    ScanRecord,
    figure_data,
    gap_census,
    scan,
    write_figure_csv,
    write_scan_csv,
    write_scan_jsonl,
)

__version__ = "0.1.0"

__all__ = [
    "F2Poly",
    "BitCapExceeded",
    "OrderBoundExceeded",
    "bit_cap",
    "ensure_bits",
    "from_index",
    "parse_poly",
    "mul",
    "divrem",
    "modpow_x",
    "reciprocal",
    "ell1",
    "ell0",
    "BetaReport",
    "OrderCheck",
    "GapCheck",
    "order",
    "verify_order_divides",
    "cofactor",
    "beta",
    "beta_N",
    "is_robust",
    "coordinate_gap_bound_check",
    "EXACT_ORDER_CEILING",
    "FamilySpec",
    "FamilyPrediction",
    "FamilyVerdict",
    "family_prediction",
    "build_family",
    "g_product",
    "one_plus_x_pow",
    "h_closed_form",
    "ab_lemma_check",
    "glaisher_sum",
    "odd_binomial_count",
    "verify_family",
    "DigitSet",
    "ParityProfile",
    "phi",
    "count_representations",
    "parity_series",
    "parity_series_via_cofactor",
    "parity_profile",
    "stern",
    "diatomic_row",
    "ScanConfig",
    "ScanRecord",
    "FigureRow",
    "GapCensusEntry",
    "PRESETS",
    "SCAN_COLUMNS",
    "FIGURE_COLUMNS",
    "scan",
    "figure_data",
    "gap_census",
    "write_scan_csv",
    "write_scan_jsonl",
    "write_figure_csv",
]
