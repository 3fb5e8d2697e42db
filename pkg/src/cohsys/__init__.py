"""Exact invariants, wall structure and Poincare polynomials of moduli
spaces of coherent systems on a curve of genus g >= 2."""

from .closed_forms import closed_form_n3, closed_form_n4
from .errors import (
    CohSysError,
    CriticalAlpha,
    InvalidExponent,
    InvalidParams,
    InvalidRange,
    InvalidType,
    NegativeCoefficient,
    NonExactDivision,
    OutOfRange,
    ParityError,
)
from .exact import IntPoly, Rational, cyclotomic_product, poly_div_exact, poly_mul
from .moduli import (
    FlipLocusData,
    SystemType,
    WallPattern,
    alpha_I_bound,
    alpha_T,
    alpha_max,
    beta,
    candidate_critical_values,
    certified_walls_k_n_minus_2,
    check_codim_bounds,
    codim_D,
    codim_D_partition_min,
    flip_constants,
    flip_locus_data,
    is_nonempty,
    wall_solutions_k_n_minus_2,
)
from .poincare import (
    ChamberQuery,
    chamber_intervals,
    chamber_query,
    p_G_chamber,
    p_GL,
    p_grassmannian,
    p_m2,
    p_re,
    wall_crossing_difference,
)
from .report import TopologyReport, topology_report

__version__ = "0.1.0"
