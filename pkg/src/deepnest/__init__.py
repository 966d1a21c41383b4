"""Verification tools for deep-nest prohibition arguments in degree 9."""

from .schemes import (
    DeepNestProfile,
    InadmissibleSchemeError,
    RealScheme,
    SchemeSyntaxError,
    classify_deep_nest,
    is_m_curve,
    parse_scheme,
    print_scheme,
)
from .orientations import (
    OrientationParityError,
    OrientationStats,
    SignedScheme,
    chain_imbalance_magnitudes,
    chain_imbalance_set,
    check_orevkov,
    check_rokhlin_mishachev,
    compute_stats,
    parse_signed,
    print_signed,
    rm_rhs,
)
from .cases import (
    BETA_ZERO,
    NO_JUMPS_EVEN_GAMMA,
    NO_JUMPS_ODD_GAMMA,
    SCENARIO_KINDS,
    WITH_O1_JUMPS,
    InfeasibleOrientationError,
    ProhibitReport,
    Scenario,
    SignCase,
    beta_zero_contradiction,
    deep_nest_scheme,
    emit_complex_scheme,
    make_scenario,
    orevkov_filter,
    prohibit,
    solve_scenario,
    theorem1_report,
    theorem2_report,
)
from .configurations import (
    BASE_CONFIGURATIONS,
    REFERENCE_SEQUENCES,
    Classification,
    classify_configuration,
    reducible_cubic_sequence,
    sample_configuration,
)
from .bezout import (
    AuxCurveTrace,
    BudgetReport,
    InvalidTraceError,
    audit,
    load_trace,
    parse_trace,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
