"""Series solutions of u = (A + B u^2) w and their convergence radius.

The coefficients of the solution are Catalan numbers scaled by powers of
A and B. Three independent routes produce them (closed form, fixed-point
substitution, closed-form branch evaluation) so each can check the others.
"""

from .bridgeland import (
    BridgelandParams,
    ThresholdReport,
    ab_from_geometry,
    sign_regime_check,
    threshold,
)
from .catalan_core import (
    CatalanTable,
    catalan_asymptotic,
    catalan_closed,
    catalan_generating_series,
    catalan_recurrence,
)
from .convergence import (
    ConvergenceReport,
    asymptotic_ratio,
    convergence_report,
    divergence_probe,
    hadamard_estimate,
    radius_closed_form,
)
from .evaluation import (
    ComplexBranchError,
    EvalReport,
    closed_form_branch,
    compare_series_to_closed,
)
from .power_series import (
    ScalarKind,
    TruncatedSeries,
    fixed_point_solve,
    series_add,
    series_evaluate,
    series_mul,
    series_shift_scale,
)
from .solver import OracleReport, QuadraticParams, lemma1_series, residual, verify_against_oracle

__version__ = "0.1.0"
