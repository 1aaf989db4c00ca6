"""
Bounds on the second Hankel determinant ``a_{m+1} a_{3m+1} - a_{2m+1}^2`` for
m-fold symmetric bi-univalent functions defined through the Ruscheweyh derivative,
with independent numerical verification.

The class is fixed by four parameters: the symmetry order ``m``, ``lambda >= 1``,
the Ruscheweyh order ``gamma`` and ``0 <= beta < 1``. Validate them once, then ask
for the bound:

.. code-block:: python

   import hdet

   params = hdet.validate_params(m=1, lambda_=1, gamma=0, beta="1/2")
   result = hdet.theorem_bound(params)
   result.value   # 0.19117647...
   result.branch  # hdet.Branch.AT_RHO_STAR

Rational inputs (``"1/2"``, ``Fraction(1, 3)``) are kept exact, so the choice of
branch near the threshold :func:`hdet.tau` never depends on rounding.

The oracle functions (:func:`hdet.brute_force_max`,
:func:`hdet.monte_carlo_verify` and friends) re-derive the bound numerically, and
the ``hdet`` command exposes all of it from the shell; see ``hdet --help``.

"""

# SPDX-License-Identifier: BSD-3-Clause

from ._bound import (
    BoundResult,
    Branch,
    CorollaryKind,
    CorollaryResult,
    FCoeffs,
    KExtremes,
    OmegaSet,
    branch_values,
    corollary_bound,
    critical_radius,
    f_coeffs,
    f_surface,
    k_extremes,
    k_of_rho,
    k_prime,
    omega_set,
    result_one_threshold,
    rho_two,
    tau,
    theorem_bound,
)
from ._cli import RunConfig, emit_figure_data, run_cli
from ._exceptions import (
    ConfigurationError,
    ConsistencyError,
    HdetError,
    MissingCoefficientError,
    RangeError,
    TruncationError,
)
from ._model import Params, parse_real, validate_params
from ._oracle import (
    CaratheodorySample,
    LemmaReport,
    PQDifferences,
    SearchResult,
    SignCheck,
    SignReport,
    SweepRow,
    ThresholdAudit,
    VerifyReport,
    brute_force_max,
    coefficients_from_sample,
    hankel_functional,
    lemma_identity_check,
    monte_carlo_verify,
    reconstruct_pq,
    sign_invariant_check,
    sweep,
    threshold_audit,
)
from ._series import (
    CaratheodoryCoefficients,
    CoefficientTriple,
    MFoldSeries,
    apply_ruscheweyh,
    compose_truncated,
    fekete_szego,
    hankel_determinant,
    invert_series,
    operator_lhs_coeffs,
    operator_lhs_series,
    pq_from_coefficients,
    ruscheweyh_weight,
    truncated_inverse,
)
from ._version import LIBRARY_VERSION

__version__ = LIBRARY_VERSION

__all__ = [
    "BoundResult",
    "Branch",
    "CaratheodoryCoefficients",
    "CaratheodorySample",
    "CoefficientTriple",
    "ConfigurationError",
    "ConsistencyError",
    "CorollaryKind",
    "CorollaryResult",
    "FCoeffs",
    "HdetError",
    "KExtremes",
    "LemmaReport",
    "MFoldSeries",
    "MissingCoefficientError",
    "OmegaSet",
    "PQDifferences",
    "Params",
    "RangeError",
    "RunConfig",
    "SearchResult",
    "SignCheck",
    "SignReport",
    "SweepRow",
    "ThresholdAudit",
    "TruncationError",
    "VerifyReport",
    "__version__",
    "apply_ruscheweyh",
    "branch_values",
    "brute_force_max",
    "coefficients_from_sample",
    "compose_truncated",
    "corollary_bound",
    "critical_radius",
    "emit_figure_data",
    "f_coeffs",
    "f_surface",
    "fekete_szego",
    "hankel_determinant",
    "hankel_functional",
    "invert_series",
    "k_extremes",
    "k_of_rho",
    "k_prime",
    "lemma_identity_check",
    "monte_carlo_verify",
    "omega_set",
    "operator_lhs_coeffs",
    "operator_lhs_series",
    "parse_real",
    "pq_from_coefficients",
    "reconstruct_pq",
    "result_one_threshold",
    "rho_two",
    "ruscheweyh_weight",
    "run_cli",
    "sign_invariant_check",
    "sweep",
    "tau",
    "theorem_bound",
    "threshold_audit",
    "truncated_inverse",
    "validate_params",
]
