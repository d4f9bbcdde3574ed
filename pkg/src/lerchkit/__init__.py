"""lerchkit: Hurwitz-Lerch zeta evaluation and identity verification."""

from .errors import (ConvergenceError, DomainError, EvaluationError,
                     LerchkitError, NoStrategyError, PoleError,
                     SamplerExhaustedError)
from .lerch import (EvalResult, LerchArgs, RootOfUnity, hurwitz_zeta,
                    hurwitz_zeta_ds, phi, phi_ds, phi_integral, phi_neg_int,
                    phi_root_unity, phi_series, polylog, polylog_ds,
                    recognize_root_of_unity)
from .identities import IdentityDescriptor, ParamSchema, evaluate_side, registry
from .numerics import (Constants, GLAISHER_REFERENCE, bernoulli_numbers,
                       constants, digamma, eulerian_numbers, gamma, log_gamma,
                       principal_log, principal_pow)
from .quadrature import QuadratureResult, integrate_tail, integrate_unit_singular
from .verify import (SampleRecord, VerificationReport, branch_defect, run,
                     sample, serialize_report, tolerance)

__all__ = [
    "Constants", "ConvergenceError", "DomainError", "EvalResult",
    "EvaluationError", "GLAISHER_REFERENCE", "IdentityDescriptor", "LerchArgs",
    "LerchkitError", "NoStrategyError", "ParamSchema", "PoleError",
    "QuadratureResult", "RootOfUnity", "SampleRecord", "SamplerExhaustedError",
    "VerificationReport", "bernoulli_numbers", "branch_defect", "constants",
    "digamma", "eulerian_numbers", "evaluate_side", "gamma", "hurwitz_zeta",
    "hurwitz_zeta_ds", "integrate_tail", "integrate_unit_singular", "log_gamma",
    "phi", "phi_ds", "phi_integral", "phi_neg_int", "phi_root_unity",
    "phi_series", "polylog", "polylog_ds", "principal_log", "principal_pow",
    "recognize_root_of_unity", "registry", "run", "sample", "serialize_report",
    "tolerance",
]
