"""Wave-function density estimation.

A probability density f is represented through its square root: sqrt(f) is
expanded in the orthonormal Hermite-function basis, and the coefficient
vector lives on the unit sphere so the density integrates to one.  Fitting
maximizes the sample likelihood over the stereographic chart of that sphere;
the fitted model supports exact moments, entropy estimates, and slice-sampler
draws.
"""

from ._core import (
    DataError,
    FitReport,
    QuadratureError,
    QuadratureRule,
    ReferenceDensity,
    WaveModel,
    deserialize,
    entropy,
    eval_basis,
    eval_basis_deriv,
    fit_mle,
    gauss_hermite,
    grad_log_likelihood,
    log_likelihood,
    make_reference,
    moment,
    project,
    project_density,
    reference_names,
    sample_n,
    serialize,
    standardize,
    unproject,
)

__all__ = [
    "DataError",
    "FitReport",
    "QuadratureError",
    "QuadratureRule",
    "ReferenceDensity",
    "WaveModel",
    "deserialize",
    "entropy",
    "eval_basis",
    "eval_basis_deriv",
    "fit_mle",
    "gauss_hermite",
    "grad_log_likelihood",
    "log_likelihood",
    "make_reference",
    "moment",
    "project",
    "project_density",
    "reference_names",
    "sample_n",
    "serialize",
    "standardize",
    "unproject",
]

__version__ = "0.1.0"
