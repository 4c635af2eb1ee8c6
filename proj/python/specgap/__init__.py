"""Edge expansion, nontrivial spectra and mixing times of nonnegative matrices.

Thin wrapper over the native module; the *_json entry points are re-exposed
as functions returning dicts.
"""

import json as _json

from ._native import (
    CapacityError,
    DomainError,
    NumericError,
    ValidationError,
    acceptance,
    canonical_paths,
    continuous_mixing_time,
    cycle,
    de_bruijn,
    gamma_csv,
    klawe_vazirani,
    load_matrix,
    mixing_time,
    perturbed_rogue,
    random_doubly_stochastic,
    rogue,
    save_matrix,
    triangular_mix_power,
    triangular_power_bound,
    uniform,
)
from . import _native


def pf(a, tol=1e-12):
    return _json.loads(_native.pf_json(a, tol))


def validate(a, tol=1e-12):
    return _json.loads(_native.validate_json(a, tol))


def phi(a, n_limit=24):
    return _json.loads(_native.phi_json(a, n_limit))


def spectrum(a):
    return _json.loads(_native.spectrum_json(a))


def bounds(a, n_limit=24):
    return _json.loads(_native.bounds_json(a, n_limit))


def mixing(a, eps=0.25, tau_max=1_000_000):
    return _json.loads(_native.mixing_json(a, eps, tau_max))


__all__ = [
    "CapacityError",
    "DomainError",
    "NumericError",
    "ValidationError",
    "acceptance",
    "bounds",
    "canonical_paths",
    "continuous_mixing_time",
    "cycle",
    "de_bruijn",
    "gamma_csv",
    "klawe_vazirani",
    "load_matrix",
    "mixing",
    "mixing_time",
    "perturbed_rogue",
    "pf",
    "phi",
    "random_doubly_stochastic",
    "rogue",
    "save_matrix",
    "spectrum",
    "triangular_mix_power",
    "triangular_power_bound",
    "uniform",
    "validate",
]
