"""Exact homological algebra over Gorenstein finite algebras."""

import json

from . import _gorlab
from ._gorlab import Algebra, Module, PerfectionError, algebra, algebra_from_json, module, module_from_json, serre_operator

__all__ = [
    "Algebra",
    "Module",
    "PerfectionError",
    "algebra",
    "algebra_from_json",
    "module",
    "module_from_json",
    "serre_operator",
    "gorenstein_check",
    "singular_locus",
    "omega",
    "omega_hat",
    "is_gprojective",
    "tate_ext",
    "gprojective_approximation",
    "verify_serre_duality_field",
    "verify_local_duality_integer",
    "trace_pairing_probe",
    "report",
]


def _parsed(fn):
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


gorenstein_check = _parsed(_gorlab.gorenstein_check)
singular_locus = _parsed(_gorlab.singular_locus)
omega = _parsed(_gorlab.omega)
omega_hat = _parsed(_gorlab.omega_hat)
is_gprojective = _parsed(_gorlab.is_gprojective)
tate_ext = _parsed(_gorlab.tate_ext)
gprojective_approximation = _parsed(_gorlab.gprojective_approximation)
verify_serre_duality_field = _parsed(_gorlab.verify_serre_duality_field)
verify_local_duality_integer = _parsed(_gorlab.verify_local_duality_integer)
trace_pairing_probe = _parsed(_gorlab.trace_pairing_probe)


def report(algebra, config=None):
    """Run the configured checks; config is a dict in the CLI config format."""
    return json.loads(_gorlab.report(algebra, json.dumps(config) if config else ""))
