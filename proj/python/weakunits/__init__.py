"""Weak units in finite strict semi-monoidal 2-categories.

Certificates come back as plain dicts; ``recheck`` takes one and re-evaluates
every recorded equation with the kernel alone.
"""

import json

from . import _weakunits
from ._weakunits import (
    BoundaryError,
    CertificationError,
    Model,
    StructuralError,
    UniquenessError,
    builtin,
    builtin_names,
    model_from_json,
    monoid,
)

__all__ = [
    "BoundaryError",
    "CertificationError",
    "Model",
    "StructuralError",
    "UniquenessError",
    "builtin",
    "builtin_names",
    "find_units",
    "model_from_json",
    "monoid",
    "recheck",
    "synth",
    "validate",
    "verify",
]


def validate(model):
    return json.loads(_weakunits.validate(model))


def find_units(model, allow_invalid=False):
    return json.loads(_weakunits.find_units(model, allow_invalid))


def synth(model, seed=0, all_choices=False, budget=1 << 16, unit=None, allow_invalid=False):
    return json.loads(_weakunits.synth(model, seed, all_choices, budget, unit, allow_invalid))


def verify(model, theorem, seed=0, all_choices=False, budget=1 << 16, allow_invalid=False):
    """theorem is one of "A", "B", "C", "E", "dim1", "actions"."""
    return json.loads(_weakunits.verify(model, theorem, seed, all_choices, budget, allow_invalid))


def recheck(certificate):
    """Returns (ok, equation count, mismatches)."""
    return _weakunits.recheck(json.dumps(certificate))
