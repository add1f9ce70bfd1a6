"""Reaction networks to sign-abstracted transition graphs."""

import json
from fractions import Fraction

from ._core import GuardError, InputError, Model, available_backends
from ._core import density as _density
from ._core import load, parse

__all__ = [
    "GuardError",
    "InputError",
    "Model",
    "available_backends",
    "classic_stg",
    "density",
    "load",
    "parse",
    "stg",
]


def stg(model, extended=False, force=False):
    """Full FOBNN transition graph as a dict."""
    return json.loads(model.stg_json(extended=extended, force=force))


def classic_stg(model, force=False):
    return json.loads(model.classic_stg_json(force=force))


def density(graph):
    """Edges over nodes squared, as a Fraction."""
    num, den = _density(json.dumps(graph))
    return Fraction(num, den)
