"""Quiver representations, King stability and toric GIT moduli over exact rationals."""

import json
from fractions import Fraction

from ._quivermod import (
    Quiver,
    QuiverError,
    determinantal,
    framing_from_ranks,
    is_generic,
    parse_quiver,
    preprojective_a,
    theta_pairing,
)
from . import _quivermod as _core

__all__ = [
    "Quiver",
    "QuiverError",
    "determinantal",
    "fan_equivalent",
    "framing_from_ranks",
    "invariant_ring",
    "is_generic",
    "jordan_holder",
    "moduli_atlas",
    "parse_quiver",
    "preprojective_a",
    "s_equivalent",
    "stability",
    "theta_pairing",
]


def _scalars(values):
    return [str(Fraction(v)) for v in values]


def stability(quiver, scalars, theta=None, framed=False):
    """Verdict for the thin representation with one scalar per arrow."""
    return json.loads(_core.thin_stability_json(quiver, _scalars(scalars), theta, framed))


def jordan_holder(quiver, scalars, theta=None):
    return json.loads(_core.jordan_holder_json(quiver, _scalars(scalars), theta))


def s_equivalent(quiver, a, b, theta=None):
    return _core.s_equivalent(quiver, _scalars(a), _scalars(b), theta)


def invariant_ring(quiver):
    return json.loads(_core.invariant_ring_json(quiver))


def moduli_atlas(quiver, theta=None):
    return json.loads(_core.moduli_atlas_json(quiver, theta))


def fan_equivalent(a, b):
    """Unimodular equivalence of two fans given as dicts with rank, rays and cones."""
    return _core.fan_equivalent_json(json.dumps(a), json.dumps(b))
