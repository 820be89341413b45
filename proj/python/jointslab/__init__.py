"""Exact arithmetic for joints of line collections over prime fields and Q."""

import json as _json

from . import _core
from ._core import (
    LineCollection,
    axis_with_planar_pencil,
    dstar,
    generic_star,
    grid,
    is_generic,
    joint_count,
    plane_with_verticals,
    random_lines,
    theorem1_bound,
    theorem2_bound,
)

Error = _core.Error


class GenericityError(Exception):
    """A concurrent spanning-failure among n lines; carries the witness."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def _translate(exc):
    try:
        payload = _json.loads(str(exc))
        return GenericityError(payload["message"], payload["witness"])
    except (ValueError, KeyError):
        return GenericityError(str(exc), None)


def _coords(point):
    return [str(c) for c in point]


def joints(collection, cap=24):
    """All joints with exact multiplicities, as a dict with a summary."""
    return _json.loads(_core.joints_json(collection, cap))


def multiplicity(collection, point, cap=24):
    """N(x): ordered n-tuples of collection lines forming a joint at x."""
    return _core.multiplicity(collection, _coords(point), cap)


def genericity_witness(collection):
    """None, or a dict naming n concurrent lines whose directions collapse."""
    text = _core.genericity_witness_json(collection)
    return None if text is None else _json.loads(text)


def peel(collection):
    """Greedy partition of the joint set into per-line parts."""
    return _json.loads(_core.peel_json(collection))


def choose(collection, lam, require_generic=True, cap=24):
    """Greedy line choice for joints of multiplicity >= lam."""
    try:
        return _json.loads(_core.choose_json(collection, lam, require_generic, cap))
    except _core.GenericityError as e:
        raise _translate(e) from None


def sample_survival(collection, lam, trials, seed, cap=24):
    """Seeded subsampling experiment; returns (report dict, csv text)."""
    report, csv = _core.sample_survival_json(collection, lam, trials, seed, cap)
    return _json.loads(report), csv


def slope_partition(p, k):
    """The slope-block choice scheme on plane_with_verticals(p)."""
    return _json.loads(_core.slope_partition_json(p, k))


def minimal_vanishing_polynomial(field, points):
    """(degree, polynomial dict) for the smallest nonzero vanisher."""
    degree, poly = _core.minimal_vanishing_polynomial_json(
        field, [_coords(p) for p in points])
    return degree, _json.loads(poly)


def vanishing_polynomial(field, points, degree):
    """A nonzero degree-<= vanisher as a dict, or None."""
    text = _core.vanishing_polynomial_json(field, [_coords(p) for p in points], degree)
    return None if text is None else _json.loads(text)


def gradient(field, poly):
    """Formal gradient components of a polynomial dict or JSON string."""
    if not isinstance(poly, str):
        poly = _json.dumps(poly)
    return [_json.loads(t) for t in _core.gradient_json(field, poly)]


def evaluate(field, poly, point):
    """Exact evaluation; returns the value as a string."""
    if not isinstance(poly, str):
        poly = _json.dumps(poly)
    return _core.evaluate(field, poly, _coords(point))


__all__ = [
    "Error",
    "GenericityError",
    "LineCollection",
    "axis_with_planar_pencil",
    "choose",
    "dstar",
    "evaluate",
    "generic_star",
    "genericity_witness",
    "gradient",
    "grid",
    "is_generic",
    "joint_count",
    "joints",
    "minimal_vanishing_polynomial",
    "multiplicity",
    "peel",
    "plane_with_verticals",
    "random_lines",
    "sample_survival",
    "slope_partition",
    "theorem1_bound",
    "theorem2_bound",
    "vanishing_polynomial",
]
