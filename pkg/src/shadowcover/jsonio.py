"""JSON interchange for polytopes, direction sets and bundles.

Rationals travel as exact strings "p" or "p/q" in lowest terms; the reader
rejects anything else (floats in particular).  Integer-valued fields such as
direction coordinates may also be plain JSON integers.  Writing is canonical
(sorted keys, fixed indentation), so identical objects serialise to
identical bytes.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .containment import FarkasCertificate
from .counterexample import CounterexampleBundle
from .linalg import Vector, vector
from .polytope import Polytope, hull_from_vertices
from .reliability import DirectionSet, SimplicialFamily, direction_set

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class FormatError(ValueError):
    """Malformed interchange document."""


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        return Fraction(value)
    raise FormatError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_point(entry: Any, dim: int) -> Vector:
    if not isinstance(entry, list) or len(entry) != dim:
        raise FormatError(f"expected a list of {dim} rationals, got {entry!r}")
    return vector([parse_rational(x) for x in entry])


def polytope_to_doc(p: Polytope) -> dict:
    return {
        "dim": p.dim,
        "vertices": [[format_rational(x) for x in v] for v in p.vertices],
    }


def polytope_from_doc(doc: Any) -> Polytope:
    if not isinstance(doc, dict):
        raise FormatError("polytope document must be an object")
    dim = doc.get("dim")
    verts = doc.get("vertices")
    if not isinstance(dim, int) or dim < 1:
        raise FormatError("polytope 'dim' must be a positive integer")
    if not isinstance(verts, list) or not verts:
        raise FormatError("polytope 'vertices' must be a nonempty list")
    points = [_parse_point(v, dim) for v in verts]
    return hull_from_vertices(points)


def directions_to_doc(a: DirectionSet) -> dict:
    return {
        "dim": a.dim,
        "directions": [[format_rational(x) for x in u] for u in a.directions],
    }


def directions_from_doc(doc: Any) -> DirectionSet:
    if not isinstance(doc, dict):
        raise FormatError("directions document must be an object")
    dim = doc.get("dim")
    dirs = doc.get("directions")
    if not isinstance(dim, int) or dim < 1:
        raise FormatError("directions 'dim' must be a positive integer")
    if not isinstance(dirs, list) or not dirs:
        raise FormatError("'directions' must be a nonempty list")
    try:
        return direction_set(dim, [_parse_point(u, dim) for u in dirs])
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def bundle_to_doc(b: CounterexampleBundle) -> dict:
    return {
        "kind": "counterexample-bundle",
        "d": b.d,
        "cover": polytope_to_doc(b.cover),
        "body": polytope_to_doc(b.body),
        "family": {
            "members": list(b.family.members),
            "coefficients": [format_rational(c) for c in b.family.coefficients],
        },
        "alpha": format_rational(b.alpha),
        "alpha_min_observed": format_rational(b.alpha_min_observed),
        "margin": format_rational(b.margin),
        "noncontainment": [
            [i, format_rational(lam)] for i, lam in b.noncontainment.multipliers
        ],
        "search_seed": b.search_seed,
        "search_trials": b.search_trials,
        "entry_bound": b.entry_bound,
        "verify_seed": b.verify_seed,
        "shadow_trials": b.shadow_trials,
        "shadow_failures": b.shadow_failures,
    }


def bundle_from_doc(doc: Any) -> CounterexampleBundle:
    if not isinstance(doc, dict) or doc.get("kind") != "counterexample-bundle":
        raise FormatError("not a counterexample bundle document")
    try:
        family = SimplicialFamily(
            tuple(int(i) for i in doc["family"]["members"]),
            vector([parse_rational(c) for c in doc["family"]["coefficients"]]),
        )
        cert = FarkasCertificate(
            tuple((int(i), parse_rational(lam)) for i, lam in doc["noncontainment"])
        )
        return CounterexampleBundle(
            cover=polytope_from_doc(doc["cover"]),
            d=int(doc["d"]),
            family=family,
            body=polytope_from_doc(doc["body"]),
            alpha=parse_rational(doc["alpha"]),
            alpha_min_observed=parse_rational(doc["alpha_min_observed"]),
            margin=parse_rational(doc["margin"]),
            noncontainment=cert,
            search_seed=int(doc["search_seed"]),
            search_trials=int(doc["search_trials"]),
            entry_bound=int(doc["entry_bound"]),
            verify_seed=int(doc["verify_seed"]),
            shadow_trials=int(doc["shadow_trials"]),
            shadow_failures=int(doc["shadow_failures"]),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed bundle document: {exc}") from None


def dumps_canonical(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_json(path: str | Path) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON in {path}: {exc}") from None


def write_json(path: str | Path, doc: Any) -> None:
    Path(path).write_text(dumps_canonical(doc))


def load_body(path: str | Path) -> Polytope | DirectionSet:
    """Load either a polytope or a direction-set document."""
    doc = read_json(path)
    if isinstance(doc, dict) and "directions" in doc:
        return directions_from_doc(doc)
    return polytope_from_doc(doc)
