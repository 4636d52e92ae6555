"""JSON round trip for (datum, twist) pairs.

Format::

    {"name": "GL2", "lattice_rank": 2,
     "roots": [[1, -1], [-1, 1]], "coroots": [[1, -1], [-1, 1]],
     "simple_indices": [0],
     "sigma": {"linear_part": [[1, 0], [0, 1]], "omega_part": null}}

``sigma`` is optional (split twist); ``omega_part`` is an element in the
``{"translation": ..., "finite_part": ...}`` form.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidDatum
from .frobenius import FrobeniusTwist
from .rootsystem import AffineWeylDatum
from .weyl import element_from_json


def datum_to_json(datum: AffineWeylDatum, twist: FrobeniusTwist | None = None) -> dict:
    out = {
        "name": datum.name,
        "lattice_rank": datum.lattice_rank,
        "roots": [list(a) for a in datum.roots],
        "coroots": [list(c) for c in datum.coroots],
        "simple_indices": list(datum.simple_indices),
    }
    if twist is not None:
        out["sigma"] = twist.to_json()
    return out


def datum_from_json(obj: dict) -> tuple[AffineWeylDatum, FrobeniusTwist]:
    try:
        datum = AffineWeylDatum(
            obj["lattice_rank"],
            obj.get("roots", []),
            obj.get("coroots", []),
            obj.get("simple_indices", []),
            name=obj.get("name", ""),
        )
    except (KeyError, TypeError) as exc:
        raise InvalidDatum(f"malformed datum record: {exc}") from None
    sigma = obj.get("sigma") or {}
    omega = sigma.get("omega_part")
    om = element_from_json(datum, omega) if omega else None
    return datum, FrobeniusTwist(datum, sigma.get("linear_part"), om)


def dumps(datum: AffineWeylDatum, twist: FrobeniusTwist | None = None) -> str:
    return json.dumps(datum_to_json(datum, twist), sort_keys=True)


def load(path) -> tuple[AffineWeylDatum, FrobeniusTwist]:
    with open(Path(path), encoding="utf-8") as fh:
        return datum_from_json(json.load(fh))


def dump(path, datum: AffineWeylDatum, twist: FrobeniusTwist | None = None) -> None:
    Path(path).write_text(dumps(datum, twist) + "\n", encoding="utf-8")
