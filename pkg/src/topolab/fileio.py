"""JSON formats for spaces, filters, and reports.

Space file: {"n": <int>, "opens": [[<point ints>], ...]}.  The empty set is
[]; member order is irrelevant on input and canonicalized on output (opens
sorted by mask, points ascending), so re-serialization is byte-stable.

Filter literal: {"carrier": "points" | "subsets" | "choice-functions",
"n": <int>, "kernel": [<indices>]} with kernel entries in the carrier's
canonical index space.
"""

from __future__ import annotations

import json
from typing import Any

from .bitsets import mask_of, points_of
from .choice import enumerate_choice_functions
from .filters import (
    Carrier,
    FilterOnCarrier,
    functions_carrier,
    points_carrier,
    subsets_carrier,
)
from .spaces import FiniteSpace, make_space


def space_to_dict(space: FiniteSpace) -> dict:
    return {
        "n": space.n,
        "opens": [list(points_of(o)) for o in space.opens],
    }


def space_from_dict(data: dict) -> FiniteSpace:
    if not isinstance(data, dict) or "n" not in data or "opens" not in data:
        raise ValueError("space file needs 'n' and 'opens'")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("'n' must be a non-negative integer")
    opens = []
    for entry in data["opens"]:
        if not isinstance(entry, list) or any(
            not isinstance(p, int) or not 0 <= p < n for p in entry
        ):
            raise ValueError(f"open set {entry!r} does not fit the ground set")
        opens.append(mask_of(entry))
    return make_space(n, opens)


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save_space(space: FiniteSpace, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_canonical(space_to_dict(space)))


def load_space(path) -> FiniteSpace:
    with open(path) as fh:
        return space_from_dict(json.load(fh))


_CARRIER_KINDS = ("points", "subsets", "choice-functions")


def carrier_for(kind: str, n: int) -> Carrier:
    if kind == "points":
        return points_carrier(n)
    if kind == "subsets":
        return subsets_carrier(n)
    if kind == "choice-functions":
        return functions_carrier(tuple(enumerate_choice_functions(n)))
    raise ValueError(f"unknown carrier kind {kind!r} (expected one of {_CARRIER_KINDS})")


def filter_to_dict(filt: FilterOnCarrier, kind: str, n: int) -> dict:
    if carrier_for(kind, n) != filt.carrier:
        raise ValueError("carrier kind/n does not match the filter's carrier")
    return {"carrier": kind, "n": n, "kernel": sorted(filt.kernel)}


def filter_from_dict(data: dict) -> FilterOnCarrier:
    for key in ("carrier", "n", "kernel"):
        if key not in data:
            raise ValueError(f"filter literal needs {key!r}")
    carrier = carrier_for(data["carrier"], data["n"])
    kernel = frozenset(data["kernel"])
    if any(not isinstance(i, int) for i in data["kernel"]):
        raise ValueError("kernel entries must be integers")
    return FilterOnCarrier(carrier, kernel)
