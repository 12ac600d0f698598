"""Exact weight enumerators, transforms, bounds, LPs and AME tools for
quantum systems with mixed local dimensions.

Rational results are returned as ``fractions.Fraction``. Profiles are
dictionaries keyed by the sub-multiset written as a sorted tuple of local
dimensions, e.g. ``(2, 3, 3)``; the empty multiset is ``()``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _core

__all__ = [
    "Profile",
    "ame_construct",
    "ame_scan",
    "ame_verify",
    "bounds",
    "bundled_state",
    "check_bounds",
    "check_code",
    "closed_form",
    "emit_lp",
    "enumerate",
    "kernel",
    "lp",
    "reproduce",
    "reproduce_targets",
    "scott",
    "scott_homogeneous_max_n",
    "set_max_threads",
    "shadow_empty",
    "transform",
]

Multiset = tuple


def _multiset_key(obj: Mapping[str, int]) -> Multiset:
    dims: list[int] = []
    for dim, count in obj.items():
        dims.extend([int(dim)] * int(count))
    return tuple(sorted(dims))


def _multiset_json(key: Iterable[int]) -> str:
    counts: dict[str, int] = {}
    for dim in sorted(key):
        counts[str(dim)] = counts.get(str(dim), 0) + 1
    return json.dumps(counts)


@dataclass(frozen=True)
class Profile:
    """One enumerator family over the sub-multisets of ``dims``."""

    family: str
    dims: tuple[int, ...]
    values: dict[Multiset, Fraction] = field(default_factory=dict)

    def __getitem__(self, key: Iterable[int]) -> Fraction:
        return self.values[tuple(sorted(key))]

    @classmethod
    def from_json(cls, text: str) -> "Profile":
        doc = json.loads(text)
        values = {_multiset_key(v["multiset"]): Fraction(v["value"]) for v in doc["values"]}
        return cls(doc["family"], tuple(doc["dims"]), values)

    def to_json(self) -> str:
        values = [
            {"multiset": json.loads(_multiset_json(k)), "value": str(v)} for k, v in self.values.items()
        ]
        return json.dumps({"family": self.family, "dims": list(self.dims), "values": values})


def _state_text(state: str | Mapping) -> str:
    return state if isinstance(state, str) else json.dumps(state)


def set_max_threads(threads: int) -> None:
    """Cap worker threads; 0 restores the hardware default."""
    _core.set_max_threads(threads)


def bundled_state(name: str) -> dict:
    """A bundled example state, e.g. ``bundled_state("ame234")``."""
    return json.loads(_core.bundled_file(f"states/{name}.json"))


def enumerate(state: str | Mapping, family: str = "A") -> Profile | dict:
    """Brute-force profile of a pure state given as state JSON.

    ``family`` is one of A, B, A', B', S, or ``calligraphic`` which returns
    per-subset values ``{subset: (A', B')}`` with zero-based site tuples.
    """
    text = _core.enumerate(_state_text(state), family)
    if family != "calligraphic":
        return Profile.from_json(text)
    doc = json.loads(text)
    return {
        tuple(site - 1 for site in v["subset"]): (Fraction(v["A'"]), Fraction(v["B'"])) for v in doc["values"]
    }


def transform(profile: Profile, target: str) -> Profile:
    """Exact transform between families (A to B, S, A'; A' to A, S)."""
    return Profile.from_json(_core.transform(profile.to_json(), target))


def kernel(dims: Sequence[int], kind: str) -> list[list[Fraction]]:
    """Dense transform kernel in lattice order; kind is B, S, A', A or S'."""
    rows = _core.kernel_csv(list(dims), kind).strip().splitlines()
    return [[Fraction(x) for x in row.split(",")] for row in rows]


def bounds(dims: Sequence[int], distance: int) -> dict[str, int]:
    """Largest K allowed by the Hamming, Singleton and pure Singleton bounds."""
    return {k: int(v) for k, v in json.loads(_core.bounds(list(dims), str(distance))).items()}


def _verdicts(text: str) -> list[dict]:
    out = []
    for v in json.loads(text):
        v["lhs"] = Fraction(v["lhs"])
        v["rhs"] = Fraction(v["rhs"])
        out.append(v)
    return out


def check_bounds(dims: Sequence[int], k: int, distance: int, pure: bool = False) -> list[dict]:
    """Verdicts of the closed-form bounds for a code ((dims, K, D))."""
    return _verdicts(_core.check_bounds(list(dims), str(k), str(distance), pure))


def scott(dims: Sequence[int]) -> list[dict]:
    """Scott verdicts for an AME state on ``dims``; any failure excludes it."""
    return _verdicts(_core.scott(list(dims)))


def scott_homogeneous_max_n(d: int, even: bool) -> int:
    return _core.scott_homogeneous_max_n(d, even)


def lp(
    dims: Sequence[int],
    k: int,
    distance: int,
    pure: bool = False,
    maximize: Iterable[int] | None = None,
) -> dict:
    """Exact LP feasibility (or maximisation of A_v) for a code.

    Feasible results carry ``point`` mapping multisets to A values; infeasible
    ones carry a verified Farkas ``witness``.
    """
    target = "" if maximize is None else _multiset_json(maximize)
    doc = json.loads(_core.lp(list(dims), str(k), str(distance), pure, target))
    if "point" in doc:
        doc["point"] = {_multiset_key(p["multiset"]): Fraction(p["A"]) for p in doc["point"]}
    if "objective" in doc:
        doc["objective"] = Fraction(doc["objective"])
    return doc


def emit_lp(dims: Sequence[int], k: int, distance: int, pure: bool = False) -> str:
    """The rational constraint system as text."""
    return _core.emit_lp(list(dims), str(k), str(distance), pure)


def closed_form(dims: Sequence[int], family: str) -> Profile:
    """Profile an AME state on ``dims`` would have (A, B, A' or S)."""
    return Profile.from_json(_core.closed_form(list(dims), family))


def shadow_empty(dims: Sequence[int]) -> Fraction:
    """Shadow coefficient on the empty multiset for an AME state on ``dims``."""
    return Fraction(_core.shadow_empty(list(dims)))


def ame_scan(d_small: int, d_large: int, max_parties: int) -> list[dict]:
    """Heatmap cells; ``witness`` is the multiset with a negative shadow value."""
    rows = _core.ame_scan_csv(d_small, d_large, max_parties).strip().splitlines()
    header = rows[0].split(",")
    cells = []
    for row in rows[1:]:
        cell = dict(zip(header, row.split(",", len(header) - 1)))
        cell["n_small"] = int(cell["n_small"])
        cell["n_large"] = int(cell["n_large"])
        cells.append(cell)
    return cells


def ame_construct(d1: int, d2: int, d3: int) -> tuple[dict, dict] | None:
    """Tripartite AME state and its grid, or None if the search finds none."""
    found = _core.ame_construct(d1, d2, d3)
    if found is None:
        return None
    return json.loads(found[0]), json.loads(found[1])


def ame_verify(state: str | Mapping, tolerance: float = 1e-9) -> dict:
    """AME check; ``failing_subsets`` lists zero-based site tuples."""
    report = json.loads(_core.ame_verify(_state_text(state), tolerance))
    report["failing_subsets"] = [tuple(site - 1 for site in s) for s in report["failing_subsets"]]
    return report


def check_code(dims: Sequence[int], projector: np.ndarray, distance: int) -> dict:
    """Code and purity conditions for a projector, via its A and B profiles."""
    matrix = np.asarray(projector, dtype=np.complex128)
    return json.loads(_core.check_code(list(dims), matrix, str(distance)))


def reproduce_targets() -> list[str]:
    return _core.reproduce_targets()


def reproduce(target: str) -> tuple[bool, list[str], list[str]]:
    """Regenerate a bundled result: (matched, report lines, mismatches)."""
    return _core.reproduce(target)
