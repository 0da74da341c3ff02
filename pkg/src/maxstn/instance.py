"""Instance model: neighborhoods as vertex sets, validation, normalization, JSON I/O.

File format::

    {"dim": 2, "regions": [{"label": "X1", "vertices": [[0.0, 0.0], [1.0, 0.0]]}, ...]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .geometry import DiameterPair, bichromatic_diameter


class InstanceError(ValueError):
    """Malformed or invalid instance (parse or validation failure)."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True, eq=False)
class Neighborhood:
    id: int
    label: str
    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim == 1:
            v = v.reshape(1, -1) if v.size else v.reshape(0, 0)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Neighborhood):
            return NotImplemented
        return (
            self.id == other.id
            and self.label == other.label
            and self.vertices.shape == other.vertices.shape
            and np.array_equal(self.vertices, other.vertices, equal_nan=True)
        )


@dataclass(frozen=True, eq=False)
class Instance:
    """Ordered neighborhoods in R^dim.  Immutable; see :func:`validate`."""

    dim: int
    regions: tuple[Neighborhood, ...]

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(self.regions))

    @classmethod
    def from_points(cls, regions: Iterable[Sequence[Sequence[float]]],
                    labels: Sequence[str] | None = None) -> "Instance":
        regions = [np.asarray(r, dtype=float) for r in regions]
        if labels is None:
            labels = [f"X{i + 1}" for i in range(len(regions))]
        dim = regions[0].shape[-1] if regions and regions[0].ndim == 2 else 0
        return cls(dim, tuple(Neighborhood(i, str(lab), r)
                              for i, (lab, r) in enumerate(zip(labels, regions))))

    @property
    def n(self) -> int:
        return len(self.regions)

    @property
    def N(self) -> int:
        return sum(len(r) for r in self.regions)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.dim == other.dim and self.regions == other.regions

    def vertex(self, region: int, index: int) -> np.ndarray:
        return self.regions[region].vertices[index]


def validate(inst: Instance) -> list[str]:
    """Return the list of invariant violations (empty when valid)."""
    out = []
    if inst.dim < 2:
        out.append(f"dim {inst.dim} < 2")
    if inst.n < 2:
        out.append("n < 2")
    for i, r in enumerate(inst.regions):
        v = r.vertices
        if v.ndim != 2 or len(v) == 0:
            out.append(f"region {i} ({r.label}) has no vertices")
            continue
        if v.shape[1] != inst.dim:
            out.append(f"region {i} ({r.label}) has dimension {v.shape[1]}, expected {inst.dim}")
            continue
        bad = np.argwhere(~np.isfinite(v))
        for k, c in bad:
            out.append(f"non-finite coordinate at region {i} ({r.label}), vertex {k}, axis {c}")
    return out


@dataclass(frozen=True)
class NormalizedView:
    """Original-unit instance seen through its bichromatic diameter pair.

    Lengths in the analysis are divided by ``scale``; coordinates are never
    transformed.
    """

    base: Instance
    scale: float
    o: np.ndarray = field(repr=False)
    diam_pair: DiameterPair
    a: np.ndarray = field(repr=False)
    b: np.ndarray = field(repr=False)

    @property
    def degenerate(self) -> bool:
        return self.scale == 0.0


def normalize(inst: Instance) -> NormalizedView:
    pair = bichromatic_diameter(inst)
    a = inst.vertex(pair.region_a, pair.vertex_a)
    b = inst.vertex(pair.region_b, pair.vertex_b)
    o = (a + b) / 2.0
    for arr in (a, b, o):
        arr.setflags(write=False)
    return NormalizedView(inst, pair.length, o, pair, a, b)


# -- JSON I/O -----------------------------------------------------------------

def instance_to_dict(inst: Instance) -> dict:
    return {
        "dim": inst.dim,
        "regions": [
            {"label": r.label, "vertices": [[float(c) for c in v] for v in r.vertices]}
            for r in inst.regions
        ],
    }


def instance_from_dict(data) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("top-level JSON value must be an object")
    if "dim" not in data or "regions" not in data:
        raise InstanceError("instance object needs 'dim' and 'regions'")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise InstanceError(f"'dim' must be an integer, got {dim!r}")
    if not isinstance(data["regions"], list):
        raise InstanceError("'regions' must be a list")
    regions = []
    for i, r in enumerate(data["regions"]):
        if not isinstance(r, dict) or "vertices" not in r:
            raise InstanceError(f"region {i}: expected object with 'vertices'")
        verts = r["vertices"]
        if not isinstance(verts, list) or not verts:
            raise InstanceError(f"region {i}: 'vertices' must be a non-empty list")
        lengths = {len(v) if isinstance(v, list) else -1 for v in verts}
        if len(lengths) != 1 or -1 in lengths:
            raise InstanceError(f"region {i}: vertices of mixed dimension")
        try:
            arr = np.array(verts, dtype=float)
        except (TypeError, ValueError) as exc:
            raise InstanceError(f"region {i}: non-numeric coordinate ({exc})") from None
        regions.append(Neighborhood(i, str(r.get("label", f"X{i + 1}")), arr))
    return Instance(dim, tuple(regions))


def dumps_instance(inst: Instance) -> str:
    # json writes floats with repr(), the shortest string that round-trips
    # bit-exactly
    return json.dumps(instance_to_dict(inst), indent=1) + "\n"


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    inst = instance_from_dict(data)
    problems = validate(inst)
    if problems:
        raise InstanceError("invalid instance: " + "; ".join(problems), problems)
    return inst


def read_instance(path) -> Instance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")

