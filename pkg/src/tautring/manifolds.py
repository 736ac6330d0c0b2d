"""Builders for torus manifolds with isolated fixed points, plus their JSON form.

Built-in data:

* ``sphere(k)``: S^{2k} with the standard maximal torus of SO(2k), fixed at 0
  (standard orientation) and at infinity (opposite orientation).
* ``product(A, B)``: fixed points are pairs, weights concatenate, signs multiply.
* ``projective_space(n)``: CP^n with T^n scaling the last n homogeneous
  coordinates; at the i-th coordinate point the weights are ``x_j - x_i``.
"""

from __future__ import annotations

import json
import re
from typing import Any

import jsonschema

from .errors import ManifoldFormatError, NotMaximal
from .localization import FixedPoint, TorusManifold
from .reps import OrientedRep

MAX_RANK = 6

MANIFOLD_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["name", "rank", "fixed_points", "m0", "m1"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "rank": {"type": "integer", "minimum": 1},
        "fixed_points": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["label", "weights", "sign"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "weights": {
                        "type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}},
                    },
                    "sign": {"enum": [1, -1]},
                },
            },
        },
        "m0": {"type": "integer", "minimum": 0},
        "m1": {"anyOf": [{"type": "integer", "minimum": 0}, {"type": "null"}]},
    },
}


def _check_rank(n: int) -> None:
    if n > MAX_RANK:
        raise ValueError(f"rank {n} exceeds the builder cap of {MAX_RANK}")


def sphere(k: int) -> TorusManifold:
    if k < 1:
        raise ValueError("sphere(k) needs k >= 1")
    _check_rank(k)
    return TorusManifold(
        name=f"S^{2 * k}",
        fixed_points=(
            FixedPoint("0", OrientedRep.standard(k, 1)),
            FixedPoint("inf", OrientedRep.standard(k, -1)),
        ),
        m0=0,
        m1=1,
    )


def product(A: TorusManifold, B: TorusManifold) -> TorusManifold:
    """Product action of T^{n_A} x T^{n_B}; B's torus variables come after A's."""
    if B.m1 is None:
        raise ValueError(f"{B.name} has no m1, so the product's m1 is undefined")
    na, nb = A.n, B.n
    _check_rank(na + nb)
    points = []
    for fa in A.fixed_points:
        for fb in B.fixed_points:
            weights = [tuple(w) + (0,) * nb for w in fa.rep.weights]
            weights += [(0,) * na + tuple(w) for w in fb.rep.weights]
            points.append(
                FixedPoint(f"{fa.label},{fb.label}", OrientedRep(tuple(weights), fa.rep.sign * fb.rep.sign))
            )
    count_b = len(B.fixed_points)
    return TorusManifold(
        name=f"{A.name}x{B.name}",
        fixed_points=tuple(points),
        m0=A.m0 * count_b + B.m0,
        m1=A.m0 * count_b + B.m1,
    )


def projective_space(n: int) -> TorusManifold:
    if n < 1:
        raise ValueError("projective_space(n) needs n >= 1")
    _check_rank(n)

    def x(j: int) -> list[int]:
        # x_0 = 0; x_j is the j-th basis character
        return [int(j == k + 1) for k in range(n)]

    points = []
    for i in range(n + 1):
        weights = [
            tuple(a - b for a, b in zip(x(j), x(i))) for j in range(n + 1) if j != i
        ]
        coords = ":".join("1" if j == i else "0" for j in range(n + 1))
        points.append(FixedPoint(f"[{coords}]", OrientedRep(tuple(weights), 1)))
    return TorusManifold(name=f"CP^{n}", fixed_points=tuple(points), m0=0, m1=1)


def validate_maximal_torus(M: TorusManifold) -> None:
    """Raise :class:`NotMaximal` unless m0 is an isolated fixed point."""
    idx = M.chart.rep.zero_weight()
    if idx is not None:
        raise NotMaximal(M.chart.label, idx)


# named built-ins

_SPHERE = re.compile(r"s(\d+)")


def builtin(spec: str) -> TorusManifold:
    """Resolve names like ``s4``, ``s2xs4``, ``s2xs2xs2``, ``cp2``."""
    name = spec.lower()
    if name.startswith("builtin:"):
        name = name[len("builtin:"):]
    m = re.fullmatch(r"cp(\d+)", name)
    if m:
        return projective_space(int(m.group(1)))
    factors = name.split("x")
    spheres = []
    for f in factors:
        sm = _SPHERE.fullmatch(f)
        if not sm:
            raise ManifoldFormatError(f"unknown builtin manifold {spec!r}")
        dim = int(sm.group(1))
        if dim < 2 or dim % 2:
            raise ManifoldFormatError(f"only even-dimensional spheres have builtins, got s{dim}")
        spheres.append(sphere(dim // 2))
    result = spheres[-1]
    for s in reversed(spheres[:-1]):
        result = product(s, result)
    return result


# JSON


def manifold_to_dict(M: TorusManifold) -> dict:
    return {
        "name": M.name,
        "rank": M.n,
        "fixed_points": [
            {"label": fp.label, "weights": [list(w) for w in fp.rep.weights], "sign": fp.rep.sign}
            for fp in M.fixed_points
        ],
        "m0": M.m0,
        "m1": M.m1,
    }


def manifold_to_json(M: TorusManifold) -> str:
    return json.dumps(manifold_to_dict(M), indent=2, sort_keys=True)


def manifold_from_dict(data: Any) -> TorusManifold:
    try:
        jsonschema.validate(data, MANIFOLD_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ManifoldFormatError(f"manifold JSON invalid at {where}: {exc.message}") from None
    n = data["rank"]
    points = []
    for i, fp in enumerate(data["fixed_points"]):
        weights = fp["weights"]
        if len(weights) != n or any(len(w) != n for w in weights):
            raise ManifoldFormatError(
                f"fixed point {i} ({fp['label']!r}) must have {n} weights of length {n}"
            )
        points.append(FixedPoint(fp["label"], OrientedRep(tuple(map(tuple, weights)), fp["sign"])))
    try:
        return TorusManifold(data["name"], tuple(points), data["m0"], data["m1"])
    except (ValueError, IndexError) as exc:
        raise ManifoldFormatError(str(exc)) from None


def manifold_from_json(text: str) -> TorusManifold:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifoldFormatError(f"not valid JSON: {exc}") from None
    return manifold_from_dict(data)


def load_manifold(spec: str) -> TorusManifold:
    """``builtin:<name>`` or a path to a JSON file."""
    if spec.lower().startswith("builtin:"):
        return builtin(spec)
    try:
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ManifoldFormatError(f"cannot read manifold file {spec!r}: {exc.strerror}") from None
    return manifold_from_json(text)
