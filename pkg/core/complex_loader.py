"""
complex_loader.py
Loads simplicial complexes and fans from JSON files or the builtin registry,
and writes reports as deterministic JSON.
"""

import json
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from loguru import logger

from core.exactla import Vector, parse_decimal
from core.exceptions import ValidationError
from core.fan import SimplicialFan, make_fan
from core.scomplex import SimplicialComplex, hemi_icosahedron, make_complex, skeleton

BUILTIN_PREFIX = "builtin:"


def _parse_skeleton(arg: str) -> SimplicialComplex:
    try:
        n, r = (int(part) for part in arg.split(","))
    except ValueError:
        raise ValidationError(f"Builtin skeleton needs 'skeleton:n,r', got {arg!r}", arg)
    return skeleton(n, r)


BUILTINS = {
    "hemi_icosahedron": lambda arg: hemi_icosahedron(),
    "skeleton": _parse_skeleton,
}


def _number(value) -> Any:
    """JSON numbers and strings become exact rationals; floats go through their decimal text."""
    if isinstance(value, bool):
        raise ValidationError(f"Expected a number, got {value!r}", value)
    if isinstance(value, (int, float, str)):
        return parse_decimal(str(value))
    raise ValidationError(f"Expected a number, got {value!r}", value)


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{what} must be an integer, got {value!r}", value)
    return value


@dataclass(frozen=True)
class FanInput:
    fan: SimplicialFan
    # optional polytope whose normal fan the fan is, for the support vector
    points: Optional[Tuple[Vector, ...]] = None
    lineality: Optional[int] = None


class ComplexLoader:
    """
    Resolves `builtin:<name>[:args]` references and reads complex, Bier sphere
    and fan JSON files.
    """

    def read_json(self, file_path: str) -> Dict:
        if not os.path.exists(file_path):
            logger.error(f"File not found: {file_path}")
            raise FileNotFoundError(f"File not found: {file_path}")
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Malformed JSON in {file_path}: {e}", file_path) from e
        if not isinstance(data, dict):
            raise ValidationError(f"{file_path}: top level must be a JSON object", file_path)
        return data

    def is_fan_file(self, file_path: str) -> bool:
        return not file_path.startswith(BUILTIN_PREFIX) and "rays" in self.read_json(file_path)

    def load_complex(self, reference: str) -> SimplicialComplex:
        if reference.startswith(BUILTIN_PREFIX):
            name, _, arg = reference[len(BUILTIN_PREFIX):].partition(":")
            if name not in BUILTINS:
                raise ValidationError(f"Unknown builtin complex {name!r}; known: {sorted(BUILTINS)}", name)
            K = BUILTINS[name](arg)
            logger.info(f"Using builtin complex {reference}: {len(K.facets)} facets on n={K.n}")
            return K
        return self.complex_from_dict(self.read_json(reference))

    def complex_from_dict(self, data: Dict) -> SimplicialComplex:
        if "n" not in data or "facets" not in data:
            raise ValidationError("Complex JSON needs 'n' and 'facets'", sorted(data))
        n = _int(data["n"], "n")
        facets = data["facets"]
        if not isinstance(facets, list) or any(not isinstance(f, list) for f in facets):
            raise ValidationError("'facets' must be a list of lists", facets)
        return make_complex(n, [[_int(v, "face element") for v in f] for f in facets])

    def load_fan(self, file_path: str) -> FanInput:
        """
        Fan JSON: {"n": 2, "rays": {"1": [1, 0], "-1": [-1, 0], ...},
        "cones": [[1, 2], ...], "points": [[...], ...], "lineality": 2}.
        """
        data = self.read_json(file_path)
        for key in ("n", "rays", "cones"):
            if key not in data:
                raise ValidationError(f"Fan JSON needs {key!r}", key)
        n = _int(data["n"], "n")
        try:
            rays = {int(label): [_number(c) for c in vec] for label, vec in data["rays"].items()}
        except (AttributeError, ValueError) as e:
            raise ValidationError(f"Fan rays must map integer labels to vectors: {e}", data["rays"]) from e
        for label in rays:
            if label == 0 or abs(label) > n:
                raise ValidationError(f"Ray label {label} out of range for n={n}", label)
        cones = [[_int(v, "cone label") for v in cone] for cone in data["cones"]]
        fan = make_fan(n, rays, cones)
        fan.check_simplicial()

        points = None
        if "points" in data:
            points = tuple(tuple(_number(c) for c in p) for p in data["points"])
        lineality = _int(data["lineality"], "lineality") if "lineality" in data else None
        logger.info(f"Loaded fan from {file_path}: {len(fan.rays)} rays, {len(fan.maxcones)} cones")
        return FanInput(fan=fan, points=points, lineality=lineality)


def dumps(data: Any) -> str:
    """Deterministic JSON text: fixed key order as built, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_json(file_path: str, data: Any) -> None:
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(dumps(data))
    logger.success(f"Wrote {file_path}")
