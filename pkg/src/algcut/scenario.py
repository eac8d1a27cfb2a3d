"""JSON scenario files.

Two modes::

    {"mode": "projective_space", "weights": [0, 1, 2], "level_q": "1/2",
     "class_spec": "h"}

    {"mode": "fixed_point_data", "level_q": "1/2",
     "fixed_points": [{"label": "p", "tangent_weights": [-1, 1],
                       "restriction_coeffs": ["0", "-1"]}]}

In fixed-point mode the listed points are the fixed points above the level.
``restriction_coeffs[k]`` is the coefficient of t^k.  Rationals are integers
or strings ``"p/q"``; floats are rejected everywhere.
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .arith import Poly, parse_rational
from .cut import FixedPointDatum
from .localization import EquivariantClass
from .weights import AmbientWeights

PROJECTIVE_SPACE = "projective_space"
FIXED_POINT_DATA = "fixed_point_data"


class ScenarioError(ValueError):
    """Malformed or inconsistent scenario."""


@dataclass(frozen=True)
class Scenario:
    mode: str
    level_q: Fraction
    weights: Optional[AmbientWeights] = None
    fixed_points: tuple[FixedPointDatum, ...] = ()
    class_spec: Optional[str] = None
    name: str = ""
    options: dict = field(default_factory=dict)

    def equivariant_class(self) -> EquivariantClass:
        if self.mode != PROJECTIVE_SPACE:
            raise ScenarioError("class_spec is only meaningful for projective_space scenarios")
        if self.class_spec is None:
            raise ScenarioError("scenario has no class_spec")
        return parse_class(self.class_spec, self.weights)


def _rational(x: Any, what: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ScenarioError(f"{what}: floating point or boolean value {x!r} is not allowed")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return parse_rational(x)
        except ValueError as exc:
            raise ScenarioError(f"{what}: {exc}") from None
    raise ScenarioError(f"{what}: expected an integer or 'p/q' string, got {x!r}")


def _int_list(x: Any, what: str) -> list[int]:
    if not isinstance(x, list) or not x:
        raise ScenarioError(f"{what}: expected a nonempty list of integers")
    for a in x:
        if isinstance(a, bool) or not isinstance(a, int):
            raise ScenarioError(f"{what}: {a!r} is not an integer")
    return list(x)


def scenario_from_dict(d: dict, name: str = "") -> Scenario:
    if not isinstance(d, dict):
        raise ScenarioError("scenario must be a JSON object")
    mode = str(d.get("mode", "")).lower()
    if mode not in (PROJECTIVE_SPACE, FIXED_POINT_DATA):
        raise ScenarioError(f"mode must be {PROJECTIVE_SPACE!r} or {FIXED_POINT_DATA!r}, got {d.get('mode')!r}")
    if "level_q" not in d:
        raise ScenarioError("missing required field 'level_q'")
    q = _rational(d["level_q"], "level_q")
    options = d.get("options", {})
    if not isinstance(options, dict):
        raise ScenarioError("options must be an object")
    name = d.get("name", name)

    if mode == PROJECTIVE_SPACE:
        if "fixed_points" in d:
            raise ScenarioError("projective_space scenarios take 'weights', not 'fixed_points'")
        if "weights" not in d:
            raise ScenarioError("missing required field 'weights'")
        w = AmbientWeights(_int_list(d["weights"], "weights"))
        spec = d.get("class_spec")
        if spec is not None:
            if not isinstance(spec, str):
                raise ScenarioError("class_spec must be a string")
            parse_class(spec, w)  # validate early
        return Scenario(mode, q, weights=w, class_spec=spec, name=name, options=options)

    if "weights" in d or "class_spec" in d:
        raise ScenarioError("fixed_point_data scenarios take 'fixed_points' only")
    fps = d.get("fixed_points")
    if not isinstance(fps, list):
        raise ScenarioError("missing required list 'fixed_points'")
    data = []
    for k, fp in enumerate(fps):
        if not isinstance(fp, dict):
            raise ScenarioError(f"fixed_points[{k}] must be an object")
        label = str(fp.get("label", f"p{k + 1}"))
        tw = _int_list(fp.get("tangent_weights"), f"fixed_points[{k}].tangent_weights")
        coeffs = fp.get("restriction_coeffs", [1])
        if not isinstance(coeffs, list):
            raise ScenarioError(f"fixed_points[{k}].restriction_coeffs must be a list")
        r = Poly([_rational(c, f"fixed_points[{k}].restriction_coeffs") for c in coeffs])
        try:
            data.append(FixedPointDatum(label, tuple(tw), r))
        except ValueError as exc:
            raise ScenarioError(str(exc)) from None
    dims = {p.dim for p in data}
    if len(dims) > 1:
        raise ScenarioError(f"fixed points disagree on dimension: {sorted(dims)}")
    return Scenario(mode, q, fixed_points=tuple(data), name=name, options=options)


def load_scenario(path: Union[str, Path]) -> Scenario:
    path = Path(path)
    try:
        d = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return scenario_from_dict(d, name=path.stem)


# -- class_spec parsing ---------------------------------------------------

_BINOPS = {ast.Add: "__add__", ast.Sub: "__sub__", ast.Mult: "__mul__"}


def parse_class(text: str, weights) -> EquivariantClass:
    """Parse a polynomial in h and t, e.g. ``"h^2 - 1/2*h*t + 3*t^2"``."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError:
        raise ScenarioError(f"class_spec {text!r} is not a polynomial expression") from None
    symbols = {"h": EquivariantClass.h(weights), "t": EquivariantClass.t(weights)}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id in symbols:
            return symbols[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if type(node.op) in _BINOPS:
                if isinstance(left, Fraction) and isinstance(right, Fraction):
                    return getattr(left, _BINOPS[type(node.op)])(right)
                if isinstance(left, Fraction):
                    left = EquivariantClass.constant(weights, left)
                return getattr(left, _BINOPS[type(node.op)])(right)
            if isinstance(node.op, ast.Div):
                if not isinstance(right, Fraction) or right == 0:
                    raise ScenarioError("class_spec may only divide by nonzero rational constants")
                return left / right if isinstance(left, Fraction) else left * (1 / right)
            if isinstance(node.op, ast.Pow):
                if not isinstance(right, Fraction) or right.denominator != 1 or right < 0:
                    raise ScenarioError("class_spec exponents must be nonnegative integers")
                return left ** int(right)
        raise ScenarioError(f"unsupported element in class_spec {text!r}: {ast.dump(node)[:40]}")

    v = ev(tree)
    if isinstance(v, Fraction):
        v = EquivariantClass.constant(weights, v)
    return v
