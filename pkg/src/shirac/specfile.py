"""JSON spec documents describing an interference.

Two layouts are accepted::

    {"version": "shirac/1",
     "matrices": {"amplitudes": [[["2", "4", "5"], ["3", "1", "8"]], ...],
                  "shift_steps": [["5", "3"], ...],
                  "degrees": [[3, 3], ...]}}

    {"version": "shirac/1",
     "summands": [{"offset": "1",
                   "factors": [{"shift_step": "1", "degree": 3,
                                "amplitudes": ["4", "5", "6"]}]}]}

Numerals are JSON integers or strings such as ``"3/2"`` / ``"0.25"``; JSON
floats are rejected so nothing passes through binary floating point.
Optional keys: ``window`` (default analysis window) and ``expect`` (values
checked by ``shirac verify``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
import json
from typing import Any, Optional

from ._rational import fmt, rational
from .errors import DimensionMismatch, SpecError
from .impulse import (INF, ImpulseInterference, ImpulseSpectralDensity,
                      ImpulseSpectralTrain, offset)
from .matrix import ConstructionMatrices, build_interference

VERSION = "shirac/1"


@dataclass
class SpecDocument:
    interference: ImpulseInterference
    version: str = VERSION
    matrices: Optional[ConstructionMatrices] = None
    window: Optional[tuple] = None
    expect: dict = field(default_factory=dict)
    name: str = "<spec>"


def _reject_float(text):
    raise SpecError(f"binary float {text} not allowed; write it as a string, e.g. \"{text}\"")


def _num(value, where):
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        try:
            return rational(value)
        except ValueError as exc:
            raise SpecError(f"{where}: {exc}") from None
    raise SpecError(f"{where}: expected an integer or numeral string, got {value!r}")


def _degree(value, where):
    if value in ("inf", "infinity", "∞"):
        return INF
    if isinstance(value, str) and value.isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SpecError(f"{where}: degree must be a positive integer or \"inf\", got {value!r}")
    return value


def _train(desc, where):
    if not isinstance(desc, dict):
        raise SpecError(f"{where}: train descriptor must be an object")
    unknown = set(desc) - {"shift_step", "degree", "amplitudes", "cycle"}
    if unknown:
        raise SpecError(f"{where}: unknown keys {sorted(unknown)}")
    if "shift_step" not in desc:
        raise SpecError(f"{where}: missing shift_step")
    step = _num(desc["shift_step"], f"{where}.shift_step")
    amps = desc.get("amplitudes", desc.get("cycle"))
    if not isinstance(amps, list) or not amps:
        raise SpecError(f"{where}: amplitudes must be a non-empty list")
    amps = tuple(_num(a, f"{where}.amplitudes[{i}]") for i, a in enumerate(amps))
    degree = _degree(desc.get("degree", len(amps)), f"{where}.degree")
    try:
        return ImpulseSpectralTrain(step, degree, amps)
    except ValueError as exc:
        raise SpecError(f"{where}: {exc}") from None


def _summands(items):
    if not isinstance(items, list):
        raise SpecError("summands must be a list")
    result = ImpulseInterference()
    for k, item in enumerate(items):
        where = f"summands[{k}]"
        if not isinstance(item, dict) or not isinstance(item.get("factors"), list) \
                or not item["factors"]:
            raise SpecError(f"{where}: needs a non-empty 'factors' list")
        factors = tuple(_train(f, f"{where}.factors[{j}]") for j, f in enumerate(item["factors"]))
        single = ImpulseInterference((ImpulseSpectralDensity(factors),))
        if "offset" in item:
            single = offset(single, _num(item["offset"], f"{where}.offset"))
        result = ImpulseInterference(result.summands + single.summands)
    return result


def _matrices(block):
    if not isinstance(block, dict):
        raise SpecError("matrices must be an object")
    try:
        amps = [[[_num(a, "matrices.amplitudes") for a in cell] for cell in row]
                for row in block["amplitudes"]]
        steps = [[_num(s, "matrices.shift_steps") for s in row] for row in block["shift_steps"]]
        degrees = block.get("degrees")
        if degrees is not None:
            degrees = [[_degree(n, "matrices.degrees") for n in row] for row in degrees]
        return ConstructionMatrices.from_lists(amps, steps, degrees)
    except KeyError as exc:
        raise SpecError(f"matrices: missing {exc}") from None
    except TypeError:
        raise SpecError("matrices: amplitudes/shift_steps/degrees must be nested lists") from None
    except DimensionMismatch as exc:
        raise SpecError(f"matrices: {exc}") from None


def parse_spec(text: str, name="<spec>") -> SpecDocument:
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{name}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpecError(f"{name}: top level must be an object")
    version = data.get("version", VERSION)
    if version != VERSION:
        raise SpecError(f"{name}: unsupported version {version!r} (expected {VERSION!r})")
    has_m, has_s = "matrices" in data, "summands" in data
    if has_m == has_s:
        raise SpecError(f"{name}: give exactly one of 'matrices' or 'summands'")
    matrices = None
    if has_m:
        matrices = _matrices(data["matrices"])
        x = build_interference(matrices)
    else:
        x = _summands(data["summands"])
    window = data.get("window")
    if window is not None:
        if not isinstance(window, list) or len(window) != 2:
            raise SpecError(f"{name}: window must be a two-element list")
        window = (_num(window[0], "window[0]"), _num(window[1], "window[1]"))
    expect = data.get("expect", {})
    if not isinstance(expect, dict):
        raise SpecError(f"{name}: expect must be an object")
    return SpecDocument(x, version, matrices, window, expect, name)


def load_spec(path) -> SpecDocument:
    import sys
    if str(path) == "-":
        return parse_spec(sys.stdin.read(), "<stdin>")
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read(), str(path))


def _train_json(t: ImpulseSpectralTrain):
    return {"shift_step": fmt(t.shift_step),
            "degree": "inf" if not t.is_finite else t.degree,
            "amplitudes": [fmt(a) for a in t.amplitudes]}


def dump_spec(x: ImpulseInterference, window=None) -> str:
    """Serialize an interference in the ``summands`` layout."""
    doc: dict[str, Any] = {"version": VERSION,
                           "summands": [{"factors": [_train_json(t) for t in isd.factors]}
                                        for isd in x.summands]}
    if window is not None:
        doc["window"] = [fmt(window[0]), fmt(window[1])]
    return json.dumps(doc, indent=2) + "\n"
