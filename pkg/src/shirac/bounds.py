"""Heaviside masks, event-bound durations and their window extrema.

The duration of a mask is the summed amplitude of the impulses the mask
covers. Extrema over all placements of a length-``d`` mask are found by
scanning a finite test set of placements (impulse positions plus the window
ends) instead of the continuum, which is exact because the duration only
changes when a mask edge crosses an impulse.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import accumulate
from typing import Sequence

from . import kernels
from ._rational import common_denominator, fmt, rational
from .errors import NegativeAmplitude, UnsupportedMaskKind
from .impulse import ImpulseInterference, check_expandable, flatten


class MaskKind(Enum):
    CC = "cc"   # [a, b]
    CO = "co"   # [a, b)
    OC = "oc"   # (a, b]
    OO = "oo"   # (a, b)

    @property
    def lo_closed(self):
        return self.value[0] == "c"

    @property
    def hi_closed(self):
        return self.value[1] == "c"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"mask kind must be one of cc, co, oc, oo; got {text!r}") from None

    def brackets(self, a, b):
        return f"{'[' if self.lo_closed else '('}{a}, {b}{']' if self.hi_closed else ')'}"


# kind -> whether the test set anchors the mask at its right edge
MAX_KINDS = {MaskKind.CC: False, MaskKind.CO: False, MaskKind.OC: True}
MIN_KINDS = {MaskKind.OO: False, MaskKind.OC: False, MaskKind.CO: True}


@dataclass(frozen=True)
class HeavisideMask:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", rational(self.lo))
        object.__setattr__(self, "hi", rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"mask lower end {fmt(self.lo)} exceeds upper end {fmt(self.hi)}")

    @classmethod
    def of_kind(cls, lo, hi, kind):
        kind = MaskKind.parse(kind)
        return cls(lo, hi, kind.lo_closed, kind.hi_closed)

    @property
    def kind(self):
        return MaskKind(("c" if self.lo_closed else "o") + ("c" if self.hi_closed else "o"))

    def __str__(self):
        return self.kind.brackets(fmt(self.lo), fmt(self.hi))


@dataclass(frozen=True)
class BoundResult:
    value: Fraction
    witness: Fraction

    def __str__(self):
        return f"{fmt(self.value)} @ {fmt(self.witness)}"


def mask_sample(position, mask: HeavisideMask) -> int:
    """Upper/lower Heaviside product at *position*: 1 inside the mask, else 0."""
    position = rational(position)
    above = position >= mask.lo if mask.lo_closed else position > mask.lo
    below = position <= mask.hi if mask.hi_closed else position < mask.hi
    return int(above and below)


def existence_check(x: ImpulseInterference) -> bool:
    """Return True when every bounded window holds finitely many impulses.

    Raises :class:`~shirac.errors.DegenerateTrain` naming the offending
    summand (and factor) otherwise.
    """
    check_expandable(x)
    return True


def _require_nonnegative(train, where):
    for imp in train:
        if imp.amplitude < 0:
            raise NegativeAmplitude(
                f"amplitude {fmt(imp.amplitude)} at {fmt(imp.position)} {where}; "
                "bounds need non-negative amplitudes")


def heaviside_duration(x: ImpulseInterference, mask: HeavisideMask) -> Fraction:
    existence_check(x)
    covered = [imp for imp in flatten(x, (mask.lo, mask.hi)) if mask_sample(imp.position, mask)]
    _require_nonnegative(covered, f"inside {mask}")
    return sum((imp.amplitude for imp in covered), Fraction(0))


def _check_kind(kind, extremum):
    kind = MaskKind.parse(kind)
    if extremum == "max":
        table = MAX_KINDS
    elif extremum == "min":
        table = MIN_KINDS
    else:
        raise ValueError(f"extremum must be 'max' or 'min', got {extremum!r}")
    if kind not in table:
        supported = ", ".join(k.value for k in table)
        raise UnsupportedMaskKind(
            f"no finite test set for the {extremum}imum over {kind.brackets('x', 'x+d')} masks; "
            f"supported {extremum} kinds: {supported}")
    return kind, table[kind]


def extrema(x: ImpulseInterference, durations: Sequence, window, kind,
            extremum="max", backend=None):
    """Extremal duration for each mask length in *durations*.

    A mask of length ``d`` is placed with its left edge anywhere in
    ``window = (w1, w2)``, so masks may reach up to ``w2 + d``. Returns one
    :class:`BoundResult` per duration, in input order.
    """
    kind, right_anchored = _check_kind(kind, extremum)
    w1, w2 = rational(window[0]), rational(window[1])
    if w1 > w2:
        raise ValueError(f"empty window [{fmt(w1)}, {fmt(w2)}]")
    ds = [rational(d) for d in durations]
    if any(d < 0 for d in ds):
        raise ValueError("mask lengths must be non-negative")
    if not ds:
        return []
    existence_check(x)
    train = flatten(x, (w1, w2 + max(ds)))
    _require_nonnegative(train, f"in [{fmt(w1)}, {fmt(w2 + max(ds))}]")

    scale = common_denominator([imp.position for imp in train] + [w1, w2] + ds)
    amp_scale = common_denominator(imp.amplitude for imp in train)
    pos = [int(imp.position * scale) for imp in train]
    csum = [0] + list(accumulate(int(imp.amplitude * amp_scale) for imp in train))
    values, witnesses = kernels.extremum_scan(
        pos, csum, int(w1 * scale), int(w2 * scale), [int(d * scale) for d in ds],
        kind.lo_closed, kind.hi_closed, right_anchored, extremum == "max", backend=backend)
    return [BoundResult(Fraction(v, amp_scale), Fraction(w, scale))
            for v, w in zip(values, witnesses)]


def max_duration(x: ImpulseInterference, d, window, kind=MaskKind.CC) -> BoundResult:
    return extrema(x, [d], window, kind, "max")[0]


def min_duration(x: ImpulseInterference, d, window, kind=MaskKind.OO) -> BoundResult:
    return extrema(x, [d], window, kind, "min")[0]
