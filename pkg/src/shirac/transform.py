"""Interval transformation: extremal duration as a function of mask length."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from ._rational import fmt, rational, rational_lcm
from .bounds import MaskKind, existence_check, extrema
from .impulse import ImpulseInterference, check_expandable, flatten


class GraphPoint(NamedTuple):
    d: Fraction
    value: Fraction
    witness: Fraction


@dataclass(frozen=True)
class IntervalTransformGraph:
    window: Tuple[Fraction, Fraction]
    extremum: str
    mask_kind: MaskKind
    points: Tuple[GraphPoint, ...]

    def value_at(self, d):
        """Step-function lookup: value of the piece containing *d*.

        Each point opens a constant piece that runs until the next point.
        """
        d = rational(d)
        found = None
        for p in self.points:
            if p.d <= d:
                found = p
            else:
                break
        if found is None:
            raise ValueError(f"d={fmt(d)} lies below the graph domain")
        return found.value

    def as_pairs(self):
        return tuple((p.d, p.value) for p in self.points)


def distance_set(x: ImpulseInterference, a, b) -> Tuple[Fraction, ...]:
    """Sorted distinct pairwise distances of impulse positions in [a, b] and the ends."""
    a, b = rational(a), rational(b)
    if a > b:
        raise ValueError(f"empty window [{fmt(a)}, {fmt(b)}]")
    existence_check(x)
    points = sorted({a, b} | {imp.position for imp in flatten(x, (a, b))})
    return tuple(sorted({q - p for i, p in enumerate(points) for q in points[i:]}))


def transform_graph(x: ImpulseInterference, window, extremum="max",
                    kind=MaskKind.CC, backend=None) -> IntervalTransformGraph:
    kind = MaskKind.parse(kind)
    a, b = rational(window[0]), rational(window[1])
    ds = distance_set(x, a, b)
    results = extrema(x, ds, (a, b), kind, extremum, backend=backend)
    points = tuple(GraphPoint(d, r.value, r.witness) for d, r in zip(ds, results))
    return IntervalTransformGraph((a, b), extremum, kind, points)


def hyperperiod(x: ImpulseInterference) -> Optional[Fraction]:
    """Common period of the infinite trains, or None when *x* is not periodic.

    Every summand must contain exactly one infinite train; its effective
    period is the step magnitude times the amplitude-cycle length.
    """
    check_expandable(x)
    if not x.summands:
        return None
    periods = []
    for isd in x.summands:
        infinite = [t for t in isd.factors if not t.is_finite]
        if len(infinite) != 1:
            return None
        t = infinite[0]
        periods.append(abs(t.shift_step) * len(t.amplitudes))
    return rational_lcm(periods)
