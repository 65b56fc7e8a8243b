"""Brute-force reference implementations.

Deliberately naive and sharing no code with the expansion or extremum
paths they check: expansion walks the full index product of every density,
and extrema are found by evaluating every critical mask placement.
"""

from fractions import Fraction
from itertools import product
import math

from ._rational import rational
from .bounds import BoundResult, MaskKind
from .errors import DegenerateTrain, NegativeAmplitude, UnboundedExpansion


def _index_ranges(isd, lo, hi):
    finite_reach = sum(abs(t.shift_step) * (t.degree - 1) for t in isd.factors if t.is_finite)
    ranges = []
    for t in isd.factors:
        if t.is_finite:
            ranges.append(range(t.degree))
            continue
        # every infinite contribution has the same sign, so none may exceed this
        reach = max(abs(lo), abs(hi)) + finite_reach
        ranges.append(range(math.floor(reach / abs(t.shift_step)) + 1))
    return ranges


def oracle_flatten(x, window=None):
    """Expand by nested loops over every index tuple, then merge once."""
    infinite = [t for _, _, t in x.trains() if not t.is_finite]
    for k, isd in enumerate(x.summands):
        steps = [t.shift_step for t in isd.factors if not t.is_finite]
        if any(s == 0 for s in steps):
            raise DegenerateTrain(f"summand {k}: infinite train with zero step", k)
        if any(s > 0 for s in steps) and any(s < 0 for s in steps):
            raise DegenerateTrain(f"summand {k}: opposing infinite trains", k)
    if window is None:
        if infinite:
            raise UnboundedExpansion("infinite train without window")
        lo = hi = None
    else:
        lo, hi = rational(window[0]), rational(window[1])

    merged = {}
    for isd in x.summands:
        ranges = (_index_ranges(isd, lo, hi) if lo is not None
                  else [range(t.degree) for t in isd.factors])
        for idx in product(*ranges):
            position = Fraction(0)
            amplitude = Fraction(1)
            for t, n in zip(isd.factors, idx):
                position += n * t.shift_step
                amplitude *= t.amplitudes[n % len(t.amplitudes)]
            if lo is not None and not (lo <= position <= hi):
                continue
            merged[position] = merged.get(position, Fraction(0)) + amplitude
    return tuple((p, merged[p]) for p in sorted(merged) if merged[p] != 0)


def _inside(p, a, b, kind):
    left = a <= p if kind.lo_closed else a < p
    right = p <= b if kind.hi_closed else p < b
    return left and right


def oracle_duration(pairs, a, b, kind):
    kind = MaskKind.parse(kind)
    total = Fraction(0)
    for p, amp in pairs:
        if _inside(p, a, b, kind):
            total += amp
    return total


def critical_anchors(positions, d, w1, w2):
    """Left edges at which a length-d mask edge meets an impulse or window end,
    plus the midpoint of every gap between them."""
    raw = {w1, w2}
    for p in positions:
        raw.add(p)
        raw.add(p - d)
    anchors = sorted(a for a in raw if w1 <= a <= w2)
    mids = [(u + v) / 2 for u, v in zip(anchors, anchors[1:])]
    return sorted(anchors + mids)


def oracle_extremum(x, d, window, kind, extremum="max"):
    """Exhaustive extremum over placements; supports all four mask kinds."""
    kind = MaskKind.parse(kind)
    d = rational(d)
    w1, w2 = rational(window[0]), rational(window[1])
    pairs = oracle_flatten(x, (w1, w2 + d))
    for p, amp in pairs:
        if amp < 0:
            raise NegativeAmplitude(f"negative amplitude at {p}")
    best = None
    for a in critical_anchors([p for p, _ in pairs], d, w1, w2):
        v = oracle_duration(pairs, a, a + d, kind)
        if best is None or (v > best.value if extremum == "max" else v < best.value):
            best = BoundResult(v, a)
    return best
