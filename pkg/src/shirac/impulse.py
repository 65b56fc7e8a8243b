"""Impulse trains, densities and interferences with exact amplitudes.

An :class:`ImpulseSpectralTrain` is the series ``sum_n a_n * delta(x - n*s)``
for ``n = 0 .. N-1`` (or forever, with the amplitudes repeated cyclically).
Nesting trains by convolution gives an :class:`ImpulseSpectralDensity`;
superposing densities gives an :class:`ImpulseInterference`, which is the
value type every operation here consumes and produces.

Everything is kept symbolic until :func:`flatten` expands it into a
canonical list of ``(position, amplitude)`` pairs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
import math
from typing import NamedTuple, Optional, Sequence, Tuple

from ._rational import fmt, rational
from .errors import DegenerateTrain, ShiftMismatch, UnboundedExpansion, Unsupported

INF = math.inf

Window = Optional[Tuple[Fraction, Fraction]]


class FlatImpulse(NamedTuple):
    position: Fraction
    amplitude: Fraction

    def __str__(self):
        return f"{fmt(self.amplitude)}@{fmt(self.position)}"


FlatTrain = Tuple[FlatImpulse, ...]


@dataclass(frozen=True)
class ImpulseSpectralTrain:
    shift_step: Fraction
    degree: int | float
    amplitudes: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "shift_step", rational(self.shift_step))
        amps = tuple(rational(a) for a in self.amplitudes)
        if not amps:
            raise ValueError("a train needs at least one amplitude")
        object.__setattr__(self, "amplitudes", amps)
        if self.degree != INF:
            if isinstance(self.degree, bool) or int(self.degree) != self.degree:
                raise ValueError(f"degree must be a natural number or INF, got {self.degree!r}")
            object.__setattr__(self, "degree", int(self.degree))
            if self.degree != len(amps):
                raise ValueError(
                    f"degree {self.degree} does not match {len(amps)} amplitudes")

    @property
    def is_finite(self):
        return self.degree != INF

    def amplitude(self, n):
        if self.is_finite:
            return self.amplitudes[n]
        return self.amplitudes[n % len(self.amplitudes)]

    def extent(self):
        """Smallest and largest reachable position (possibly infinite)."""
        s = self.shift_step
        if self.is_finite:
            last = (self.degree - 1) * s
            return min(Fraction(0), last), max(Fraction(0), last)
        if s > 0:
            return Fraction(0), INF
        if s < 0:
            return -INF, Fraction(0)
        return Fraction(0), Fraction(0)

    def terms(self, lo=-INF, hi=INF):
        """Yield ``(position, amplitude)`` for indices whose position is in [lo, hi]."""
        s = self.shift_step
        if self.is_finite:
            for n, a in enumerate(self.amplitudes):
                p = n * s
                if lo <= p <= hi:
                    yield p, a
            return
        if s == 0:
            raise DegenerateTrain("infinite train with zero shift step")
        if s > 0:
            if hi == INF:
                raise UnboundedExpansion("infinite train needs a finite upper bound")
            first = 0 if lo == -INF else max(0, math.ceil(lo / s))
            last = math.floor(hi / s)
        else:
            if lo == -INF:
                raise UnboundedExpansion("infinite train needs a finite lower bound")
            first = 0 if hi == INF else max(0, math.ceil(hi / s))
            last = math.floor(lo / s)
        for n in range(first, last + 1):
            yield n * s, self.amplitude(n)

    def __str__(self):
        deg = "inf" if not self.is_finite else str(self.degree)
        amps = ",".join(fmt(a) for a in self.amplitudes)
        return f"IST(s={fmt(self.shift_step)}, N={deg}, a=({amps}))"


@dataclass(frozen=True)
class ImpulseSpectralDensity:
    """Convolution product of trains, kept unevaluated."""

    factors: Tuple[ImpulseSpectralTrain, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise ValueError("a density needs at least one factor")
        object.__setattr__(self, "factors", factors)

    @property
    def dimension(self):
        return len(self.factors)

    def __str__(self):
        return " * ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class ImpulseInterference:
    """Superposition of densities. The empty interference is the zero element."""

    summands: Tuple[ImpulseSpectralDensity, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))

    @property
    def K(self):
        return len(self.summands)

    def trains(self):
        """Iterate ``(summand_index, factor_index, train)``."""
        for k, isd in enumerate(self.summands):
            for j, t in enumerate(isd.factors):
                yield k, j, t

    def __add__(self, other):
        if not isinstance(other, ImpulseInterference):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __sub__(self, other):
        if not isinstance(other, ImpulseInterference):
            return NotImplemented
        return add(self, scalar_mul(-1, other))

    def __rmul__(self, lam):
        return scalar_mul(lam, self)

    def __str__(self):
        if not self.summands:
            return "0"
        return " (+) ".join(f"[{s}]" for s in self.summands)


ZERO = ImpulseInterference()


# -- constructors -------------------------------------------------------------

def train(shift_step, amplitudes: Sequence, degree=None) -> ImpulseSpectralTrain:
    amplitudes = tuple(amplitudes)
    return ImpulseSpectralTrain(shift_step, len(amplitudes) if degree is None else degree,
                                amplitudes)


def periodic_train(shift_step, cycle: Sequence = (1,)) -> ImpulseSpectralTrain:
    return ImpulseSpectralTrain(shift_step, INF, tuple(cycle))


def density(*trains: ImpulseSpectralTrain) -> ImpulseSpectralDensity:
    return ImpulseSpectralDensity(trains)


def interference(*parts) -> ImpulseInterference:
    """Build an interference from trains and/or densities (one summand each)."""
    summands = []
    for p in parts:
        if isinstance(p, ImpulseSpectralTrain):
            p = ImpulseSpectralDensity((p,))
        if not isinstance(p, ImpulseSpectralDensity):
            raise TypeError(f"cannot use {type(p).__name__} as a summand")
        summands.append(p)
    return ImpulseInterference(tuple(summands))


def shift_train(phi) -> ImpulseSpectralTrain:
    """The single unit impulse ``delta(x - phi)`` as a train."""
    phi = rational(phi)
    if phi == 0:
        return ImpulseSpectralTrain(0, 1, (1,))
    return ImpulseSpectralTrain(phi, 2, (0, 1))


def shifted_impulse(position, amplitude=1) -> ImpulseInterference:
    position = rational(position)
    unit = ImpulseSpectralTrain(0, 1, (amplitude,))
    if position == 0:
        return interference(unit)
    return interference(density(unit, shift_train(position)))


def from_flat(pairs) -> ImpulseInterference:
    """Interference with one summand per ``(position, amplitude)`` pair."""
    result = ZERO
    for position, amplitude in pairs:
        result = add(result, shifted_impulse(position, amplitude))
    return result


# -- vector-space operations --------------------------------------------------

def add(lhs: ImpulseInterference, rhs: ImpulseInterference) -> ImpulseInterference:
    return ImpulseInterference(lhs.summands + rhs.summands)


def scalar_mul(lam, x: ImpulseInterference) -> ImpulseInterference:
    """Scale every density by scaling the amplitudes of its first factor."""
    lam = rational(lam)
    summands = []
    for isd in x.summands:
        head = isd.factors[0]
        scaled = ImpulseSpectralTrain(head.shift_step, head.degree,
                                      tuple(lam * a for a in head.amplitudes))
        summands.append(ImpulseSpectralDensity((scaled,) + isd.factors[1:]))
    return ImpulseInterference(tuple(summands))


def convolve(lhs: ImpulseInterference, rhs: ImpulseInterference) -> ImpulseInterference:
    """Convolution distributes over the superposition: K_l * K_r densities."""
    return ImpulseInterference(tuple(
        ImpulseSpectralDensity(a.factors + b.factors)
        for a in lhs.summands for b in rhs.summands
    ))


def offset(x: ImpulseInterference, phi) -> ImpulseInterference:
    phi = rational(phi)
    if phi == 0:
        return x
    return convolve(x, interference(shift_train(phi)))


def add_aligned(lhs: ImpulseSpectralTrain, rhs: ImpulseSpectralTrain,
                lhs_start: int = 0, rhs_start: int = 0) -> ImpulseSpectralTrain:
    """Add two trains on the same shift grid into a single train.

    ``lhs_start``/``rhs_start`` place the first amplitude of each operand at
    that multiple of the step. The result is indexed from 0, with zero
    amplitudes wherever neither operand has an impulse.
    """
    if lhs.shift_step != rhs.shift_step:
        raise ShiftMismatch(
            f"shift steps differ: {fmt(lhs.shift_step)} vs {fmt(rhs.shift_step)}")
    if not (lhs.is_finite and rhs.is_finite):
        raise Unsupported("add_aligned needs finite degrees")
    if lhs_start < 0 or rhs_start < 0:
        raise ValueError("start indices must be non-negative")

    # name the operands so that n <= m
    if lhs_start <= rhs_start:
        a, n, b, m = lhs.amplitudes, lhs_start, rhs.amplitudes, rhs_start
    else:
        a, n, b, m = rhs.amplitudes, rhs_start, lhs.amplitudes, lhs_start
    end_a = n + len(a) - 1
    end_b = m + len(b) - 1

    out = [Fraction(0)] * n
    if m <= end_a:
        # overlapping index ranges: head of a, shared block, then the tail
        out.extend(a[: m - n])
        z_end = min(end_a, end_b)
        out.extend(a[i - n] + b[i - m] for i in range(m, z_end + 1))
        if end_a <= end_b:
            out.extend(b[z_end + 1 - m:])
        else:
            out.extend(a[z_end + 1 - n:])
    else:
        # disjoint: zero impulses fill the gap
        out.extend(a)
        out.extend(Fraction(0) for _ in range(end_a + 1, m))
        out.extend(b)
    return ImpulseSpectralTrain(lhs.shift_step, len(out), tuple(out))


# -- expansion ----------------------------------------------------------------

def check_expandable(x: ImpulseInterference):
    """Raise DegenerateTrain if some bounded window would hold infinitely many impulses."""
    for k, isd in enumerate(x.summands):
        signs = set()
        for j, t in enumerate(isd.factors):
            if t.is_finite:
                continue
            if t.shift_step == 0:
                raise DegenerateTrain(
                    f"summand {k}, factor {j}: infinite train with zero shift step "
                    "puts infinitely many impulses at one point", k, j)
            signs.add(t.shift_step > 0)
        if len(signs) > 1:
            raise DegenerateTrain(
                f"summand {k}: infinite trains running in opposite directions "
                "coincide infinitely often", k, None)


def _canonical(acc) -> FlatTrain:
    return tuple(FlatImpulse(p, a) for p, a in sorted(acc.items()) if a != 0)


def _flatten_density(isd: ImpulseSpectralDensity, lo, hi, acc):
    extents = [t.extent() for t in isd.factors]
    m = len(extents)
    # suffix_min[j] / suffix_max[j]: reach of factors j.. (suffix of length 0 is 0)
    suffix_min = [Fraction(0)] * (m + 1)
    suffix_max = [Fraction(0)] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix_min[j] = suffix_min[j + 1] + extents[j][0]
        suffix_max[j] = suffix_max[j + 1] + extents[j][1]

    partial = {Fraction(0): Fraction(1)}
    done_min = done_max = Fraction(0)
    for j, t in enumerate(isd.factors):
        # only positions that can still reach [lo, hi] are worth keeping
        q_lo = lo - done_max - suffix_max[j + 1]
        q_hi = hi - done_min - suffix_min[j + 1]
        terms = [(q, a) for q, a in t.terms(q_lo, q_hi) if a != 0]
        nxt = defaultdict(Fraction)
        for p, a in partial.items():
            for q, b in terms:
                nxt[p + q] += a * b
        p_lo = lo - suffix_max[j + 1]
        p_hi = hi - suffix_min[j + 1]
        partial = {p: a for p, a in nxt.items() if a != 0 and p_lo <= p <= p_hi}
        if not partial:
            return
        done_min = min(partial)
        done_max = max(partial)
    for p, a in partial.items():
        if lo <= p <= hi:
            acc[p] += a


def flatten(x: ImpulseInterference, window: Window = None) -> FlatTrain:
    """Expand *x* into its canonical flat train.

    Positions strictly increase, coincident impulses are merged and zero
    amplitudes dropped. With a window ``(lo, hi)`` only impulses inside the
    closed window are returned; a window is required once any train is
    infinite.
    """
    check_expandable(x)
    if window is None:
        if any(not t.is_finite for _, _, t in x.trains()):
            raise UnboundedExpansion("expanding an infinite train requires a window")
        lo, hi = -INF, INF
    else:
        lo, hi = rational(window[0]), rational(window[1])
        if lo > hi:
            raise ValueError(f"empty window [{fmt(lo)}, {fmt(hi)}]")
    acc = defaultdict(Fraction)
    for isd in x.summands:
        _flatten_density(isd, lo, hi, acc)
    return _canonical(acc)


def canonicalize(pairs) -> FlatTrain:
    acc = defaultdict(Fraction)
    for p, a in pairs:
        acc[rational(p)] += rational(a)
    return _canonical(acc)


def equals_canonical(lhs: ImpulseInterference, rhs: ImpulseInterference,
                     window: Window = None) -> bool:
    return flatten(lhs, window) == flatten(rhs, window)
