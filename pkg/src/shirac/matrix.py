"""Build interferences from amplitude, shift and degree matrices.

Row ``k`` of the grids describes one density (its cells are convolved left
to right), and the rows are superposed. The pipeline is

    matrix_dot -> inner_convolve -> inner_sum

and :func:`build_interference` runs all three.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ._rational import fmt, rational
from .errors import DimensionMismatch
from .impulse import (ImpulseInterference, ImpulseSpectralDensity,
                      ImpulseSpectralTrain)


@dataclass(frozen=True)
class AmplitudeVector:
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(rational(e) for e in self.entries)
        if not entries:
            raise DimensionMismatch("amplitude vector is empty")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class ShiftVector:
    """The shifts ``(0, s, 2s, ..., (N-1)s)`` of a train."""

    shift_step: Fraction
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "shift_step", rational(self.shift_step))
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise DimensionMismatch(f"shift vector degree must be >= 1, got {self.degree!r}")

    def shifts(self):
        return tuple(n * self.shift_step for n in range(self.degree))


Grid = Tuple[tuple, ...]


def _shape(grid, name):
    rows = len(grid)
    if rows == 0:
        raise DimensionMismatch(f"{name} has no rows")
    cols = len(grid[0])
    if cols == 0:
        raise DimensionMismatch(f"{name} has no columns")
    for k, row in enumerate(grid):
        if len(row) != cols:
            raise DimensionMismatch(f"{name} is ragged at row {k}")
    return rows, cols


@dataclass(frozen=True)
class ConstructionMatrices:
    amplitudes: Grid
    shifts: Grid
    degrees: Grid

    def __post_init__(self):
        for name in ("amplitudes", "shifts", "degrees"):
            object.__setattr__(self, name, tuple(tuple(r) for r in getattr(self, name)))
        shape = _shape(self.amplitudes, "amplitude matrix")
        for name, grid in (("shift matrix", self.shifts), ("degree matrix", self.degrees)):
            if _shape(grid, name) != shape:
                raise DimensionMismatch(
                    f"{name} is {_shape(grid, name)}, amplitude matrix is {shape}")
        for k, j in self.cells():
            n = self.degrees[k][j]
            a, d = self.amplitudes[k][j], self.shifts[k][j]
            if not (len(a) == n == d.degree):
                raise DimensionMismatch(
                    f"cell ({k},{j}): {len(a)} amplitudes, degree {n}, "
                    f"shift vector of degree {d.degree}")

    @classmethod
    def from_lists(cls, amplitudes: Sequence[Sequence[Sequence]],
                   shift_steps: Sequence[Sequence], degrees=None):
        """Convenience constructor from plain nested lists.

        ``degrees`` defaults to the amplitude-vector lengths.
        """
        amps = tuple(tuple(AmplitudeVector(tuple(cell)) for cell in row) for row in amplitudes)
        if degrees is None:
            degrees = tuple(tuple(len(cell) for cell in row) for row in amps)
        if len(shift_steps) != len(degrees) or any(
                len(sr) != len(dr) for sr, dr in zip(shift_steps, degrees)):
            raise DimensionMismatch("shift-step and degree matrices differ in shape")
        shifts = tuple(tuple(ShiftVector(s, n) for s, n in zip(srow, drow))
                       for srow, drow in zip(shift_steps, degrees))
        return cls(amps, shifts, degrees)

    @property
    def shape(self):
        return len(self.amplitudes), len(self.amplitudes[0])

    def cells(self):
        rows, cols = self.shape
        for k in range(rows):
            for j in range(cols):
                yield k, j


def vector_dot(a: AmplitudeVector, d: ShiftVector) -> ImpulseSpectralTrain:
    if len(a) != d.degree:
        raise DimensionMismatch(
            f"{len(a)} amplitudes against a shift vector of degree {d.degree}")
    return ImpulseSpectralTrain(d.shift_step, d.degree, a.entries)


def matrix_dot(m: ConstructionMatrices):
    """Cell-wise dot product: the grid of trains."""
    return tuple(
        tuple(vector_dot(a, d) for a, d in zip(arow, drow))
        for arow, drow in zip(m.amplitudes, m.shifts)
    )


def inner_convolve(grid) -> Tuple[ImpulseSpectralDensity, ...]:
    if not grid or not grid[0]:
        raise DimensionMismatch("empty train grid")
    return tuple(ImpulseSpectralDensity(tuple(row)) for row in grid)


def inner_sum(rows) -> ImpulseInterference:
    return ImpulseInterference(tuple(rows))


def build_interference(m: ConstructionMatrices) -> ImpulseInterference:
    return inner_sum(inner_convolve(matrix_dot(m)))


def describe(m: ConstructionMatrices) -> str:
    lines = []
    for k, row in enumerate(matrix_dot(m)):
        cells = []
        for t in row:
            terms = " + ".join(f"{fmt(a)}d(x-{fmt(n * t.shift_step)})"
                               for n, a in enumerate(t.amplitudes))
            cells.append(f"({terms})")
        lines.append(f"row {k}: " + " * ".join(cells))
    return "\n".join(lines)
