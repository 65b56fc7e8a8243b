"""Exact impulse-train algebra and discretized event bounds.

Impulse trains are built from shifted Dirac impulses with rational shifts
and amplitudes, combined by superposition, scaling and convolution, and
analysed through window sums of their amplitudes (Heaviside durations)
and the extremes of those sums over all placements of a window.
"""

from .bounds import (BoundResult, HeavisideMask, MaskKind, existence_check, extrema,
                     heaviside_duration, mask_sample, max_duration, min_duration)
from .errors import (DegenerateTrain, DimensionMismatch, DomainError, NegativeAmplitude,
                     ShiftMismatch, ShiracError, SpecError, UnboundedExpansion, Unsupported,
                     UnsupportedMaskKind)
from .impulse import (INF, ZERO, FlatImpulse, ImpulseInterference, ImpulseSpectralDensity,
                      ImpulseSpectralTrain, add, add_aligned, canonicalize, convolve, density,
                      equals_canonical, flatten, from_flat, interference, offset, periodic_train,
                      scalar_mul, shifted_impulse, train)
from .kernels import BACKEND
from .matrix import (AmplitudeVector, ConstructionMatrices, ShiftVector, build_interference,
                     inner_convolve, inner_sum, matrix_dot, vector_dot)
from .transform import (GraphPoint, IntervalTransformGraph, distance_set, hyperperiod,
                        transform_graph)

__version__ = "0.1.0"
