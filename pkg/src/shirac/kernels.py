"""Backend selection for the window-extremum kernel.

The compiled extension is used when it imported and the scaled data fits
in int64; otherwise the pure-Python kernel runs. ``SHIRAC_PURE_PYTHON=1``
forces the fallback.
"""

from array import array
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if os.environ.get("SHIRAC_PURE_PYTHON", "") not in ("", "0"):
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# headroom for w2 + d and csum differences
_LIMIT = 1 << 61


def _fits(pos, csum, w1, w2, ds):
    bound = max([abs(w1), abs(w2)] + ([abs(pos[0]), abs(pos[-1])] if pos else []))
    span = max((abs(d) for d in ds), default=0)
    total = max((abs(c) for c in csum), default=0)
    return bound + span < _LIMIT and total < _LIMIT


def extremum_scan(pos, csum, w1, w2, ds, lo_closed, hi_closed, right_anchored, want_max,
                  backend=None):
    """Dispatch to the selected backend; see ``_pykernels.extremum_scan``."""
    backend = backend or BACKEND
    if backend == "cython" and _ckernels is not None and _fits(pos, csum, w1, w2, ds):
        return _ckernels.extremum_scan(
            array("q", pos), array("q", csum), w1, w2, array("q", ds),
            lo_closed, hi_closed, right_anchored, want_max)
    return _pykernels.extremum_scan(pos, csum, w1, w2, ds, lo_closed, hi_closed,
                                    right_anchored, want_max)
