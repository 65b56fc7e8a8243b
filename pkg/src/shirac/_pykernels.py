"""Pure-Python window-extremum kernel (fallback for the compiled one).

Works on integer-scaled data: ``pos`` strictly increasing impulse
positions, ``csum`` their amplitude prefix sums (``len(pos) + 1`` entries).
Python ints never overflow, so this path accepts any magnitude.
"""

from bisect import bisect_left, bisect_right


def extremum_scan(pos, csum, w1, w2, ds, lo_closed, hi_closed, right_anchored, want_max):
    """For every duration in *ds*, scan the finite test set of mask placements.

    Left-anchored masks start at the impulses in ``[w1, w2]`` and at both
    window ends. Right-anchored masks end at the impulses in
    ``[w1 + d, w2 + d]`` and at both ends of that range. Returns
    ``(values, witnesses)``; a witness is the left edge of an optimal mask,
    the smallest one on ties.
    """
    values = []
    witnesses = []
    for d in ds:
        lo, hi = (w1 + d, w2 + d) if right_anchored else (w1, w2)
        i0 = bisect_left(pos, lo)
        i1 = bisect_right(pos, hi)
        best = None
        best_w = None
        for ref in _candidates(pos, i0, i1, lo, hi):
            a = ref - d if right_anchored else ref
            b = a + d
            left = bisect_left(pos, a) if lo_closed else bisect_right(pos, a)
            right = bisect_right(pos, b) if hi_closed else bisect_left(pos, b)
            v = csum[right] - csum[left] if right > left else 0
            if (best is None or (v > best if want_max else v < best)
                    or (v == best and a < best_w)):
                best, best_w = v, a
        values.append(best)
        witnesses.append(best_w)
    return values, witnesses


def _candidates(pos, i0, i1, lo, hi):
    yield lo
    for i in range(i0, i1):
        yield pos[i]
    yield hi
