# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled window-extremum kernel over int64 data.

Same contract as ``shirac._pykernels.extremum_scan``; callers guarantee
that every intermediate fits in 63 bits.
"""

from array import array

ctypedef long long i64


cdef inline Py_ssize_t lower_bound(const i64[::1] pos, Py_ssize_t n, i64 x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if pos[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t upper_bound(const i64[::1] pos, Py_ssize_t n, i64 x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if pos[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline i64 mask_sum(const i64[::1] pos, const i64[::1] csum, Py_ssize_t n,
                         i64 a, i64 b, bint lo_closed, bint hi_closed) noexcept nogil:
    cdef Py_ssize_t left, right
    left = lower_bound(pos, n, a) if lo_closed else upper_bound(pos, n, a)
    right = upper_bound(pos, n, b) if hi_closed else lower_bound(pos, n, b)
    if right > left:
        return csum[right] - csum[left]
    return 0


def extremum_scan(const i64[::1] pos, const i64[::1] csum, i64 w1, i64 w2,
                  const i64[::1] ds, bint lo_closed, bint hi_closed,
                  bint right_anchored, bint want_max):
    cdef Py_ssize_t n = pos.shape[0], nd = ds.shape[0]
    cdef Py_ssize_t k, i, i0, i1
    cdef i64 d, lo, hi, ref, a, v, best, best_w
    cdef bint have
    out_v = array('q', [0]) * nd
    out_w = array('q', [0]) * nd
    cdef i64[::1] vals = out_v
    cdef i64[::1] wits = out_w
    with nogil:
        for k in range(nd):
            d = ds[k]
            if right_anchored:
                lo = w1 + d
                hi = w2 + d
            else:
                lo = w1
                hi = w2
            i0 = lower_bound(pos, n, lo)
            i1 = upper_bound(pos, n, hi)
            have = False
            best = 0
            best_w = 0
            for i in range(i0 - 1, i1 + 1):
                if i < i0:
                    ref = lo
                elif i < i1:
                    ref = pos[i]
                else:
                    ref = hi
                a = ref - d if right_anchored else ref
                v = mask_sum(pos, csum, n, a, a + d, lo_closed, hi_closed)
                if (not have or (v > best if want_max else v < best)
                        or (v == best and a < best_w)):
                    best = v
                    best_w = a
                    have = True
            vals[k] = best
            wits[k] = best_w
    return out_v.tolist(), out_w.tolist()
