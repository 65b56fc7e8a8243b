from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from shirac import (ZERO, DegenerateTrain, HeavisideMask, ImpulseSpectralTrain, INF, MaskKind,
                    NegativeAmplitude, UnsupportedMaskKind, convolve, existence_check, extrema,
                    heaviside_duration, interference, mask_sample, max_duration, min_duration,
                    periodic_train, scalar_mul, train)
from shirac.bounds import MAX_KINDS, MIN_KINDS
from shirac.oracle import oracle_duration, oracle_extremum, oracle_flatten
from shirac.transform import distance_set

from conftest import interferences, nonneg_amplitudes, rationals

KINDS = list(MaskKind)


class TestMask:
    @pytest.mark.parametrize("kind,inside", [
        ("cc", (1, 1, 1)), ("co", (1, 1, 0)), ("oc", (0, 1, 1)), ("oo", (0, 1, 0))])
    def test_sample_edges(self, kind, inside):
        m = HeavisideMask.of_kind(2, 4, kind)
        assert tuple(mask_sample(p, m) for p in (2, 3, 4)) == inside
        assert mask_sample(F(9, 2), m) == 0 and mask_sample(1, m) == 0
        assert m.kind is MaskKind(kind)

    def test_reversed_mask(self):
        with pytest.raises(ValueError):
            HeavisideMask(3, 2)

    def test_parse(self):
        assert MaskKind.parse("OC") is MaskKind.OC
        with pytest.raises(ValueError):
            MaskKind.parse("xx")

    def test_str(self):
        assert str(HeavisideMask.of_kind(F(1, 2), 3, "co")) == "[1/2, 3)"


class TestDuration:
    def test_closed(self, three_jobs):
        assert heaviside_duration(three_jobs, HeavisideMask(2, 4)) == 11

    def test_open_closed(self, three_jobs):
        assert heaviside_duration(three_jobs, HeavisideMask.of_kind(2, 4, "oc")) == 6

    def test_empty_mask(self, three_jobs):
        assert heaviside_duration(three_jobs, HeavisideMask.of_kind(2, 2, "oo")) == 0
        assert heaviside_duration(ZERO, HeavisideMask(0, 5)) == 0

    def test_negative_outside_mask_is_fine(self):
        x = interference(train(1, [5, -1]))
        assert heaviside_duration(x, HeavisideMask(0, F(1, 2))) == 5
        with pytest.raises(NegativeAmplitude):
            heaviside_duration(x, HeavisideMask(0, 1))

    def test_infinite_train(self):
        x = interference(periodic_train(F(1, 2), (1, 2)))
        assert heaviside_duration(x, HeavisideMask(0, 2)) == 1 + 2 + 1 + 2 + 1

    @given(interferences(amps=nonneg_amplitudes), rationals, rationals,
           st.sampled_from(KINDS))
    def test_matches_oracle(self, x, a, b, kind):
        a, b = min(a, b), max(a, b)
        pairs = oracle_flatten(x)
        want = oracle_duration(pairs, a, b, kind)
        assert heaviside_duration(x, HeavisideMask.of_kind(a, b, kind)) == want


class TestExistence:
    def test_finite(self, three_jobs):
        assert existence_check(three_jobs) is True

    def test_zero_step(self):
        with pytest.raises(DegenerateTrain) as info:
            existence_check(interference(ImpulseSpectralTrain(0, INF, (1,))))
        assert info.value.summand == 0

    def test_opposing(self):
        x = convolve(interference(periodic_train(1)), interference(periodic_train(-2)))
        with pytest.raises(DegenerateTrain):
            existence_check(x)


class TestExtrema:
    def test_max_example(self, three_jobs):
        r = max_duration(three_jobs, 1, (0, 4))
        assert (r.value, r.witness) == (11, 2)
        assert str(r) == "11 @ 2"

    def test_min_example(self, three_jobs):
        r = min_duration(three_jobs, 1, (0, 4))
        assert r.value == 0

    def test_full_window(self, three_jobs):
        assert max_duration(three_jobs, 2, (0, 4)).value == 15
        assert min_duration(three_jobs, 2, (1, 1)).value == 5

    def test_min_inside_dense_part(self, three_jobs):
        # open masks of length 2 placed at 1..2 always hold the middle job
        assert min_duration(three_jobs, 2, (1, 2)).value == 5
        assert min_duration(three_jobs, 2, (1, 2), "co").value == 9

    def test_right_anchored_max(self, three_jobs):
        r = max_duration(three_jobs, 1, (0, 4), "oc")
        assert r.value == 6 and r.witness == 2

    @pytest.mark.parametrize("kind,extremum", [("oo", "max"), ("cc", "min")])
    def test_unsupported(self, three_jobs, kind, extremum):
        with pytest.raises(UnsupportedMaskKind):
            extrema(three_jobs, [1], (0, 4), kind, extremum)

    def test_negative_amplitude(self):
        with pytest.raises(NegativeAmplitude):
            max_duration(interference(train(1, [1, -1])), 1, (0, 2))

    def test_bad_arguments(self, three_jobs):
        with pytest.raises(ValueError):
            max_duration(three_jobs, 1, (4, 0))
        with pytest.raises(ValueError):
            max_duration(three_jobs, -1, (0, 4))
        with pytest.raises(ValueError):
            extrema(three_jobs, [1], (0, 4), "cc", "median")
        assert extrema(three_jobs, [], (0, 4), "cc") == []

    def test_empty_interference(self):
        r = max_duration(ZERO, 3, (2, 5))
        assert (r.value, r.witness) == (0, 2)

    def test_amplitude_scaling(self, three_jobs):
        base = max_duration(three_jobs, 1, (0, 4)).value
        assert max_duration(scalar_mul(F(7, 3), three_jobs), 1, (0, 4)).value == base * F(7, 3)

    def test_window_shrinking_never_raises_max(self, three_jobs):
        wide = max_duration(three_jobs, 1, (0, 4)).value
        assert max_duration(three_jobs, 1, (3, 4)).value <= wide
        assert min_duration(three_jobs, 1, (3, 4)).value >= min_duration(three_jobs, 1, (0, 4)).value

    def test_masks_reach_past_window(self, three_jobs):
        # left edge at 3 covers the last job even though the window ends there
        assert max_duration(three_jobs, 5, (3, 3)).value == 6

    def test_periodic(self):
        x = interference(periodic_train(2, (1, 3)))
        assert max_duration(x, 2, (0, 8)).value == 4
        assert min_duration(x, 2, (0, 8)).value == 0
        assert min_duration(x, 2, (0, 8), "co").value == 1

    def test_witness_achieves_value(self, three_jobs):
        for extremum, table in (("max", MAX_KINDS), ("min", MIN_KINDS)):
            for kind in table:
                for d in range(5):
                    r = extrema(three_jobs, [d], (0, 4), kind, extremum)[0]
                    assert 0 <= r.witness <= 4
                    mask = HeavisideMask.of_kind(r.witness, r.witness + d, kind)
                    assert heaviside_duration(three_jobs, mask) == r.value

    @given(interferences(amps=nonneg_amplitudes, max_rows=2), rationals, st.data())
    @settings(max_examples=60)
    def test_matches_oracle(self, x, w1, data):
        w2 = w1 + data.draw(st.integers(0, 6))
        ds = distance_set(x, w1, w2)
        for extremum, table in (("max", MAX_KINDS), ("min", MIN_KINDS)):
            for kind in table:
                got = extrema(x, ds, (w1, w2), kind, extremum)
                for d, r in zip(ds, got):
                    assert r.value == oracle_extremum(x, d, (w1, w2), kind, extremum).value
