import math

import numpy as np
import pytest

from radialnet.profiles import (aggregate_realizations, radial_histogram,
                                radial_profile)


class TestRadialHistogram:
    def test_hand_binning(self):
        h = radial_histogram([1.0, 1.0, 1.5], 0.5)
        assert h.centers.tolist() == [1.25, 1.75]
        assert np.allclose(h.fractions, [2 / 3, 1 / 3])

    def test_single_bin(self):
        h = radial_histogram([2.2, 2.2, 2.2], 0.5)
        assert h.centers.shape == (1,)
        assert h.fractions.tolist() == [1.0]

    def test_uniform_grid(self):
        h = radial_histogram([1.0, 1.5, 2.0], 0.5)
        assert np.allclose(h.fractions, [1 / 3, 1 / 3, 1 / 3])

    def test_empty_bins_retained(self):
        h = radial_histogram([1.0, 3.0], 1.0)
        assert h.centers.tolist() == [1.5, 2.5, 3.5]
        assert h.fractions.tolist() == [0.5, 0.0, 0.5]

    def test_fractions_sum_to_one(self, rng):
        d = rng.uniform(1, 9, size=500)
        h = radial_histogram(d, 0.1)
        assert abs(h.fractions.sum() - 1.0) < 1e-9

    def test_bad_width(self):
        with pytest.raises(ValueError):
            radial_histogram([1.0], 0.0)


class TestRadialProfile:
    def test_two_point_stats(self):
        p = radial_profile([1, 1, 2], [4, 6, 10], 1.0)
        assert p.centers.tolist() == [1.5, 2.5]
        assert p.means.tolist() == [5.0, 10.0]
        assert p.stderrs[0] == pytest.approx(1.0)
        assert math.isnan(p.stderrs[1])
        assert p.counts.tolist() == [2, 1]

    def test_constant_values(self):
        p = radial_profile([1, 1.2, 3, 3.1], [7, 7, 7, 7], 0.5)
        assert np.all(p.means == 7.0)
        defined = p.counts >= 2
        assert np.all(p.stderrs[defined] == 0.0)

    def test_nan_values_skipped(self):
        p = radial_profile([1, 1, 1], [2.0, np.nan, 4.0], 1.0)
        assert p.counts.tolist() == [2]
        assert p.means.tolist() == [3.0]

    def test_matches_naive_groupby(self, rng):
        d = rng.uniform(1, 6, size=1000)
        v = rng.normal(size=1000)
        p = radial_profile(d, v, 0.25)
        for c, mu, se, ct in zip(p.centers, p.means, p.stderrs, p.counts):
            sel = v[np.floor(d / 0.25).astype(int) == round(c / 0.25 - 0.5)]
            assert ct == sel.size
            assert mu == pytest.approx(sel.mean(), abs=1e-12)
            if ct >= 2:
                assert se == pytest.approx(sel.std(ddof=1) / math.sqrt(ct), abs=1e-12)

    def test_permutation_invariant(self, rng):
        d = rng.uniform(1, 6, size=300)
        v = rng.normal(size=300)
        perm = rng.permutation(300)
        a = radial_profile(d, v, 0.3)
        b = radial_profile(d[perm], v[perm], 0.3)
        assert np.array_equal(a.centers, b.centers)
        assert np.allclose(a.means, b.means, atol=1e-12)
        assert np.array_equal(a.counts, b.counts)

    def test_empty_bins_omitted(self):
        p = radial_profile([1.0, 5.0], [2.0, 3.0], 1.0)
        assert p.centers.tolist() == [1.5, 5.5]


class TestAggregateRealizations:
    def test_two_identical_profiles(self):
        p = radial_profile([1, 1, 2], [4, 6, 10], 1.0)
        agg = aggregate_realizations([p, p])
        assert np.array_equal(agg.means, p.means)
        assert np.all(agg.stderrs == 0.0)
        assert np.all(agg.counts == 2)

    def test_single_profile_identity(self):
        p = radial_profile([1, 1, 2], [4, 6, 10], 1.0)
        agg = aggregate_realizations([p])
        assert np.array_equal(agg.means, p.means)
        assert np.all(np.isnan(agg.stderrs))

    def test_k_copies_zero_stderr(self):
        p = radial_profile([1, 2, 3], [5.0, 6.0, 7.0], 1.0)
        agg = aggregate_realizations([p] * 7)
        assert np.array_equal(agg.means, p.means)
        assert np.all(agg.stderrs == 0.0)

    def test_stderr_matches_direct_formula(self, rng):
        profiles = []
        stored = []
        for _ in range(100):
            v = rng.normal(loc=3.0, size=200)
            d = rng.uniform(1, 2, size=200)
            p = radial_profile(d, v, 10.0)  # single bin
            profiles.append(p)
            stored.append(p.means[0])
        agg = aggregate_realizations(profiles)
        stored = np.array(stored)
        assert agg.means[0] == pytest.approx(stored.mean(), abs=1e-12)
        assert agg.stderrs[0] == pytest.approx(stored.std(ddof=1) / 10.0, abs=1e-12)
        # across-realization stderr sits ~10x under the realization spread
        assert agg.stderrs[0] < stored.std(ddof=1)

    def test_partial_bins(self):
        a = radial_profile([1.0], [2.0], 1.0)
        b = radial_profile([1.0, 5.0], [4.0, 9.0], 1.0)
        agg = aggregate_realizations([a, b])
        assert agg.centers.tolist() == [1.5, 5.5]
        assert agg.means.tolist() == [3.0, 9.0]
        assert agg.counts.tolist() == [2, 1]

    def test_mismatched_bin_width(self):
        a = radial_profile([1.0], [2.0], 1.0)
        b = radial_profile([1.0], [2.0], 0.5)
        with pytest.raises(ValueError):
            aggregate_realizations([a, b])

    def test_empty_list(self):
        with pytest.raises(ValueError):
            aggregate_realizations([])

    def test_histogram_aggregation_path(self):
        h1 = radial_histogram([1.0, 1.4, 2.0], 1.0).as_profile()
        h2 = radial_histogram([1.2, 2.4, 2.6], 1.0).as_profile()
        agg = aggregate_realizations([h1, h2])
        assert agg.quantity == "fraction"
        assert agg.centers.tolist() == [1.5, 2.5]
        assert np.allclose(agg.means, [(2 / 3 + 1 / 3) / 2, (1 / 3 + 2 / 3) / 2])
