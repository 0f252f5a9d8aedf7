"""Radial binning: vertex-density histograms over average distance and
binned quantity-vs-distance profiles, with ensemble aggregation.

Bins are half-open [c - w/2, c + w/2) with centers at (index + 0.5) * w,
index = floor(dbar / w).  Histograms keep empty bins between their min and
max; profiles omit empty bins.  Cross-realization aggregation treats each
realization's bin mean as one sample, so 100 realizations give per-bin
means of means with standard errors across the ensemble.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RadialHistogram:
    """Fraction of vertices per average-distance bin; fractions sum to 1."""

    bin_width: float
    centers: np.ndarray
    fractions: np.ndarray

    def as_profile(self) -> "RadialProfile":
        """View as a single-realization profile (for ensemble aggregation)."""
        return RadialProfile(
            quantity="fraction",
            bin_width=self.bin_width,
            centers=self.centers,
            means=self.fractions,
            stderrs=np.full(self.centers.shape[0], np.nan),
            counts=np.ones(self.centers.shape[0], np.int64),
        )

    def csv_rows(self):
        yield "bin_center,fraction"
        for c, f in zip(self.centers, self.fractions):
            yield f"{c:.12g},{f:.12g}"


@dataclass(frozen=True)
class RadialProfile:
    """Binned series over average distance: per-bin mean, standard error
    (NaN when fewer than 2 samples), and sample count."""

    quantity: str
    bin_width: float
    centers: np.ndarray
    means: np.ndarray
    stderrs: np.ndarray
    counts: np.ndarray

    def csv_rows(self):
        yield "bin_center,mean,stderr,count"
        for c, mu, se, ct in zip(self.centers, self.means, self.stderrs, self.counts):
            se_s = "" if math.isnan(se) else f"{se:.12g}"
            yield f"{c:.12g},{mu:.12g},{se_s},{ct}"


def _bin_index(dbar: np.ndarray, bin_width: float) -> np.ndarray:
    return np.floor(np.asarray(dbar, dtype=np.float64) / bin_width).astype(np.int64)


def radial_histogram(dbar, bin_width: float) -> RadialHistogram:
    """Normalized vertex counts per dbar bin, empty in-range bins retained."""
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")
    dbar = np.asarray(dbar, dtype=np.float64)
    if dbar.size == 0:
        raise ValueError("empty dbar array")
    idx = _bin_index(dbar, bin_width)
    lo = int(idx.min())
    hi = int(idx.max())
    counts = np.bincount(idx - lo, minlength=hi - lo + 1)
    centers = (np.arange(lo, hi + 1, dtype=np.float64) + 0.5) * bin_width
    return RadialHistogram(bin_width=float(bin_width), centers=centers,
                           fractions=counts / dbar.size)


def radial_profile(dbar, values, bin_width: float, quantity: str = "value") -> RadialProfile:
    """Per-bin mean and standard error of `values` grouped by dbar bin.

    NaN values (undefined metric entries, e.g. clustering at degree < 2) are
    skipped; bins left with no samples are omitted.
    """
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")
    dbar = np.asarray(dbar, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    if dbar.shape != values.shape:
        raise ValueError("dbar and values must have the same length")
    defined = ~np.isnan(values)
    d = dbar[defined]
    v = values[defined]
    idx = _bin_index(d, bin_width)
    uniq = np.unique(idx)
    centers = (uniq.astype(np.float64) + 0.5) * bin_width
    means = np.empty(uniq.shape[0])
    stderrs = np.empty(uniq.shape[0])
    counts = np.empty(uniq.shape[0], np.int64)
    for i, bin_id in enumerate(uniq):
        sel = v[idx == bin_id]
        counts[i] = sel.size
        means[i] = sel.mean()
        stderrs[i] = sel.std(ddof=1) / math.sqrt(sel.size) if sel.size >= 2 else math.nan
    return RadialProfile(quantity=quantity, bin_width=float(bin_width),
                         centers=centers, means=means, stderrs=stderrs, counts=counts)


def aggregate_realizations(profiles: list[RadialProfile]) -> RadialProfile:
    """Average profiles across ensemble realizations bin by bin.

    Each realization's bin mean counts as one sample; a bin's aggregate mean
    is the mean over the realizations where the bin is present, its stderr
    the standard error across those realizations, and its count the number
    of contributing realizations.
    """
    if not profiles:
        raise ValueError("no profiles to aggregate")
    width = profiles[0].bin_width
    quantity = profiles[0].quantity
    for p in profiles[1:]:
        if p.bin_width != width:
            raise ValueError(f"bin_width mismatch: {p.bin_width} vs {width}")
        if p.quantity != quantity:
            raise ValueError(f"quantity mismatch: {p.quantity!r} vs {quantity!r}")

    buckets: dict[int, list[float]] = {}
    for p in profiles:
        ids = np.round(p.centers / width - 0.5).astype(np.int64)
        for bin_id, mu in zip(ids.tolist(), p.means.tolist()):
            buckets.setdefault(bin_id, []).append(mu)

    ids = sorted(buckets)
    centers = (np.array(ids, dtype=np.float64) + 0.5) * width
    means = np.empty(len(ids))
    stderrs = np.empty(len(ids))
    counts = np.empty(len(ids), np.int64)
    for i, bin_id in enumerate(ids):
        sel = np.array(buckets[bin_id])
        counts[i] = sel.size
        means[i] = sel.mean()
        stderrs[i] = sel.std(ddof=1) / math.sqrt(sel.size) if sel.size >= 2 else math.nan
    return RadialProfile(quantity=quantity, bin_width=width, centers=centers,
                         means=means, stderrs=stderrs, counts=counts)
