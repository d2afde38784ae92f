"""Information-theoretic quantities and the capacity-curve report.

The user's clicks are bits over a binary symmetric channel that flips each
one with probability ``f``; the capacity ``1 - h2(f)`` bounds the
information rate any error-correcting scheme can sustain.  The capacity
curve pairs that bound with measured rates from simulation sweeps.
"""

from __future__ import annotations

import csv
import json
import math
import statistics
from dataclasses import dataclass
from typing import IO, List, Sequence


def binary_entropy(f: float) -> float:
    """h2(f) in bits, with 0 log 0 taken as 0."""
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {f}")
    if f == 0.0 or f == 1.0:
        return 0.0
    return -f * math.log2(f) - (1.0 - f) * math.log2(1.0 - f)


def channel_capacity(f: float) -> float:
    """Capacity in bits per click of a binary symmetric channel."""
    if not 0.0 <= f <= 0.5:
        raise ValueError(f"error rate must be in [0, 0.5], got {f}")
    return 1.0 - binary_entropy(f)


@dataclass(frozen=True)
class CapacityPoint:
    f: float
    capacity: float
    rate_mean: float
    rate_stddev: float
    seeds: int


@dataclass(frozen=True)
class CapacityCurve:
    points: List[CapacityPoint]

    def write_csv(self, out: IO[str]) -> None:
        writer = csv.writer(out)
        writer.writerow(["f", "capacity", "rate_mean", "rate_stddev", "seeds"])
        for pt in self.points:
            writer.writerow([pt.f, pt.capacity, pt.rate_mean, pt.rate_stddev, pt.seeds])

    def to_json(self) -> str:
        return json.dumps(
            {"points": [pt.__dict__ for pt in self.points]},
            indent=2, sort_keys=True,
        )


def build_capacity_curve(
    config,
    texts: Sequence[str],
    f_values: Sequence[float],
    seeds: Sequence[int],
) -> CapacityCurve:
    """Measured information rate vs. channel capacity for each error rate.

    ``f_values`` must include 0, which defines the information-bit baseline
    (the click count of an error-free run).
    """
    from .simulate import simulate_corpus, information_rate

    f_values = sorted(set(float(f) for f in f_values))
    if not f_values or f_values[0] != 0.0:
        raise ValueError("f_values must include 0 for the baseline run")
    if any(f > 0.5 for f in f_values):
        raise ValueError("error rates above 0.5 are outside the channel model")
    if not seeds:
        raise ValueError("at least one seed is required")

    # error-free runs are deterministic, so one baseline serves all seeds
    baseline = simulate_corpus(config, texts, f=0.0, seed=seeds[0])
    points = [CapacityPoint(f=0.0, capacity=1.0, rate_mean=1.0,
                            rate_stddev=0.0, seeds=len(seeds))]
    for f in f_values[1:]:
        rates = []
        for seed in seeds:
            agg = simulate_corpus(config, texts, f=f, seed=seed)
            rates.append(information_rate(baseline.total_clicks, agg.total_clicks))
        stddev = statistics.stdev(rates) if len(rates) > 1 else 0.0
        points.append(CapacityPoint(
            f=f,
            capacity=channel_capacity(f),
            rate_mean=statistics.fmean(rates),
            rate_stddev=stddev,
            seeds=len(seeds),
        ))
    return CapacityCurve(points=points)
