"""Belief over keys and the Bayes update applied on each observed click.

Beliefs are immutable snapshots.  Probabilities are stored in log space and
each update adds log-likelihoods then exponentiates and normalizes once.
After every normalization a small probability floor is applied so that no
key can be driven unrecoverably close to zero by contradicting evidence.
"""

from __future__ import annotations

import enum
import math
from typing import Dict, Mapping, Optional, Sequence

import numpy as np

from .alphabet import UNDO, KeySpace

PROB_FLOOR = 1e-9


class Color(enum.Enum):
    RED = "RED"
    BLUE = "BLUE"

    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


def _floor_normalize(p: np.ndarray) -> np.ndarray:
    """Normalize so clamped entries sit exactly at the floor and the rest
    share the remaining mass proportionally."""
    p = np.asarray(p, dtype=float)
    total = p.sum()
    if not np.isfinite(total) or total <= 0:
        raise ValueError("probabilities must have positive finite mass")
    p = p / total
    clamped = np.zeros(len(p), dtype=bool)
    while True:
        below = (p < PROB_FLOOR) & ~clamped
        if not below.any():
            break
        clamped |= below
        free = ~clamped
        free_mass = 1.0 - PROB_FLOOR * clamped.sum()
        p[clamped] = PROB_FLOOR
        p[free] *= free_mass / p[free].sum()
    return p


class Belief:
    """Normalized probability map over the keys of one KeySpace."""

    __slots__ = ("keyspace", "_logp", "_probs")

    def __init__(self, keyspace: KeySpace, probs: Sequence[float]):
        probs = _floor_normalize(np.asarray(probs, dtype=float))
        probs.setflags(write=False)
        self.keyspace = keyspace
        self._probs = probs
        logp = np.log(probs)
        logp.setflags(write=False)
        self._logp = logp

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def log_probs(self) -> np.ndarray:
        return self._logp

    def prob(self, key: str) -> float:
        return float(self._probs[self.keyspace.index(key)])

    def as_dict(self) -> Dict[str, float]:
        return {k: float(self._probs[i]) for i, k in enumerate(self.keyspace)}

    def __repr__(self) -> str:
        top = max(self.as_dict().items(), key=lambda kv: kv[1])
        return f"Belief(n={len(self.keyspace)}, top={top[0]!r}:{top[1]:.4f})"


def make_prior(
    keyspace: KeySpace,
    lm_dist: Mapping[str, float] | Sequence[float] | np.ndarray,
    undo_prob: float,
) -> Belief:
    """Prior for a fresh key selection: language-model mass scaled by
    ``1 - undo_prob`` with the remainder on UNDO."""
    if not 0.0 <= undo_prob < 1.0:
        raise ValueError(f"undo_prob must be in [0, 1), got {undo_prob}")
    alphabet = keyspace.alphabet
    if isinstance(lm_dist, Mapping):
        chars = np.array([lm_dist[ch] for ch in alphabet.symbols], dtype=float)
    else:
        chars = np.asarray(lm_dist, dtype=float)
        if len(chars) != len(alphabet):
            raise ValueError("lm_dist length does not match the alphabet")
    if abs(chars.sum() - 1.0) > 1e-9:
        raise ValueError(f"lm_dist must sum to 1, got {chars.sum()!r}")
    p = np.empty(len(keyspace))
    p[:-1] = chars * (1.0 - undo_prob)
    p[keyspace.undo_index] = undo_prob
    return Belief(keyspace, p)


def bayes_update(
    belief: Belief,
    assignment,
    observed: Color,
    theta_mean: float,
) -> Belief:
    """Posterior after observing one click of color ``observed``.

    Keys whose assigned color matches the observed click are weighted by
    ``theta_mean``, all others by ``1 - theta_mean``.
    """
    if not 0.0 < theta_mean < 1.0:
        raise ValueError(f"theta_mean must be in (0, 1), got {theta_mean}")
    if assignment.keyspace != belief.keyspace:
        raise ValueError("assignment does not cover the belief's keys")
    match = assignment.is_red if observed is Color.RED else ~assignment.is_red
    loglik = np.where(match, math.log(theta_mean), math.log(1.0 - theta_mean))
    logp = belief.log_probs + loglik
    p = np.exp(logp - logp.max())
    return Belief(belief.keyspace, p)


def check_selection(belief: Belief, threshold: float) -> Optional[str]:
    """The unique key at or above the selection threshold, if any."""
    if not 0.5 < threshold < 1.0:
        raise ValueError(f"threshold must be in (0.5, 1), got {threshold}")
    i = int(np.argmax(belief.probs))
    if belief.probs[i] >= threshold:
        return belief.keyspace.keys[i]
    return None
