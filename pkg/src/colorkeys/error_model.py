"""Online beta-Bernoulli learning of the click-correctness probability.

The chance that an observed click matches the intended key's color is a
stationary Bernoulli parameter theta with a Beta(alpha, beta) posterior.
Counts are only attributed once a key is selected: every click of the
selection is then re-judged against the selected key's color in that
round's assignment.  Each selection's increments are returned as a delta
so an undo can roll the learning back exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .belief import Color
from .coloring import ColorAssignment

DEFAULT_ALPHA = 9.0
DEFAULT_BETA = 1.0

# the Bayes update degenerates at theta 0 or 1, so the likelihood value is
# kept inside this band no matter what the counts say
THETA_CLAMP = (0.02, 0.98)


@dataclass(frozen=True)
class CountDelta:
    correct: int
    incorrect: int

    def __post_init__(self):
        if self.correct < 0 or self.incorrect < 0:
            raise ValueError("count increments must be non-negative")


class ErrorModel:
    """Mutable beta counts, single-owner per session."""

    def __init__(self, alpha0: float = DEFAULT_ALPHA, beta0: float = DEFAULT_BETA):
        if alpha0 <= 0 or beta0 <= 0:
            raise ValueError(f"pseudocounts must be positive, got {alpha0}, {beta0}")
        self.alpha = float(alpha0)
        self.beta = float(beta0)

    @property
    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    @property
    def likelihood_mean(self) -> float:
        """Mean clamped for use inside the Bayes update."""
        lo, hi = THETA_CLAMP
        return min(hi, max(lo, self.mean))

    def record_selection(
        self,
        clicks: Sequence[Tuple[ColorAssignment, Color]],
        selected: str,
    ) -> CountDelta:
        """Attribute the selection's clicks as correct/incorrect and count them.

        A click is correct when its observed color equals the selected key's
        color in that round's assignment.
        """
        correct = 0
        incorrect = 0
        for assignment, observed in clicks:
            if assignment.color_of(selected) is observed:
                correct += 1
            else:
                incorrect += 1
        self.alpha += correct
        self.beta += incorrect
        return CountDelta(correct=correct, incorrect=incorrect)

    def rollback(self, delta: CountDelta) -> None:
        """Exactly reverse a previously applied delta."""
        alpha = self.alpha - delta.correct
        beta = self.beta - delta.incorrect
        if alpha <= 0 or beta <= 0:
            raise ValueError(
                f"rollback of {delta} would leave non-positive counts "
                f"(alpha={alpha}, beta={beta})"
            )
        self.alpha = alpha
        self.beta = beta

    def __repr__(self) -> str:
        return f"ErrorModel(alpha={self.alpha}, beta={self.beta}, mean={self.mean:.4f})"
