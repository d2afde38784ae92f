"""Red/blue key coloring chosen to maximize the information in one click.

Making the observed-color distribution as close to equiprobable as possible
maximizes its entropy; splitting the belief mass evenly across two colors is
the classic partition problem, approximated here by the greedy heuristic.
A Huffman-tree split is available as an alternative, plus a hybrid that uses
Huffman while the estimated click-error rate stays below a threshold.
"""

from __future__ import annotations

import heapq
from typing import Callable, Dict, List

import numpy as np

from .alphabet import KeySpace
from .belief import Belief, Color
from .metrics import binary_entropy

HYBRID_ERROR_THRESHOLD = 0.02


class ColorAssignment:
    """Total map key -> color for one click round."""

    __slots__ = ("keyspace", "is_red", "red_mass")

    def __init__(self, keyspace: KeySpace, is_red: np.ndarray, red_mass: float):
        is_red = np.asarray(is_red, dtype=bool)
        if len(is_red) != len(keyspace):
            raise ValueError("color mask does not cover the key space")
        is_red.setflags(write=False)
        self.keyspace = keyspace
        self.is_red = is_red
        self.red_mass = float(red_mass)

    def color_of(self, key: str) -> Color:
        return Color.RED if self.is_red[self.keyspace.index(key)] else Color.BLUE

    def as_dict(self) -> Dict[str, str]:
        return {k: ("RED" if self.is_red[i] else "BLUE")
                for i, k in enumerate(self.keyspace)}

    def digest(self) -> str:
        """Compact trace form: R/B per key in stable key order."""
        return "".join("R" if r else "B" for r in self.is_red)


def assign_greedy(belief: Belief) -> ColorAssignment:
    """Sort keys by probability descending and put each in the lighter bin.

    Ties in probability break by stable key index; a mass tie sends the key
    to RED.  The final mass difference never exceeds the largest single-key
    probability.
    """
    p = belief.probs
    n = len(p)
    order = np.lexsort((np.arange(n), -p))
    is_red = np.zeros(n, dtype=bool)
    red_mass = 0.0
    blue_mass = 0.0
    for i in order:
        if red_mass <= blue_mass:
            is_red[i] = True
            red_mass += p[i]
        else:
            blue_mass += p[i]
    return ColorAssignment(belief.keyspace, is_red, red_mass)


def assign_huffman(belief: Belief) -> ColorAssignment:
    """Color keys by membership in the root subtrees of a Huffman tree.

    Nodes merge lowest-probability first; ties break by stable key index
    (internal nodes rank after all leaves, in creation order).  The
    smaller-probability subtree of the final merge becomes RED.
    """
    p = belief.probs
    n = len(p)
    is_red = np.zeros(n, dtype=bool)
    if n == 1:
        is_red[0] = True
        return ColorAssignment(belief.keyspace, is_red, float(p[0]))
    # heap entries: (probability, tiebreak, leaf index list); leaves rank by
    # key index, internal nodes after all leaves in creation order
    heap: List = [(float(p[i]), i, [i]) for i in range(n)]
    heapq.heapify(heap)
    next_id = n
    left = right = heap[0]
    while len(heap) > 1:
        left = heapq.heappop(heap)
        right = heapq.heappop(heap)
        heapq.heappush(heap, (left[0] + right[0], next_id, left[2] + right[2]))
        next_id += 1
    # the last merge joined the root's two subtrees; the smaller-ranked one
    # (left) becomes RED
    for i in left[2]:
        is_red[i] = True
    red_mass = float(p[left[2]].sum())
    return ColorAssignment(belief.keyspace, is_red, red_mass)


def color_entropy(assignment: ColorAssignment) -> float:
    """Entropy in bits of the observed-color distribution."""
    return binary_entropy(assignment.red_mass)


#: Strategies take the belief plus the current click-correctness estimate;
#: greedy and huffman ignore the estimate.
Strategy = Callable[[Belief, float], ColorAssignment]


def make_strategy(name: str, hybrid_threshold: float = HYBRID_ERROR_THRESHOLD) -> Strategy:
    """Resolve a strategy id: ``greedy``, ``huffman`` or ``hybrid``.

    The hybrid uses Huffman while the estimated error rate ``1 - theta``
    stays below ``hybrid_threshold`` and greedy otherwise.
    """
    if name == "greedy":
        return lambda belief, theta_mean: assign_greedy(belief)
    if name == "huffman":
        return lambda belief, theta_mean: assign_huffman(belief)
    if name == "hybrid":
        def hybrid(belief: Belief, theta_mean: float) -> ColorAssignment:
            if 1.0 - theta_mean < hybrid_threshold:
                return assign_huffman(belief)
            return assign_greedy(belief)
        return hybrid
    raise ValueError(f"unknown color strategy {name!r}")


STRATEGY_NAMES = ("greedy", "huffman", "hybrid")
