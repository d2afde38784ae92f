"""Deterministic replay of target text through a session with injected
click errors.

The simulated user always knows the intended key (the next character of the
target while the typed text is a correct prefix, otherwise UNDO) and clicks
its color, flipped independently with probability ``f`` — a binary
symmetric channel over the click stream.  Every click counts toward clicks
per character, including those spent recovering from wrong selections.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .alphabet import UNDO
from .errors import DivergenceError
from .session import KeySelected, Session, SessionConfig

DEFAULT_CLICK_BUDGET_PER_CHAR = 10_000


@dataclass(frozen=True)
class TraceEntry:
    click: int
    assignment_digest: str
    intended: str
    intended_color: str
    clicked_color: str
    belief_max: float
    selected: Optional[str]


@dataclass(frozen=True)
class SimulationResult:
    target: str
    f: float
    seed: int
    total_clicks: int
    emitted_chars: int
    undo_selections: int
    wrong_selections: int
    cpc: float
    final_text: str
    completed: bool
    trace: Optional[List[TraceEntry]] = None

    def to_dict(self) -> dict:
        d = {
            "target": self.target,
            "f": self.f,
            "seed": self.seed,
            "total_clicks": self.total_clicks,
            "emitted_chars": self.emitted_chars,
            "undo_selections": self.undo_selections,
            "wrong_selections": self.wrong_selections,
            "cpc": self.cpc,
            "final_text": self.final_text,
            "completed": self.completed,
        }
        if self.trace is not None:
            d["trace"] = [t.__dict__ for t in self.trace]
        return d


@dataclass(frozen=True)
class CorpusResult:
    f: float
    seed: int
    texts: int
    total_chars: int
    total_clicks: int
    undo_selections: int
    wrong_selections: int
    mean_cpc: float
    per_text: List[SimulationResult]

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "seed": self.seed,
            "texts": self.texts,
            "total_chars": self.total_chars,
            "total_clicks": self.total_clicks,
            "undo_selections": self.undo_selections,
            "wrong_selections": self.wrong_selections,
            "mean_cpc": self.mean_cpc,
            "per_text": [r.to_dict() for r in self.per_text],
        }


def intended_key(typed: str, target: str) -> Optional[str]:
    """Next character while typed is a proper prefix of target, else UNDO.

    Returns None when the target is fully typed (the run is complete).
    """
    if typed == target:
        return None
    if target.startswith(typed):
        return target[len(typed)]
    return UNDO


def simulate_text(
    config: SessionConfig,
    target: str,
    f: float,
    seed: int,
    collect_trace: bool = False,
    click_budget_per_char: int = DEFAULT_CLICK_BUDGET_PER_CHAR,
) -> SimulationResult:
    """Type ``target`` through a fresh session, flipping clicks at rate ``f``."""
    if not 0.0 <= f <= 0.5:
        raise ValueError(f"error rate must be in [0, 0.5], got {f}")
    target = config.lm.alphabet.normalize(target)
    if not target:
        raise ValueError("target is empty after normalization")
    rng = random.Random(seed)
    session = Session(config)
    budget = click_budget_per_char * len(target)
    clicks = 0
    undos = 0
    wrongs = 0
    trace: Optional[List[TraceEntry]] = [] if collect_trace else None

    while True:
        intended = intended_key(session.typed_text, target)
        if intended is None:
            break
        if clicks >= budget:
            partial = _result(target, f, seed, clicks, undos, wrongs,
                              session, trace or [], completed=False)
            raise DivergenceError(
                f"click budget exhausted after {clicks} clicks "
                f"(target length {len(target)}, f={f})",
                result=partial,
            )
        intended_color = session.assignment.color_of(intended)
        clicked = intended_color.other() if rng.random() < f else intended_color
        events = session.observe_click(clicked)
        clicks += 1
        selected = None
        for ev in events:
            if isinstance(ev, KeySelected):
                selected = ev.key
                if ev.key == UNDO:
                    undos += 1
                if ev.key != intended:
                    wrongs += 1
        if trace is not None:
            trace.append(TraceEntry(
                click=clicks,
                assignment_digest=session.assignment.digest(),
                intended=intended,
                intended_color=intended_color.value,
                clicked_color=clicked.value,
                belief_max=float(session.belief.probs.max()),
                selected=selected,
            ))
    return _result(target, f, seed, clicks, undos, wrongs, session, trace,
                   completed=True)


def _result(target, f, seed, clicks, undos, wrongs, session, trace, completed):
    return SimulationResult(
        target=target,
        f=f,
        seed=seed,
        total_clicks=clicks,
        emitted_chars=len(session.typed_text),
        undo_selections=undos,
        wrong_selections=wrongs,
        cpc=clicks / len(target),
        final_text=session.typed_text,
        completed=completed,
        trace=trace,
    )


def derive_seed(seed: int, index: int) -> int:
    """Stable per-text seed for corpus runs."""
    return seed * 1_000_003 + index


def simulate_corpus(
    config: SessionConfig,
    texts: Sequence[str],
    f: float,
    seed: int,
    click_budget_per_char: int = DEFAULT_CLICK_BUDGET_PER_CHAR,
) -> CorpusResult:
    """Independent per-text runs; aggregate cpc is total clicks over total
    characters (length-weighted), not the mean of per-text ratios."""
    if not texts:
        raise ValueError("texts must be a nonempty list")
    per_text: List[SimulationResult] = []
    for i, text in enumerate(texts):
        try:
            per_text.append(simulate_text(
                config, text, f, derive_seed(seed, i),
                click_budget_per_char=click_budget_per_char,
            ))
        except DivergenceError as exc:
            raise DivergenceError(f"text {i}: {exc}", result=exc.result) from exc
    total_chars = sum(len(r.target) for r in per_text)
    total_clicks = sum(r.total_clicks for r in per_text)
    return CorpusResult(
        f=f,
        seed=seed,
        texts=len(per_text),
        total_chars=total_chars,
        total_clicks=total_clicks,
        undo_selections=sum(r.undo_selections for r in per_text),
        wrong_selections=sum(r.wrong_selections for r in per_text),
        mean_cpc=total_clicks / total_chars,
        per_text=per_text,
    )


def information_rate(clicks_error_free: int, clicks_at_f: int) -> float:
    """Ratio of information bits (error-free clicks) to bits actually sent."""
    if clicks_error_free <= 0 or clicks_at_f <= 0:
        raise ValueError("click counts must be positive")
    return clicks_error_free / clicks_at_f
