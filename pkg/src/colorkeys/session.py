"""The full typing loop: priors, click observation, selection, and undo.

One session owns one typist.  Every click Bayes-updates the belief; when a
key's posterior reaches the selection threshold the key fires: character
keys append to the typed text, the undo key removes the last character and
restores the belief that was current when the removed character's selection
began (with the removed key's probability overwritten by the probability
that the undo itself was wrong).  After every selection the next prior puts
mass ``1 - confidence`` on UNDO, and the error model's learning for an
undone selection is rolled back exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .alphabet import UNDO, KeySpace
from .belief import Belief, Color, bayes_update, check_selection, make_prior
from .coloring import ColorAssignment, make_strategy
from .error_model import DEFAULT_ALPHA, DEFAULT_BETA, CountDelta, ErrorModel
from .errors import ConfigError
from .lm import CharNgramModel

DEFAULT_THRESHOLD = 0.95


# -- events ----------------------------------------------------------------

@dataclass(frozen=True)
class ColorsChanged:
    kind = "COLORS_CHANGED"
    assignment: ColorAssignment

    def payload(self) -> dict:
        return {"colors": self.assignment.as_dict()}


@dataclass(frozen=True)
class KeySelected:
    kind = "KEY_SELECTED"
    key: str
    confidence: float

    def payload(self) -> dict:
        return {"key": self.key, "confidence": self.confidence}


@dataclass(frozen=True)
class TextChanged:
    kind = "TEXT_CHANGED"
    text: str

    def payload(self) -> dict:
        return {"text": self.text}


@dataclass(frozen=True)
class ClickFeedback:
    """Stands in for the audible click played when a key is selected."""
    kind = "CLICK_FEEDBACK"

    def payload(self) -> dict:
        return {}


@dataclass(frozen=True)
class SessionWarning:
    kind = "WARNING"
    message: str

    def payload(self) -> dict:
        return {"message": self.message}


SessionEvent = ColorsChanged | KeySelected | TextChanged | ClickFeedback | SessionWarning


# -- configuration and records ----------------------------------------------

@dataclass(frozen=True)
class SessionConfig:
    lm: CharNgramModel
    threshold: float = DEFAULT_THRESHOLD
    strategy: str = "greedy"
    hybrid_threshold: float = 0.02
    alpha0: float = DEFAULT_ALPHA
    beta0: float = DEFAULT_BETA
    min_clicks: int = 1
    learn_on_undo_selection: bool = True
    # guard for min_clicks=0, where a confident prior can fire selections
    # with no click at all
    max_cascade: int = 1000

    def __post_init__(self):
        if not 0.5 < self.threshold < 1.0:
            raise ConfigError(f"threshold must be in (0.5, 1), got {self.threshold}")
        if self.min_clicks < 0:
            raise ConfigError(f"min_clicks must be >= 0, got {self.min_clicks}")
        if self.alpha0 <= 0 or self.beta0 <= 0:
            raise ConfigError("alpha0 and beta0 must be positive")
        make_strategy(self.strategy, self.hybrid_threshold)  # validates the id


@dataclass(frozen=True)
class SelectionRecord:
    key: str
    confidence: float
    start_belief: Belief
    delta: Optional[CountDelta]


@dataclass(frozen=True)
class StateView:
    typed_text: str
    belief: Belief
    assignment: ColorAssignment
    theta_mean: float
    alpha: float
    beta: float
    step: int
    selections: int
    clicks_in_selection: int
    closed: bool


# -- the session itself ------------------------------------------------------

class Session:
    """Single-owner mutable state; all mutation goes through observe_click."""

    def __init__(self, config: SessionConfig):
        self.config = config
        self.lm = config.lm
        self.keyspace = KeySpace(config.lm.alphabet)
        self.error_model = ErrorModel(config.alpha0, config.beta0)
        self._strategy = make_strategy(config.strategy, config.hybrid_threshold)
        self.typed_text = ""
        self.step = 0
        self.selections = 0
        self.closed = False
        self._char_records: List[SelectionRecord] = []
        self.history: List[SelectionRecord] = []
        self._clicks: List[Tuple[ColorAssignment, Color]] = []
        # no selection exists yet, so there is nothing to undo
        self._begin_selection(self._fresh_prior(undo_prob=0.0))

    # -- helpers ----------------------------------------------------------

    def _fresh_prior(self, undo_prob: float) -> Belief:
        lm_dist = self.lm.next_char_probs(self.typed_text)
        return make_prior(self.keyspace, lm_dist, undo_prob)

    def _begin_selection(self, prior: Belief) -> None:
        self.belief = prior
        self._selection_start_belief = prior
        self._clicks = []
        self.assignment = self._strategy(prior, self.error_model.mean)

    def _post_undo_prior(self, undone: SelectionRecord, undo_confidence: float) -> Belief:
        """Reset to the undone selection's starting belief, overwrite the
        undone key with the probability the undo was wrong, renormalize."""
        snapshot = undone.start_belief.probs.copy()
        i = self.keyspace.index(undone.key)
        remaining = 1.0 - snapshot[i]
        snapshot *= undo_confidence / remaining
        snapshot[i] = 1.0 - undo_confidence
        return Belief(self.keyspace, snapshot)

    def _complete_selection(self, selected: str) -> List[SessionEvent]:
        confidence = self.belief.prob(selected)
        clicks = self._clicks
        events: List[SessionEvent] = [
            KeySelected(key=selected, confidence=confidence),
            ClickFeedback(),
        ]
        self.selections += 1
        if selected == UNDO:
            delta = None
            if self.config.learn_on_undo_selection:
                delta = self.error_model.record_selection(clicks, UNDO)
            self.history.append(SelectionRecord(
                key=UNDO, confidence=confidence,
                start_belief=self._selection_start_belief, delta=delta,
            ))
            if self.typed_text:
                undone = self._char_records.pop()
                self.typed_text = self.typed_text[:-1]
                events.append(TextChanged(text=self.typed_text))
                if undone.delta is not None:
                    self.error_model.rollback(undone.delta)
                prior = self._post_undo_prior(undone, confidence)
            else:
                # nothing to remove; the confidence bookkeeping still applies
                prior = self._fresh_prior(undo_prob=1.0 - confidence)
        else:
            delta = self.error_model.record_selection(clicks, selected)
            record = SelectionRecord(
                key=selected, confidence=confidence,
                start_belief=self._selection_start_belief, delta=delta,
            )
            self.history.append(record)
            self._char_records.append(record)
            self.typed_text += selected
            events.append(TextChanged(text=self.typed_text))
            prior = self._fresh_prior(undo_prob=1.0 - confidence)
        self._begin_selection(prior)
        return events

    # -- public surface ----------------------------------------------------

    def observe_click(self, color: Color) -> List[SessionEvent]:
        """Feed one click; returns the events it caused, in causal order."""
        if self.closed:
            return [SessionWarning(message="session is closed; click ignored")]
        self.step += 1
        self._clicks.append((self.assignment, color))
        self.belief = bayes_update(
            self.belief, self.assignment, color,
            self.error_model.likelihood_mean,
        )
        selected = None
        if len(self._clicks) >= self.config.min_clicks:
            selected = check_selection(self.belief, self.config.threshold)
        if selected is None:
            self.assignment = self._strategy(self.belief, self.error_model.mean)
            return [ColorsChanged(assignment=self.assignment)]
        events = self._complete_selection(selected)
        if self.config.min_clicks == 0:
            cascades = 0
            while True:
                follow_on = check_selection(self.belief, self.config.threshold)
                if follow_on is None:
                    break
                cascades += 1
                if cascades > self.config.max_cascade:
                    raise RuntimeError(
                        "zero-click selection cascade exceeded max_cascade; "
                        "the prior keeps crossing the threshold on its own"
                    )
                events.extend(self._complete_selection(follow_on))
        events.append(ColorsChanged(assignment=self.assignment))
        return events

    def current_state(self) -> StateView:
        return StateView(
            typed_text=self.typed_text,
            belief=self.belief,
            assignment=self.assignment,
            theta_mean=self.error_model.mean,
            alpha=self.error_model.alpha,
            beta=self.error_model.beta,
            step=self.step,
            selections=self.selections,
            clicks_in_selection=len(self._clicks),
            closed=self.closed,
        )

    def close(self) -> None:
        self.closed = True


def start_session(config: SessionConfig) -> Session:
    return Session(config)
