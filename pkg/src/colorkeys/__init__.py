"""Two-button Bayesian text entry.

A virtual keyboard assigns every key one of two colors each round; the user
clicks the button matching their key's color, and Bayesian inference over a
character n-gram prior narrows down the intended key.  Click errors are
learned online with beta-Bernoulli counts, and an undo key repairs wrong
selections while rolling that learning back.
"""

from .alphabet import DEFAULT_SYMBOLS, UNDO, Alphabet, KeySpace
from .belief import (
    PROB_FLOOR,
    Belief,
    Color,
    bayes_update,
    check_selection,
    make_prior,
)
from .coloring import (
    ColorAssignment,
    assign_greedy,
    assign_huffman,
    color_entropy,
    make_strategy,
)
from .error_model import THETA_CLAMP, CountDelta, ErrorModel
from .errors import (
    ColorkeysError,
    ConfigError,
    DivergenceError,
    EvaluationError,
    ModelFormatError,
    TrainingError,
)
from .lm import MAX_ORDER, CharNgramModel, train, train_file
from .metrics import (
    CapacityCurve,
    CapacityPoint,
    binary_entropy,
    build_capacity_curve,
    channel_capacity,
)
from .session import (
    ClickFeedback,
    ColorsChanged,
    KeySelected,
    Session,
    SessionConfig,
    SessionWarning,
    StateView,
    TextChanged,
    start_session,
)
from .simulate import (
    CorpusResult,
    SimulationResult,
    information_rate,
    intended_key,
    simulate_corpus,
    simulate_text,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "KeySpace", "UNDO", "DEFAULT_SYMBOLS",
    "Belief", "Color", "PROB_FLOOR", "make_prior", "bayes_update", "check_selection",
    "ColorAssignment", "assign_greedy", "assign_huffman", "color_entropy", "make_strategy",
    "ErrorModel", "CountDelta", "THETA_CLAMP",
    "CharNgramModel", "train", "train_file", "MAX_ORDER",
    "binary_entropy", "channel_capacity", "build_capacity_curve",
    "CapacityCurve", "CapacityPoint",
    "Session", "SessionConfig", "StateView", "start_session",
    "ColorsChanged", "KeySelected", "TextChanged", "ClickFeedback", "SessionWarning",
    "simulate_text", "simulate_corpus", "intended_key", "information_rate",
    "SimulationResult", "CorpusResult",
    "ColorkeysError", "ConfigError", "TrainingError", "EvaluationError",
    "ModelFormatError", "DivergenceError",
]
