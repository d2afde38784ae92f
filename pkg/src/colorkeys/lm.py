"""Character n-gram language model with interpolated Witten-Bell smoothing.

The model supplies the prior over the next character given what the user has
already typed.  Smoothing interpolates maximum-likelihood estimates across
all orders down to the uniform distribution, which guarantees every symbol a
strictly positive probability for any context.

For a context ``h`` at level ``k`` (``len(h) == k - 1``)::

    P_k(w | h) = lam(h) * c(h+w)/c(h) + (1 - lam(h)) * P_{k-1}(w | h[1:])
    lam(h)     = c(h) / (c(h) + t(h))

where ``c(h)`` counts length-``k`` training windows starting with ``h`` and
``t(h)`` counts the distinct symbols observed after ``h``.  The recursion
bottoms out at ``P_0(w) = 1 / |alphabet|``.
"""

from __future__ import annotations

import gzip
import io
import json
import math
from typing import Dict, Iterable

import numpy as np

from .alphabet import Alphabet
from .errors import ConfigError, EvaluationError, ModelFormatError, TrainingError

MAX_ORDER = 16

_MAGIC = "colorkeys-lm"
_FORMAT_VERSION = 1
_SMOOTHING_ID = "witten-bell-interpolated"

_DIST_CACHE_CAP = 65536


class CharNgramModel:
    """Immutable after construction; safe for concurrent readers."""

    def __init__(
        self,
        order: int,
        alphabet: Alphabet,
        counts: Dict[str, int],
        lines: int,
        tokens: int,
    ):
        self.order = order
        self.alphabet = alphabet
        self._counts = counts
        self.lines = lines
        self.tokens = tokens
        self._ctx_total: Dict[str, int] = {}
        self._ctx_distinct: Dict[str, int] = {}
        for ngram, count in counts.items():
            ctx = ngram[:-1]
            self._ctx_total[ctx] = self._ctx_total.get(ctx, 0) + count
            self._ctx_distinct[ctx] = self._ctx_distinct.get(ctx, 0) + 1
        self._symbols = list(alphabet.symbols)
        self._dist_cache: Dict[str, np.ndarray] = {}

    # -- queries ---------------------------------------------------------

    def _truncate(self, context: str) -> str:
        context = self.alphabet.normalize_context(context)
        if len(context) > self.order - 1:
            context = context[len(context) - (self.order - 1):]
        return context

    def prob(self, char: str, context: str = "") -> float:
        """Smoothed P(char | context), context truncated to order - 1 chars."""
        if char not in self.alphabet:
            raise ValueError(f"character {char!r} is not in the alphabet")
        h = self._truncate(context)
        p = 1.0 / len(self.alphabet)
        for m in range(len(h) + 1):
            ctx = h[len(h) - m:]
            total = self._ctx_total.get(ctx, 0)
            if total == 0:
                continue
            lam = total / (total + self._ctx_distinct[ctx])
            ml = self._counts.get(ctx + char, 0) / total
            p = lam * ml + (1.0 - lam) * p
        return p

    def next_char_probs(self, context: str = "") -> np.ndarray:
        """Distribution over the alphabet, aligned with alphabet order."""
        h = self._truncate(context)
        cached = self._dist_cache.get(h)
        if cached is not None:
            return cached
        v = len(self._symbols)
        p = np.full(v, 1.0 / v)
        for m in range(len(h) + 1):
            ctx = h[len(h) - m:]
            total = self._ctx_total.get(ctx, 0)
            if total == 0:
                continue
            lam = total / (total + self._ctx_distinct[ctx])
            counts = self._counts
            ml = np.array([counts.get(ctx + w, 0) for w in self._symbols], dtype=float)
            p = lam * (ml / total) + (1.0 - lam) * p
        p.setflags(write=False)
        if len(self._dist_cache) >= _DIST_CACHE_CAP:
            self._dist_cache.clear()
        self._dist_cache[h] = p
        return p

    def next_char_distribution(self, context: str = "") -> Dict[str, float]:
        """Same distribution as a symbol -> probability map."""
        probs = self.next_char_probs(context)
        return {w: float(probs[i]) for i, w in enumerate(self._symbols)}

    def cross_entropy(self, text: str) -> float:
        """Bits per character of ``text`` under the model.

        The text is normalized first; contexts grow from the start of the
        text and are truncated to order - 1 characters.
        """
        text = self.alphabet.normalize(text)
        if not text:
            raise EvaluationError("text is empty after normalization")
        bits = 0.0
        for i, ch in enumerate(text):
            bits -= math.log2(self.prob(ch, text[:i]))
        return bits / len(text)

    def corpus_cross_entropy(self, lines: Iterable[str]) -> float:
        """Length-weighted bits per character over many lines."""
        total_bits = 0.0
        total_chars = 0
        for line in lines:
            norm = self.alphabet.normalize(line)
            if not norm:
                continue
            for i, ch in enumerate(norm):
                total_bits -= math.log2(self.prob(ch, norm[:i]))
            total_chars += len(norm)
        if total_chars == 0:
            raise EvaluationError("no evaluable characters")
        return total_bits / total_chars

    # -- serialization ---------------------------------------------------

    def save(self, path: str) -> None:
        records = sorted(self._counts.items())
        with _open_write(path) as f:
            f.write(f"{_MAGIC} v{_FORMAT_VERSION}\n")
            f.write(f"order {self.order}\n")
            f.write(f"alphabet {json.dumps(self.alphabet.symbols)}\n")
            f.write(f"smoothing {_SMOOTHING_ID}\n")
            f.write(f"stats lines={self.lines} tokens={self.tokens} records={len(records)}\n")
            for ngram, count in records:
                f.write(f"{ngram}\t{count}\n")

    @classmethod
    def load(cls, path: str) -> "CharNgramModel":
        with _open_read(path) as f:
            return cls._parse(f)

    @classmethod
    def _parse(cls, f) -> "CharNgramModel":
        def fail(msg: str, line_no: int):
            raise ModelFormatError(msg, line=line_no)

        header = f.readline().rstrip("\n")
        if header != f"{_MAGIC} v{_FORMAT_VERSION}":
            fail(f"expected header {_MAGIC!r} v{_FORMAT_VERSION}, got {header!r}", 1)
        fields = {}
        for line_no, name in ((2, "order"), (3, "alphabet"), (4, "smoothing"), (5, "stats")):
            raw = f.readline().rstrip("\n")
            key, _, value = raw.partition(" ")
            if key != name or not value:
                fail(f"expected {name!r} field, got {raw!r}", line_no)
            fields[name] = value
        try:
            order = int(fields["order"])
        except ValueError:
            fail(f"order is not an integer: {fields['order']!r}", 2)
        try:
            symbols = json.loads(fields["alphabet"])
            alphabet = Alphabet(symbols)
        except (ValueError, TypeError) as exc:
            fail(f"bad alphabet: {exc}", 3)
        if fields["smoothing"] != _SMOOTHING_ID:
            fail(f"unsupported smoothing {fields['smoothing']!r}", 4)
        stats = {}
        try:
            for part in fields["stats"].split():
                key, _, value = part.partition("=")
                stats[key] = int(value)
            lines, tokens, n_records = stats["lines"], stats["tokens"], stats["records"]
        except (ValueError, KeyError):
            fail(f"bad stats line: {fields['stats']!r}", 5)

        counts: Dict[str, int] = {}
        line_no = 5
        for raw in f:
            line_no += 1
            raw = raw.rstrip("\n")
            if not raw:
                continue
            parts = raw.split("\t")
            if len(parts) != 2:
                fail(f"expected 'ngram<TAB>count', got {raw!r}", line_no)
            ngram, count_str = parts
            if not 1 <= len(ngram) <= order:
                fail(f"ngram length {len(ngram)} outside 1..{order}", line_no)
            for ch in ngram:
                if ch not in alphabet:
                    fail(f"ngram contains out-of-alphabet char {ch!r}", line_no)
            try:
                count = int(count_str)
            except ValueError:
                fail(f"count is not an integer: {count_str!r}", line_no)
            if count <= 0:
                fail(f"count must be positive, got {count}", line_no)
            if ngram in counts:
                fail(f"duplicate record for ngram {ngram!r}", line_no)
            counts[ngram] = count
        if len(counts) != n_records:
            raise ModelFormatError(
                f"header promised {n_records} records, file has {len(counts)}"
            )
        return cls(order=order, alphabet=alphabet, counts=counts,
                   lines=lines, tokens=tokens)


def train(
    corpus: Iterable[str],
    order: int = 8,
    alphabet: Alphabet | None = None,
) -> CharNgramModel:
    """Count n-grams of every length up to ``order`` over normalized lines."""
    if order < 1:
        raise ConfigError(f"order must be >= 1, got {order}")
    if order > MAX_ORDER:
        raise ConfigError(f"order must be <= {MAX_ORDER}, got {order}")
    alphabet = alphabet or Alphabet()
    counts: Dict[str, int] = {}
    n_lines = 0
    n_tokens = 0
    for line in corpus:
        norm = alphabet.normalize(line)
        if not norm:
            continue
        n_lines += 1
        n_tokens += len(norm)
        for k in range(1, order + 1):
            for i in range(len(norm) - k + 1):
                ngram = norm[i:i + k]
                counts[ngram] = counts.get(ngram, 0) + 1
    if n_tokens == 0:
        raise TrainingError("corpus is empty after normalization")
    return CharNgramModel(order=order, alphabet=alphabet, counts=counts,
                          lines=n_lines, tokens=n_tokens)


def train_file(path: str, order: int = 8, alphabet: Alphabet | None = None) -> CharNgramModel:
    with open(path, encoding="utf-8") as f:
        return train(f, order=order, alphabet=alphabet)


def _open_write(path: str) -> io.TextIOBase:
    if str(path).endswith(".gz"):
        return gzip.open(path, "wt", encoding="utf-8")
    return open(path, "w", encoding="utf-8")


def _open_read(path: str) -> io.TextIOBase:
    if str(path).endswith(".gz"):
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")
