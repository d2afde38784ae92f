"""Key inventory and text normalization.

The keyboard offers one key per alphabet symbol plus a single UNDO key.
All text entering the system (training corpora, simulation targets, query
contexts) is normalized against the alphabet so that every character the
models see is a known symbol.
"""

from __future__ import annotations

from typing import Iterable

DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz '"

#: Sentinel identity of the undo key.  Symbol keys are single characters,
#: so the four-character name can never collide with one.
UNDO = "UNDO"


class Alphabet:
    """Ordered, duplicate-free set of single-character symbols."""

    def __init__(self, symbols: Iterable[str] = DEFAULT_SYMBOLS):
        symbols = "".join(symbols)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        seen = set()
        for ch in symbols:
            if len(ch) != 1:
                raise ValueError("alphabet symbols must be single characters")
            if ch in seen:
                raise ValueError(f"duplicate alphabet symbol: {ch!r}")
            seen.add(ch)
        self.symbols = symbols
        self._index = {ch: i for i, ch in enumerate(symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __repr__(self) -> str:
        return f"Alphabet({self.symbols!r})"

    def index(self, ch: str) -> int:
        return self._index[ch]

    def map_char(self, ch: str) -> str:
        """Map one character into the alphabet (unknown chars become space)."""
        if ch in self._index:
            return ch
        low = ch.lower()
        if low in self._index:
            return low
        return " " if " " in self._index else ""

    def normalize(self, text: str) -> str:
        """Normalize a line: lowercase, unknown chars to space, collapse runs.

        Runs of spaces (including those created by substitution) collapse to
        a single space and the ends are stripped, matching how the bundled
        corpora are prepared.
        """
        mapped = "".join(self.map_char(ch) for ch in text)
        if " " in self._index:
            mapped = " ".join(part for part in mapped.split(" ") if part)
        return mapped

    def normalize_context(self, text: str) -> str:
        """Normalize a query context without collapsing or stripping.

        Contexts are positional (the most recent characters matter), so
        spaces are preserved one-for-one.
        """
        return "".join(self.map_char(ch) for ch in text)


class KeySpace:
    """The selectable keys: one per alphabet symbol, then UNDO last.

    Key index is the stable ordering used for tie-breaking everywhere.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.keys = tuple(alphabet.symbols) + (UNDO,)
        self._index = {k: i for i, k in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self):
        return iter(self.keys)

    def __contains__(self, key: str) -> bool:
        return key in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, KeySpace) and self.keys == other.keys

    def index(self, key: str) -> int:
        return self._index[key]

    @property
    def undo_index(self) -> int:
        return len(self.keys) - 1
