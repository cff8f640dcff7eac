"""Symbol-to-digit mappings that let plaintext be read as a positional number.

An alphabet assigns each symbol its zero-based position as a digit value, so
ordering the symbols differently changes the numeric value of every message.
The frequency-ordered constructor exploits that: common letters get small
digits, which shrinks the numbers that long messages map to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib.resources import files
from typing import Iterable

from .errors import AlphabetTooSmall, DuplicateSymbol, SymbolNotInAlphabet

DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz "


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols; a symbol's position is its digit value."""

    symbols: str
    _positions: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        positions: dict[str, int] = {}
        for k, ch in enumerate(self.symbols):
            if ch in positions:
                raise DuplicateSymbol(f"symbol {ch!r} appears more than once")
            positions[ch] = k
        if len(positions) < 2:
            # a single-symbol alphabet maps every message to the same value
            raise AlphabetTooSmall("an alphabet needs at least 2 distinct symbols")
        object.__setattr__(self, "_positions", positions)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._positions

    def index_of(self, symbol: str) -> int:
        """Digit value of `symbol`, i.e. its zero-based position."""
        try:
            return self._positions[symbol]
        except KeyError:
            raise SymbolNotInAlphabet(f"{symbol!r} is not in the alphabet") from None


@dataclass(frozen=True)
class FrequencyTable:
    """Nonnegative weight per symbol, used to order alphabets by frequency."""

    entries: dict[str, float]

    def __post_init__(self):
        if len(self.entries) < 2:
            raise AlphabetTooSmall("a frequency table needs at least 2 entries")
        for ch, weight in self.entries.items():
            if len(ch) != 1:
                raise ValueError(f"table keys must be single characters, got {ch!r}")
            if weight < 0:
                raise ValueError(f"negative weight {weight} for {ch!r}")


def make_alphabet(symbols: Iterable[str]) -> Alphabet:
    """Build an alphabet whose digit values follow the given symbol order."""
    return Alphabet("".join(symbols))


def frequency_ordered_alphabet(table: FrequencyTable) -> Alphabet:
    """Alphabet sorted by descending weight; ties break by ascending code point.

    The tie-break keeps the ordering deterministic, which both ends of a
    channel must agree on to interoperate.
    """
    ordered = sorted(table.entries, key=lambda ch: (-table.entries[ch], ch))
    return make_alphabet(ordered)


def parse_frequency_table(text: str, origin: str = "<string>") -> FrequencyTable:
    """Parse frequency-table text: one `<char><TAB><weight>` per line.

    Lines starting with '#' and blank lines are ignored. The character field
    is taken verbatim, so a space character is a legal entry.
    """
    entries: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        char, sep, weight = line.partition("\t")
        if not sep or len(char) != 1:
            raise ValueError(f"{origin}:{lineno}: expected '<char>\\t<weight>', got {line!r}")
        if char in entries:
            raise DuplicateSymbol(f"{origin}:{lineno}: repeated entry for {char!r}")
        entries[char] = float(weight)
    return FrequencyTable(entries)


def load_frequency_table(path) -> FrequencyTable:
    """Load a frequency table from a text file (see parse_frequency_table)."""
    with open(path, encoding="utf-8") as handle:
        return parse_frequency_table(handle.read(), origin=str(path))


def english_letter_table() -> FrequencyTable:
    """Bundled relative frequencies of the 26 English letters."""
    resource = files("permstego").joinpath("data/english_letter_frequencies.txt")
    return parse_frequency_table(resource.read_text(encoding="utf-8"), origin="english_letter_frequencies.txt")


DEFAULT27 = make_alphabet(DEFAULT_SYMBOLS)
