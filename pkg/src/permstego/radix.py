"""Plaintext <-> integer conversion over an alphabet.

A message is read as a positional number in base `alphabet.size`, first
character least significant. All arithmetic is exact Python integers; no
floating point touches the codec path.
"""

from .alphabet import Alphabet
from .errors import SentinelMissing


def message_to_natural(text: str, alphabet: Alphabet) -> int:
    """Value of `text` read digit-by-digit, first character least significant.

    The empty message maps to 0.
    """
    value = 0
    for symbol in reversed(text):
        value = value * alphabet.size + alphabet.index_of(symbol)
    return value


def natural_to_message(value: int, alphabet: Alphabet) -> str:
    """Inverse of message_to_natural: repeated division by the base.

    0 maps to the empty message, and the output never ends with the
    zero-valued symbol (a number has no leading zero digits).
    """
    if value < 0:
        raise ValueError("value must be nonnegative")
    out = []
    while value > 0:
        value, digit = divmod(value, alphabet.size)
        out.append(alphabet.symbols[digit])
    return "".join(out)


def sentinel_symbol(alphabet: Alphabet) -> str:
    """The symbol appended to protect trailing zero-valued characters."""
    return alphabet.symbols[1]


def append_sentinel(text: str, alphabet: Alphabet) -> str:
    """Append the sentinel symbol.

    Messages ending in the zero-valued symbol lose those characters in the
    numeric round trip (trailing zeros are high-order zero digits); a nonzero
    final digit makes every message decode uniquely.
    """
    return text + sentinel_symbol(alphabet)


def strip_sentinel(text: str, alphabet: Alphabet) -> str:
    """Remove exactly one trailing sentinel symbol.

    Raises SentinelMissing when the text does not end with it.
    """
    marker = sentinel_symbol(alphabet)
    if not text.endswith(marker):
        raise SentinelMissing(f"text does not end with the sentinel symbol {marker!r}")
    return text[: -len(marker)]
