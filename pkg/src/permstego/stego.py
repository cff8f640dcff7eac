"""Bind permutation codes to visible cover lists and secret baseline keys.

The channel works against a baseline ordering of the cover items. By default
that is the byte-wise lexicographic sort, which any observer can reconstruct;
a key (an arbitrary permutation of 0..n-1) replaces the baseline on both
sides and must be shared out of band.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .alphabet import Alphabet
from .errors import (
    CoverTooSmall,
    DuplicateItem,
    ItemNotInBaseline,
    KeyLengthMismatch,
    LengthMismatch,
    SentinelMissing,
)
from .factoradic import (
    check_permutation,
    decode_permutation,
    encode_permutation,
    min_factorial_length,
)
from .radix import append_sentinel, message_to_natural, natural_to_message, strip_sentinel


@dataclass(frozen=True)
class DecodedMessage:
    """Decoded plaintext plus whether the trailing sentinel was present.

    sentinel_found is None when sentinel handling was turned off, True when a
    sentinel was found and stripped, and False when one was expected but the
    decoded text did not end with it (the text is then returned unmodified).
    """

    text: str
    sentinel_found: bool | None


def canonical_baseline(items: list[str]) -> list[str]:
    """Cover items sorted by byte-wise lexicographic comparison."""
    _check_distinct(items)
    return sorted(items)


def apply_code(baseline: list[str], code: list[int]) -> list[str]:
    """Reorder `baseline` so position k shows baseline[code[k]]."""
    if len(baseline) != len(code):
        raise LengthMismatch(f"cover has {len(baseline)} items but the code has {len(code)}")
    check_permutation(code)
    return [baseline[entry] for entry in code]


def recover_code(observed: list[str], baseline: list[str]) -> list[int]:
    """Positions of the observed items within the baseline; inverts apply_code."""
    _check_distinct(baseline)
    _check_distinct(observed)
    if len(observed) != len(baseline):
        raise LengthMismatch(
            f"observed list has {len(observed)} items but the baseline has {len(baseline)}"
        )
    positions = {item: k for k, item in enumerate(baseline)}
    code = []
    for item in observed:
        if item not in positions:
            raise ItemNotInBaseline(f"item {item!r} does not appear in the baseline")
        code.append(positions[item])
    return code


def encode_message(
    text: str,
    alphabet: Alphabet,
    baseline: list[str],
    key: list[int] | None = None,
    sentinel: bool = True,
) -> list[str]:
    """Reorder the cover so its ordering carries `text`.

    The permutation length is always the full cover length, so spare capacity
    shows up as an identity-ordered prefix rather than leaking the message
    size. With a key, the code is measured against the keyed baseline instead
    of the canonical one.
    """
    _check_distinct(baseline)
    n = len(baseline)
    if key is not None:
        _check_key(key, n)
    payload = append_sentinel(text, alphabet) if sentinel else text
    value = message_to_natural(payload, alphabet)
    required = min_factorial_length(value)
    if required > n:
        raise CoverTooSmall(n, required)
    code = encode_permutation(value, n)
    if key is not None:
        code = [key[entry] for entry in code]
    return apply_code(baseline, code)


def decode_message(
    observed: list[str],
    alphabet: Alphabet,
    baseline: list[str],
    key: list[int] | None = None,
    sentinel: bool = True,
) -> DecodedMessage:
    """Recover the message carried by the ordering of `observed`.

    A missing sentinel is reported via the sentinel_found flag rather than an
    error, so lists encoded without one still decode to their raw text.
    """
    code = recover_code(observed, baseline)
    if key is not None:
        _check_key(key, len(baseline))
        inverse = [0] * len(key)
        for position, entry in enumerate(key):
            inverse[entry] = position
        code = [inverse[entry] for entry in code]
    raw = natural_to_message(decode_permutation(code), alphabet)
    if not sentinel:
        return DecodedMessage(text=raw, sentinel_found=None)
    try:
        return DecodedMessage(text=strip_sentinel(raw, alphabet), sentinel_found=True)
    except SentinelMissing:
        return DecodedMessage(text=raw, sentinel_found=False)


def generate_key(length: int, seed: int) -> list[int]:
    """Uniformly random permutation of 0..length-1, deterministic in `seed`.

    Fisher-Yates via random.Random, so every permutation is equally likely.
    Seeded generation is not promised to match other implementations; exchange
    keys as explicit lists when interoperating.
    """
    if length < 1:
        raise ValueError("length must be positive")
    order = list(range(length))
    Random(seed).shuffle(order)
    return order


def parse_cover(text: str) -> list[str]:
    """Cover items from text: one per line, blank and '#' lines ignored."""
    return [
        line
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


def load_cover(path) -> list[str]:
    """Load a UTF-8 cover list file (see parse_cover); order is preserved."""
    with open(path, encoding="utf-8") as handle:
        return parse_cover(handle.read())


def parse_key(text: str) -> list[int]:
    """Parse a bracketed comma-separated integer list like [5,0,9,10,1,4,6,3,2,8,7]."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected a bracketed list like [2,0,1], got {body!r}")
    inner = body[1:-1].strip()
    if not inner:
        return []
    return [int(token) for token in inner.split(",")]


def load_key(path) -> list[int]:
    """Load a key file: a single bracketed integer list."""
    with open(path, encoding="utf-8") as handle:
        return parse_key(handle.read())


def format_key(key: list[int]) -> str:
    """Render a key in the exchangeable single-line format."""
    return "[" + ",".join(str(entry) for entry in key) + "]"


def _check_distinct(items: list[str]) -> None:
    seen = set()
    for item in items:
        if item in seen:
            raise DuplicateItem(f"item {item!r} appears more than once")
        seen.add(item)


def _check_key(key: list[int], length: int) -> None:
    if len(key) != length:
        raise KeyLengthMismatch(f"key has {len(key)} entries for a {length}-item cover")
    check_permutation(key)
