"""Hide text messages in the ordering of innocuous lists.

A message becomes an integer over an alphabet, the integer becomes a
permutation via factorial-base digits, and the permutation reorders a cover
list (movie rankings, rosters, inventories). Decoding reverses each step
against the agreed baseline ordering of the cover.
"""

from .alphabet import (
    DEFAULT27,
    DEFAULT_SYMBOLS,
    Alphabet,
    FrequencyTable,
    english_letter_table,
    frequency_ordered_alphabet,
    load_frequency_table,
    make_alphabet,
)
from .analysis import (
    PositionEntropyTable,
    ScalingRecord,
    channel_capacity_bits,
    estimate_position_entropy,
    message_length_scaling,
    total_entropy_report,
)
from .errors import (
    AlphabetTooSmall,
    CapacityExceeded,
    CoverTooSmall,
    DuplicateItem,
    DuplicateSymbol,
    ItemNotInBaseline,
    KeyLengthMismatch,
    LengthMismatch,
    NotAPermutation,
    PermstegoError,
    SentinelMissing,
    SymbolNotInAlphabet,
)
from .factoradic import (
    brute_force_rank,
    decode_permutation,
    encode_permutation,
    factorial_table,
    min_factorial_length,
)
from .radix import (
    append_sentinel,
    message_to_natural,
    natural_to_message,
    sentinel_symbol,
    strip_sentinel,
)
from .stego import (
    DecodedMessage,
    apply_code,
    canonical_baseline,
    decode_message,
    encode_message,
    format_key,
    generate_key,
    load_cover,
    load_key,
    recover_code,
)

__all__ = [
    "DEFAULT27",
    "DEFAULT_SYMBOLS",
    "Alphabet",
    "AlphabetTooSmall",
    "CapacityExceeded",
    "CoverTooSmall",
    "DecodedMessage",
    "DuplicateItem",
    "DuplicateSymbol",
    "FrequencyTable",
    "ItemNotInBaseline",
    "KeyLengthMismatch",
    "LengthMismatch",
    "NotAPermutation",
    "PermstegoError",
    "PositionEntropyTable",
    "ScalingRecord",
    "SentinelMissing",
    "SymbolNotInAlphabet",
    "append_sentinel",
    "apply_code",
    "brute_force_rank",
    "canonical_baseline",
    "channel_capacity_bits",
    "decode_message",
    "decode_permutation",
    "encode_message",
    "encode_permutation",
    "english_letter_table",
    "estimate_position_entropy",
    "factorial_table",
    "format_key",
    "frequency_ordered_alphabet",
    "generate_key",
    "load_cover",
    "load_frequency_table",
    "load_key",
    "make_alphabet",
    "message_length_scaling",
    "message_to_natural",
    "min_factorial_length",
    "natural_to_message",
    "recover_code",
    "sentinel_symbol",
    "strip_sentinel",
    "total_entropy_report",
]
