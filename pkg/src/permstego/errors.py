"""Exception types raised by the codec and channel tooling."""


class PermstegoError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateSymbol(PermstegoError):
    """An alphabet was given the same symbol more than once."""


class AlphabetTooSmall(PermstegoError):
    """Fewer than two distinct symbols; every message would collapse to one value."""


class SymbolNotInAlphabet(PermstegoError):
    """A message contains a character the alphabet does not define."""


class SentinelMissing(PermstegoError):
    """Expected a trailing sentinel symbol but the text does not end with one."""


class CapacityExceeded(PermstegoError):
    """The requested permutation length cannot represent the given value."""


class NotAPermutation(PermstegoError):
    """A code contains a duplicate, negative, or out-of-range entry."""


class DuplicateItem(PermstegoError):
    """A cover list contains the same item more than once."""


class LengthMismatch(PermstegoError):
    """Two sequences that must be the same length are not."""


class ItemNotInBaseline(PermstegoError):
    """An observed item does not appear in the baseline cover list."""


class KeyLengthMismatch(PermstegoError):
    """A baseline key does not match the cover length it is used with."""


class CoverTooSmall(PermstegoError):
    """The cover list has too few items to carry the message."""

    def __init__(self, length: int, required_length: int):
        super().__init__(
            f"cover of {length} items cannot carry the message; "
            f"at least {required_length} items are required"
        )
        self.length = length
        self.required_length = required_length
