"""Bijection between nonnegative integers and permutations of 0..n-1.

The mapping is the factorial number system: a value below n! has a unique
digit expansion sum(digit_i * (i-1)!) with 0 <= digit_i < i, and each digit
selects (and removes) one element from the pool of indices not yet used.
Enumerating values 0, 1, 2, ... yields the permutations in lexicographic
order, which is what the brute-force oracle below exploits.
"""

from itertools import permutations

from .errors import CapacityExceeded, NotAPermutation


def factorial_table(length: int) -> list[int]:
    """[0!, 1!, ..., (length-1)!] as exact integers, built by running product."""
    if length < 1:
        raise ValueError("length must be positive")
    table = [1]
    for i in range(1, length):
        table.append(table[-1] * i)
    return table


def min_factorial_length(value: int) -> int:
    """Smallest n >= 1 with n! > value; the shortest permutation that can hold it."""
    if value < 0:
        raise ValueError("value must be nonnegative")
    n, fact = 1, 1
    while fact <= value:
        n += 1
        fact *= n
    return n


def encode_permutation(value: int, length: int) -> list[int]:
    """Permutation of 0..length-1 whose rank is `value`.

    Each step extracts the next factorial-base digit by exact integer
    division and uses it to pick from the pool of unused indices. Passing a
    `length` above min_factorial_length(value) is allowed: the leading digits
    are then zero, so the output starts with the identity prefix 0, 1, 2, ...
    and the value is carried entirely by the tail.
    """
    if value < 0:
        raise ValueError("value must be nonnegative")
    if length < 1:
        raise ValueError("length must be positive")
    table = factorial_table(length)
    if table[-1] * length <= value:
        raise CapacityExceeded(
            f"{length} elements admit only {length}! orderings; "
            f"value {value} needs at least {min_factorial_length(value)}"
        )
    remaining = list(range(length))
    code = []
    residual = value
    for i in range(length, 0, -1):
        digit, residual = divmod(residual, table[i - 1])
        assert 0 <= digit <= i - 1, "digit must index the remaining pool"
        assert residual >= 0, "residual must stay nonnegative"
        code.append(remaining.pop(digit))
    assert residual == 0, "the final step must consume the whole value"
    return code


def decode_permutation(code: list[int]) -> int:
    """Rank of a permutation of 0..n-1: inverse of encode_permutation.

    Walks the code left to right, reading each element's position within the
    ascending pool of values not yet seen; that position is the factorial-base
    digit for the step.
    """
    n = len(code)
    if n < 1:
        raise NotAPermutation("a permutation code must have at least one entry")
    check_permutation(code)
    table = factorial_table(n)
    remaining = sorted(code)
    value = 0
    for step, element in enumerate(code):
        position = remaining.index(element)
        value += position * table[n - 1 - step]
        remaining.pop(position)
    return value


def brute_force_rank(code: list[int]) -> int:
    """Rank of `code` by enumerating all permutations in lexicographic order.

    Independent test oracle for decode_permutation; restricted to n <= 8 to
    keep the enumeration cheap.
    """
    n = len(code)
    if n < 1 or n > 8:
        raise ValueError("the enumeration oracle supports 1 <= n <= 8")
    check_permutation(code)
    target = tuple(code)
    for rank, candidate in enumerate(permutations(range(n))):
        if candidate == target:
            return rank
    raise NotAPermutation(f"{code!r} was not found in the enumeration")


def check_permutation(code: list[int]) -> None:
    """Raise NotAPermutation unless `code` is a permutation of 0..len(code)-1."""
    n = len(code)
    seen = [False] * n
    for entry in code:
        if not isinstance(entry, int):
            raise NotAPermutation(f"entry {entry!r} is not an integer")
        if entry < 0 or entry >= n:
            raise NotAPermutation(f"entry {entry} is outside 0..{n - 1}")
        if seen[entry]:
            raise NotAPermutation(f"entry {entry} appears more than once")
        seen[entry] = True
