"""Monte-Carlo estimates of the permutation channel's entropy and scaling.

Per-position entropies are estimated by sampling values uniformly from the
interval that maps to a given minimal code length, encoding each, and
histogramming which element lands at each position. All randomness is derived
per sample from (seed, label, sample index) with a hash, so results are
bit-identical for equal arguments no matter how the loop is ordered or split.
"""

import csv
import hashlib
import math
from dataclasses import dataclass
from statistics import fmean, stdev

from .alphabet import Alphabet
from .factoradic import encode_permutation, factorial_table, min_factorial_length


@dataclass(frozen=True)
class PositionEntropyTable:
    """Per-position Shannon entropies (bits) for codes of one list length.

    counts[pos][element] is the raw histogram the entropies were computed
    from; each row sums to `samples`.
    """

    length: int
    entropies: list[float]
    counts: list[list[int]]
    samples: int
    seed: int


@dataclass(frozen=True)
class ScalingRecord:
    """Code-length statistics for uniformly random messages of one length."""

    message_length: int
    mean_items: float
    ci95_halfwidth: float
    max_items: int
    samples: int


def channel_capacity_bits(length: int) -> float:
    """log2(length!), summed term by term rather than via Stirling's formula."""
    if length < 1:
        raise ValueError("length must be positive")
    return sum(math.log2(k) for k in range(2, length + 1))


def estimate_position_entropy(length: int, samples: int, seed: int = 0) -> PositionEntropyTable:
    """Estimate the entropy of the element seen at each code position.

    Values are drawn uniformly from the integers whose minimal code length is
    exactly `length`: [(length-1)!, length!), or {0} when length is 1.
    """
    if length < 1:
        raise ValueError("length must be positive")
    if samples < 1:
        raise ValueError("samples must be positive")
    table = factorial_table(length)
    upper = table[-1] * length
    lower = 0 if length == 1 else table[-1]
    counts = [[0] * length for _ in range(length)]
    label = f"entropy:{length}"
    for index in range(samples):
        value = _uniform_int(lower, upper, seed, label, index)
        code = encode_permutation(value, length)
        for position, element in enumerate(code):
            counts[position][element] += 1
    entropies = [_entropy_bits(row, samples) for row in counts]
    return PositionEntropyTable(
        length=length, entropies=entropies, counts=counts, samples=samples, seed=seed
    )


def total_entropy_report(
    lengths, samples: int, seed: int = 0
) -> list[tuple[int, float, float]]:
    """(length, summed positional entropy, ceiling length*log2(length)) per length."""
    rows = []
    for length in lengths:
        estimate = estimate_position_entropy(length, samples, seed)
        rows.append((length, sum(estimate.entropies), length * math.log2(length)))
    return rows


def message_length_scaling(
    message_lengths, alphabet: Alphabet, samples: int, seed: int = 0
) -> list[ScalingRecord]:
    """Mean minimal code length for uniform random messages of each length.

    Sampling every symbol i.i.d. uniform over the alphabet is equivalent to
    drawing the message's value uniformly from [0, size**length), so the draw
    happens directly on that interval. The confidence interval is the normal
    approximation at 95%.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    records = []
    for message_length in message_lengths:
        if message_length < 0:
            raise ValueError("message lengths must be nonnegative")
        upper = alphabet.size ** message_length
        label = f"scaling:{message_length}"
        sizes = [
            min_factorial_length(_uniform_int(0, upper, seed, label, index))
            for index in range(samples)
        ]
        halfwidth = 0.0
        if len(sizes) > 1:
            halfwidth = 1.96 * stdev(sizes) / math.sqrt(len(sizes))
        records.append(
            ScalingRecord(
                message_length=message_length,
                mean_items=fmean(sizes),
                ci95_halfwidth=halfwidth,
                max_items=max(sizes),
                samples=samples,
            )
        )
    return records


def write_fig1_csv(tables: list[PositionEntropyTable], path) -> None:
    """Per-position entropies: columns n, position, entropy_bits."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "position", "entropy_bits"])
        for table in tables:
            for position, entropy in enumerate(table.entropies):
                writer.writerow([table.length, position, f"{entropy:.6f}"])


def write_fig2_csv(rows: list[tuple[int, float, float]], path) -> None:
    """Total vs ceiling entropy: columns n, total_bits, max_bits."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "total_bits", "max_bits"])
        for length, total, ceiling in rows:
            writer.writerow([length, f"{total:.6f}", f"{ceiling:.6f}"])


def write_fig3_csv(records: list[ScalingRecord], path) -> None:
    """Message-length scaling: columns L, mean_items, ci95_halfwidth."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["L", "mean_items", "ci95_halfwidth"])
        for record in records:
            writer.writerow(
                [
                    record.message_length,
                    f"{record.mean_items:.6f}",
                    f"{record.ci95_halfwidth:.6f}",
                ]
            )


def _uniform_int(lower: int, upper: int, seed: int, label: str, index: int) -> int:
    """Deterministic uniform draw from [lower, upper).

    Rejection sampling on the bit width of the range keeps the draw unbiased;
    deriving the bits from (seed, label, index) makes every sample independent
    of evaluation order.
    """
    width = upper - lower
    if width <= 0:
        raise ValueError("empty range")
    if width == 1:
        return lower
    bits = width.bit_length()
    blocks = (bits + 511) // 512
    attempt = 0
    while True:
        material = b"".join(
            hashlib.sha512(f"{seed}:{label}:{index}:{attempt}:{block}".encode()).digest()
            for block in range(blocks)
        )
        draw = int.from_bytes(material, "big") >> (blocks * 512 - bits)
        if draw < width:
            return lower + draw
        attempt += 1


def _entropy_bits(counts: list[int], total: int) -> float:
    """Shannon entropy of a count histogram; empty bins contribute nothing."""
    entropy = 0.0
    for count in counts:
        if count:
            probability = count / total
            entropy -= probability * math.log2(probability)
    return entropy
