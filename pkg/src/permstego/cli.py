"""Command-line front end: raw permutation codes, cover lists, keys, analysis.

The raw `encode`/`decode` subcommands mirror the minimal pipe-friendly
behavior (lowercase Latin alphabet plus space, no sentinel, minimal code
length). The cover subcommands add the safer defaults: sentinel on and the
code sized to the whole cover.

Exit codes: 2 bad input, 3 insufficient cover capacity, 4 key problems,
5 file I/O.
"""

import argparse
import sys
from pathlib import Path

from .alphabet import DEFAULT27
from .analysis import (
    estimate_position_entropy,
    message_length_scaling,
    total_entropy_report,
    write_fig1_csv,
    write_fig2_csv,
    write_fig3_csv,
)
from .errors import CoverTooSmall, KeyLengthMismatch, PermstegoError
from .factoradic import decode_permutation, encode_permutation, min_factorial_length
from .radix import message_to_natural, natural_to_message
from .stego import (
    canonical_baseline,
    decode_message,
    encode_message,
    format_key,
    generate_key,
    load_cover,
    load_key,
    parse_cover,
    parse_key,
)

EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_KEY = 4
EXIT_IO = 5

DEFAULT_ENTROPY_SAMPLES = 100_000
DEFAULT_SCALING_SAMPLES = 10_000


class _KeyInputError(Exception):
    """Wraps any failure while loading or validating a baseline key."""


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "encode": _run_encode,
        "decode": _run_decode,
        "encode-cover": _run_encode_cover,
        "decode-cover": _run_decode_cover,
        "keygen": _run_keygen,
        "analyze": _run_analyze,
    }
    try:
        handlers[args.command](args)
    except _KeyInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_KEY
    except CoverTooSmall as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (PermstegoError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permstego",
        description="Hide text messages in the ordering of innocuous lists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser(
        "encode", help="read a message on stdin, print its permutation code"
    )
    encode.add_argument(
        "--lowercase", action="store_true", help="lowercase the input before encoding"
    )

    sub.add_parser("decode", help="read a permutation code on stdin, print the message")

    encode_cover = sub.add_parser(
        "encode-cover", help="reorder a cover list to carry the message read from stdin"
    )
    _add_cover_arguments(encode_cover)
    encode_cover.add_argument(
        "--lowercase", action="store_true", help="lowercase the input before encoding"
    )

    decode_cover = sub.add_parser(
        "decode-cover", help="recover the message from a reordered cover list on stdin"
    )
    _add_cover_arguments(decode_cover)

    keygen = sub.add_parser("keygen", help="print a seeded random baseline key")
    keygen.add_argument("-n", "--length", type=int, required=True, help="key length")
    keygen.add_argument("--seed", type=int, required=True, help="generator seed")

    analyze = sub.add_parser("analyze", help="run a channel analysis, write a CSV table")
    analyze.add_argument("--fig", type=int, choices=(1, 2, 3), required=True,
                         help="1 per-position entropy, 2 total entropy, 3 length scaling")
    analyze.add_argument("--samples", type=int, default=None,
                         help=f"samples per point (default {DEFAULT_ENTROPY_SAMPLES} "
                              f"for figs 1-2, {DEFAULT_SCALING_SAMPLES} for fig 3)")
    analyze.add_argument("--seed", type=int, default=0, help="sampling seed")
    analyze.add_argument("--max-n", type=int, default=12,
                         help="largest list length for figs 1-2")
    analyze.add_argument("--max-len", type=int, default=30,
                         help="largest message length for fig 3")
    analyze.add_argument("--out", default=".", help="output directory")
    return parser


def _add_cover_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--cover", required=True, help="cover list file, one item per line")
    sub.add_argument(
        "--sort-lex",
        action="store_true",
        help="sort the cover lexicographically to form the baseline",
    )
    key_group = sub.add_mutually_exclusive_group()
    key_group.add_argument("--key", help="baseline key file (bracketed integer list)")
    key_group.add_argument("--key-seed", type=int, help="derive the baseline key from a seed")
    sentinel_group = sub.add_mutually_exclusive_group()
    sentinel_group.add_argument(
        "--sentinel", dest="sentinel", action="store_true", default=True,
        help="append/expect the sentinel symbol (default)",
    )
    sentinel_group.add_argument(
        "--no-sentinel", dest="sentinel", action="store_false",
        help="encode/decode the raw message without a sentinel",
    )


def _read_message(args) -> str:
    # raw mode trims only the trailing newline; leading spaces survive
    text = sys.stdin.read()
    if text.endswith("\n"):
        text = text[:-1]
    if getattr(args, "lowercase", False):
        text = text.lower()
    return text


def _run_encode(args) -> None:
    value = message_to_natural(_read_message(args), DEFAULT27)
    code = encode_permutation(value, min_factorial_length(value))
    print("[" + ",".join(str(entry) for entry in code) + "]")


def _run_decode(args) -> None:
    code = parse_key(sys.stdin.read())
    print(natural_to_message(decode_permutation(code), DEFAULT27))


def _baseline_from(args) -> list[str]:
    cover = load_cover(args.cover)
    return canonical_baseline(cover) if args.sort_lex else cover


def _key_from(args, length: int) -> list[int] | None:
    try:
        if args.key is not None:
            key = load_key(args.key)
        elif args.key_seed is not None:
            key = generate_key(length, args.key_seed)
        else:
            return None
        if len(key) != length:
            raise KeyLengthMismatch(
                f"key has {len(key)} entries for a {length}-item cover"
            )
        return key
    except OSError as exc:
        raise _KeyInputError(f"cannot read key file: {exc}") from exc
    except (PermstegoError, ValueError) as exc:
        raise _KeyInputError(str(exc)) from exc


def _run_encode_cover(args) -> None:
    baseline = _baseline_from(args)
    key = _key_from(args, len(baseline))
    reordered = encode_message(
        _read_message(args), DEFAULT27, baseline, key=key, sentinel=args.sentinel
    )
    for item in reordered:
        print(item)


def _run_decode_cover(args) -> None:
    baseline = _baseline_from(args)
    key = _key_from(args, len(baseline))
    observed = parse_cover(sys.stdin.read())
    result = decode_message(observed, DEFAULT27, baseline, key=key, sentinel=args.sentinel)
    if result.sentinel_found is False:
        print("warning: no sentinel found at the end of the decoded message", file=sys.stderr)
    print(result.text)


def _run_keygen(args) -> None:
    print(format_key(generate_key(args.length, args.seed)))


def _run_analyze(args) -> None:
    out_dir = Path(args.out)
    seed = args.seed
    if args.fig in (1, 2):
        samples = args.samples or DEFAULT_ENTROPY_SAMPLES
        lengths = range(1, args.max_n + 1)
        if args.fig == 1:
            tables = [estimate_position_entropy(n, samples, seed) for n in lengths]
            path = out_dir / "fig1.csv"
            write_fig1_csv(tables, path)
            print(f"fig1: wrote {path} (n=1..{args.max_n}, samples={samples}, seed={seed})")
        else:
            rows = total_entropy_report(lengths, samples, seed)
            path = out_dir / "fig2.csv"
            write_fig2_csv(rows, path)
            print(f"fig2: wrote {path} (n=1..{args.max_n}, samples={samples}, seed={seed})")
    else:
        samples = args.samples or DEFAULT_SCALING_SAMPLES
        records = message_length_scaling(range(1, args.max_len + 1), DEFAULT27, samples, seed)
        path = out_dir / "fig3.csv"
        write_fig3_csv(records, path)
        print(f"fig3: wrote {path} (L=1..{args.max_len}, samples={samples}, seed={seed})")


if __name__ == "__main__":
    sys.exit(main())
