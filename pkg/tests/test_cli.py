import io

import pytest

from permstego.cli import main

from conftest import GANGSTER_MOVIES_PRESENTED, GANGSTER_MOVIES_SORTED

HELLO_WORLD_CODE = "[1,17,13,5,4,0,3,12,8,15,14,11,16,7,9,10,2,6]"


def run_cli(argv, stdin_text="", monkeypatch=None, capsys=None):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    def invoke(argv, stdin_text=""):
        return run_cli(argv, stdin_text, monkeypatch=monkeypatch, capsys=capsys)

    return invoke


def test_encode_hello_world(cli):
    status, out, err = cli(["encode"], "hello world\n")
    assert status == 0
    assert out == HELLO_WORLD_CODE + "\n"
    assert err == ""


def test_encode_single_zero_symbol(cli):
    status, out, _ = cli(["encode"], "a\n")
    assert status == 0
    assert out == "[0]\n"


def test_encode_short_message(cli):
    status, out, _ = cli(["encode"], "hi\n")
    assert status == 0
    assert out == "[1,5,2,0,4,3]\n"


def test_encode_strips_only_trailing_newline(cli):
    # the leading space is a real symbol and must survive
    status, out, _ = cli(["encode"], " a\n")
    assert status == 0
    status2, out2, _ = cli(["encode"], "a\n")
    assert out != out2


def test_encode_rejects_uppercase(cli):
    status, _, err = cli(["encode"], "Hello\n")
    assert status == 2
    assert "error" in err


def test_encode_lowercase_flag(cli):
    status, out, _ = cli(["encode", "--lowercase"], "HI\n")
    assert status == 0
    assert out == "[1,5,2,0,4,3]\n"


def test_decode_transcript(cli):
    status, out, _ = cli(["decode"], "[3,8,6,5,1,7,0,4,10,2,12,9,11]\n")
    assert status == 0
    assert out == "test me\n"


def test_decode_single_element(cli):
    status, out, _ = cli(["decode"], "[0]\n")
    assert status == 0
    assert out == "\n"


def test_decode_tolerates_spaces(cli):
    status, out, _ = cli(["decode"], " [1, 0] \n")
    assert status == 0
    assert out == "b\n"


def test_decode_rejects_unbracketed_input(cli):
    status, _, err = cli(["decode"], "1,0\n")
    assert status == 2
    assert "error" in err


def test_decode_rejects_non_permutation(cli):
    status, _, err = cli(["decode"], "[0,2]\n")
    assert status == 2
    assert "error" in err


def test_encode_decode_roundtrip(cli):
    _, code_line, _ = cli(["encode"], "attack at dawn\n")
    status, out, _ = cli(["decode"], code_line)
    assert status == 0
    assert out == "attack at dawn\n"


@pytest.fixture
def movie_file(tmp_path):
    path = tmp_path / "movies.txt"
    path.write_text("\n".join(GANGSTER_MOVIES_PRESENTED) + "\n", encoding="utf-8")
    return path


def test_cover_roundtrip_with_movie_file(cli, movie_file):
    status, out, _ = cli(
        ["encode-cover", "--cover", str(movie_file), "--sort-lex", "--no-sentinel"],
        "bury him\n",
    )
    assert status == 0
    assert out.splitlines() == GANGSTER_MOVIES_PRESENTED

    status, out, err = cli(
        ["decode-cover", "--cover", str(movie_file), "--sort-lex", "--no-sentinel"],
        out,
    )
    assert status == 0
    assert out == "bury him\n"
    assert err == ""


def test_decode_cover_warns_when_sentinel_missing(cli, movie_file):
    observed = "\n".join(GANGSTER_MOVIES_PRESENTED) + "\n"
    status, out, err = cli(
        ["decode-cover", "--cover", str(movie_file), "--sort-lex"], observed
    )
    assert status == 0
    assert out == "bury him\n"
    assert "no sentinel" in err


def test_cover_file_baseline_order_is_respected(cli, tmp_path):
    # without --sort-lex the file order is the baseline, so the identity
    # encoding of value zero keeps it unchanged
    path = tmp_path / "cover.txt"
    path.write_text("ZEBRA\nAPPLE\nMANGO\n", encoding="utf-8")
    status, out, _ = cli(
        ["encode-cover", "--cover", str(path), "--no-sentinel"], "a\n"
    )
    assert status == 0
    assert out.splitlines() == ["ZEBRA", "APPLE", "MANGO"]


def test_cover_roundtrip_with_sentinel_default(cli, tmp_path):
    path = tmp_path / "cover.txt"
    path.write_text("".join(f"item {k:02d}\n" for k in range(16)), encoding="utf-8")
    status, out, _ = cli(["encode-cover", "--cover", str(path)], "meet me\n")
    assert status == 0
    status, out, err = cli(["decode-cover", "--cover", str(path)], out)
    assert status == 0
    assert out == "meet me\n"
    assert err == ""


def test_cover_too_small_exit_code(cli, tmp_path):
    path = tmp_path / "cover.txt"
    path.write_text("A\nB\nC\n", encoding="utf-8")
    status, _, err = cli(["encode-cover", "--cover", str(path), "--no-sentinel"], "xyz\n")
    assert status == 3
    assert "at least" in err


def test_missing_cover_file_is_io_error(cli, tmp_path):
    status, _, err = cli(
        ["encode-cover", "--cover", str(tmp_path / "nope.txt")], "hi\n"
    )
    assert status == 5
    assert "error" in err


def test_keyed_cover_roundtrip_with_key_file(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("".join(f"item {k:02d}\n" for k in range(11)), encoding="utf-8")
    key = tmp_path / "key.txt"
    key.write_text("[5,0,9,10,1,4,6,3,2,8,7]\n", encoding="utf-8")

    status, out, _ = cli(
        ["encode-cover", "--cover", str(cover), "--key", str(key), "--no-sentinel"],
        "hello\n",
    )
    assert status == 0
    status, out, _ = cli(
        ["decode-cover", "--cover", str(cover), "--key", str(key), "--no-sentinel"],
        out,
    )
    assert status == 0
    assert out == "hello\n"


def test_wrong_key_baseline_gives_gibberish(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("".join(f"item {k:02d}\n" for k in range(11)), encoding="utf-8")
    key = tmp_path / "key.txt"
    key.write_text("[5,0,9,10,1,4,6,3,2,8,7]\n", encoding="utf-8")

    status, out, _ = cli(
        ["encode-cover", "--cover", str(cover), "--no-sentinel"], "hello\n"
    )
    assert status == 0
    status, out, _ = cli(
        ["decode-cover", "--cover", str(cover), "--key", str(key), "--no-sentinel"],
        out,
    )
    assert status == 0
    assert out == "cbhwdc\n"


def test_key_seed_roundtrip(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("".join(f"item {k:02d}\n" for k in range(12)), encoding="utf-8")
    status, out, _ = cli(
        ["encode-cover", "--cover", str(cover), "--key-seed", "42"], "ok\n"
    )
    assert status == 0
    status, out, _ = cli(
        ["decode-cover", "--cover", str(cover), "--key-seed", "42"], out
    )
    assert status == 0
    assert out == "ok\n"


def test_key_length_mismatch_exit_code(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("A\nB\nC\n", encoding="utf-8")
    key = tmp_path / "key.txt"
    key.write_text("[1,0]\n", encoding="utf-8")
    status, _, err = cli(
        ["encode-cover", "--cover", str(cover), "--key", str(key)], "a\n"
    )
    assert status == 4
    assert "key" in err


def test_malformed_key_file_exit_code(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("A\nB\nC\n", encoding="utf-8")
    key = tmp_path / "key.txt"
    key.write_text("0,1,2\n", encoding="utf-8")
    status, _, err = cli(
        ["encode-cover", "--cover", str(cover), "--key", str(key)], "a\n"
    )
    assert status == 4


def test_missing_key_file_exit_code(cli, tmp_path):
    cover = tmp_path / "cover.txt"
    cover.write_text("A\nB\nC\n", encoding="utf-8")
    status, _, err = cli(
        ["encode-cover", "--cover", str(cover), "--key", str(tmp_path / "nope")], "a\n"
    )
    assert status == 4


def test_keygen_is_deterministic(cli):
    status, first, _ = cli(["keygen", "-n", "11", "--seed", "7"])
    assert status == 0
    _, second, _ = cli(["keygen", "-n", "11", "--seed", "7"])
    assert first == second
    body = first.strip()
    assert body.startswith("[") and body.endswith("]")
    entries = sorted(int(tok) for tok in body[1:-1].split(","))
    assert entries == list(range(11))


def test_analyze_fig2_row_count(cli, tmp_path):
    status, out, _ = cli(
        ["analyze", "--fig", "2", "--max-n", "5", "--samples", "200",
         "--seed", "7", "--out", str(tmp_path)]
    )
    assert status == 0
    assert "fig2" in out
    lines = (tmp_path / "fig2.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 6  # header + one row per length


def test_analyze_fig1_degenerate_lengths(cli, tmp_path):
    status, out, _ = cli(
        ["analyze", "--fig", "1", "--max-n", "2", "--samples", "100",
         "--out", str(tmp_path)]
    )
    assert status == 0
    lines = (tmp_path / "fig1.csv").read_text(encoding="utf-8").splitlines()
    assert lines[1:] == ["1,0,0.000000", "2,0,0.000000", "2,1,0.000000"]


def test_analyze_fig3_record_count(cli, tmp_path):
    status, out, _ = cli(
        ["analyze", "--fig", "3", "--max-len", "5", "--samples", "100",
         "--out", str(tmp_path)]
    )
    assert status == 0
    lines = (tmp_path / "fig3.csv").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 6
    assert lines[0] == "L,mean_items,ci95_halfwidth"


def test_analyze_unwritable_output_exit_code(cli, tmp_path):
    status, _, err = cli(
        ["analyze", "--fig", "2", "--max-n", "2", "--samples", "50",
         "--out", str(tmp_path / "missing" / "deeper")]
    )
    assert status == 5


def test_analyze_output_is_byte_stable(cli, tmp_path):
    args = ["analyze", "--fig", "3", "--max-len", "3", "--samples", "80", "--seed", "3"]
    first_dir = tmp_path / "a"
    second_dir = tmp_path / "b"
    first_dir.mkdir()
    second_dir.mkdir()
    cli(args + ["--out", str(first_dir)])
    cli(args + ["--out", str(second_dir)])
    assert (first_dir / "fig3.csv").read_bytes() == (second_dir / "fig3.csv").read_bytes()
