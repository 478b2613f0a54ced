import json
import subprocess
import sys

import pytest

from pawncgt.cli import main
from pawncgt.expr import parse_value
from pawncgt.naming import format_value

D2 = "8/8/1p2p3/7p/1P6/4P3/7P/8"
D5 = "8/1p5p/p7/4k3/4Pp2/5K1P/PP6/8"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", D5)
    assert code == 0
    assert "total: v* ; first player wins" in out


def test_analyze_components(capsys):
    code, out, _ = run(capsys, "analyze", D2)
    vals = [line.split()[1] for line in out.splitlines() if line.startswith("  ") and not line.startswith("   ")]
    assert vals == ["*", "0", "^"]


def test_analyze_json_round_trips(capsys):
    code, out, _ = run(capsys, "analyze", "--corpus", "8", "--json")
    d = json.loads(out)
    assert code == 0
    for c in d["components"]:
        assert format_value(parse_value(c["value"])) == c["value"]
    assert parse_value(d["total_expr"]) is parse_value(d["total"])
    assert set(d) >= {"board", "components", "offset", "total", "mzz", "winning_moves", "warnings"}


def test_analyze_flags(capsys):
    code, out, _ = run(capsys, "analyze", "--corpus", "4", "--no-ep", "--json")
    assert code == 0 and json.loads(out)["warnings"] == []
    code, out, _ = run(capsys, "analyze", "--corpus", "1", "--offset", "-3")
    assert "mutual zugzwang" in out
    code, out, _ = run(capsys, "analyze", "8/8/8/8/8/8/P7/8", "--offscale", "40", "--json")
    # promotion worth 40, plus one for each of the six moves it takes
    assert json.loads(out)["total"] == "46"


@pytest.mark.parametrize(
    "args,expected",
    [
        (["value", "{0,*|*}"], "^ (up), positive"),
        (["value", "^ + v"], "0, zero"),
    ],
)
def test_value(capsys, args, expected):
    code, out, _ = run(capsys, *args)
    assert code == 0 and out.splitlines()[0] == expected


def test_value_compare(capsys):
    code, out, _ = run(capsys, "value", "Tiny(1)", "1/4")
    assert out.splitlines()[-1] == "Tiny(1) < 1/4"
    _, out, _ = run(capsys, "value", "*", "^")
    assert out.splitlines()[-1] == "* || ^"
    _, out, _ = run(capsys, "value", "{0,*|1}", "1/2")
    assert out.splitlines()[-1] == "1/2 = 1/2"


@pytest.mark.parametrize("name,code", [("3", 0), ("6", 0), ("5", 1)])
def test_mzz(capsys, name, code):
    got, out, _ = run(capsys, "mzz", "--corpus", name)
    assert got == code
    if code:
        assert out.strip() == "v*"


@pytest.mark.parametrize(
    "name,side,winner", [("1", "w", "White"), ("1", "b", "White"), ("5", "w", "White"), ("5", "b", "Black"), ("7", "w", "Black")]
)
def test_oracle(capsys, name, side, winner):
    code, out, _ = run(capsys, "oracle", "--corpus", name, "--side", side)
    lines = out.splitlines()
    assert code == 0 and lines[0] == winner and lines[1].startswith("nodes: ")


@pytest.mark.parametrize(
    "args",
    [
        ["analyze", "8/8/8"],
        ["analyze", "8/8/8/8", "--offset", "1/3"],
        ["value", "{0|"],
        ["mzz"],
        ["analyze", "--corpus", "nope"],
        ["oracle", "--corpus", "5", "--budget", "10"],
    ],
)
def test_input_errors(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2 and err.startswith("error:")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == 2


def test_fuzz_exit_and_determinism(capsys):
    code, out1, _ = run(capsys, "fuzz", "--seed", "7", "--count", "40")
    _, out2, _ = run(capsys, "fuzz", "--seed", "7", "--count", "40")
    assert code == 0 and out1 == out2


def test_fuzz_height6_catalog(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "3", "--count", "120", "--height", "6", "--max-files", "1", "--max-pawns", "2")
    assert code == 0 and "  *2: " in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "pawncgt", "value", "*+*"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.startswith("0, zero")
