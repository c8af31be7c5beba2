import json
import subprocess
import sys

import pytest

from lynmorph.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_exit_codes(capsys):
    code, out, _ = run_cli("classify", "a=aba;b=bb", capsys=capsys)
    assert code == 0
    assert "outcome: infinite_lyndon" in out

    code, out, _ = run_cli("classify", "a=abb;b=baa", capsys=capsys)
    assert code == 1
    assert "reason: ab_image_not_lyndon_power" in out

    code, out, _ = run_cli("classify", "a=ba;b=ab", capsys=capsys)
    assert code == 2
    assert "reason: not_prolongable" in out

    code, _, err = run_cli("classify", "a=abc;b=b", capsys=capsys)
    assert code == 64
    assert "offset 4" in err


def test_classify_json_schema(capsys):
    code, out, _ = run_cli("classify", "a=aba;b=bb", "--json", capsys=capsys)
    assert code == 0
    report = json.loads(out)
    assert report["format_version"] == 1
    assert report["morphism"] == {"a": "aba", "b": "bb"}
    assert report["verdict"] == {"outcome": "infinite_lyndon", "reason": "lyndon"}
    assert report["evidence"]["shape"] == {"tag": "case_ab", "i": 1}
    assert report["evidence"]["order_preserving"] is True
    witness = report["evidence"]["case_witness"]
    assert witness["root"] == "ababb" and witness["exponent"] == 1
    assert report["theorem"]["cond1_order"] is True
    assert report["theorem"]["periodicity"]["kind"] == "aperiodic"
    assert report["oracle"] is None


def test_classify_json_is_deterministic(capsys):
    _, first, _ = run_cli("classify", "a=aab;b=abaabab", "--json", capsys=capsys)
    _, second, _ = run_cli("classify", "a=aab;b=abaabab", "--json", capsys=capsys)
    assert first == second


def test_classify_with_oracle(capsys):
    code, out, _ = run_cli(
        "classify", "a=aba;b=bb", "--oracle", "2000", "--json", capsys=capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["oracle"]["conclusion"] == "looks_lyndon"
    assert report["oracle"]["agreement"] is True
    assert report["oracle"]["window"] == 2000


def test_classify_oracle_skipped_when_not_applicable(capsys):
    code, out, _ = run_cli(
        "classify", "a=ba;b=ab", "--oracle", "1000", "--json", capsys=capsys
    )
    assert code == 2
    assert json.loads(out)["oracle"] is None


def test_check_command(capsys):
    code, out, _ = run_cli("check", "a=aba;b=bab", "--json", capsys=capsys)
    assert code == 1
    report = json.loads(out)
    assert report["theorem"]["cond1_order"] is True
    assert report["theorem"]["cond3_pre_lyndon_f3a"] is True
    assert report["theorem"]["periodicity"]["kind"] == "periodic_by_theorem"


def test_prefix_command(capsys):
    code, out, _ = run_cli("prefix", "a=ab;b=a", "5", capsys=capsys)
    assert code == 0
    assert out == "abaab\n"

    code, long_out, _ = run_cli("prefix", "a=ab;b=a", "12", capsys=capsys)
    assert long_out.strip().startswith(out.strip())

    code, _, err = run_cli("prefix", "a=ba;b=ab", "5", capsys=capsys)
    assert code == 2

    code, _, err = run_cli("prefix", "a=ab;b=a", "99999999", capsys=capsys)
    assert code == 65
    assert "cap" in err


def test_factorize_command(capsys):
    code, out, _ = run_cli("factorize", "ababb", capsys=capsys)
    assert code == 0
    assert out == "ababb\n"

    code, out, _ = run_cli("factorize", "bbbaaab", capsys=capsys)
    assert out == "b b b aaab\n"

    code, out, _ = run_cli(
        "factorize", "--spec", "a=aba;b=bb", "--length", "8", "--json", capsys=capsys
    )
    assert json.loads(out)["factors"] == ["ababb", "ab", "a"]

    code, _, err = run_cli("factorize", capsys=capsys)
    assert code == 64


def test_verify_command(capsys):
    code, out, _ = run_cli(
        "verify", "a=aba;b=bab", "--window", "1000", "--json", capsys=capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["oracle"]["conclusion"] == "periodic_within_window"
    assert report["oracle"]["detected_period"]["root"] == "ab"

    code, _, _ = run_cli("verify", "a=ba;b=ab", capsys=capsys)
    assert code == 2


def test_enumerate_counts(capsys):
    code, out, _ = run_cli("enumerate", "--max-len", "4", "--json", capsys=capsys)
    assert code == 0
    summary = json.loads(out)
    assert summary["total"] == 465
    assert summary["outcomes"]["infinite_lyndon"] == 66
    assert sum(summary["outcomes"].values()) == 465
    assert sum(summary["reasons"].values()) == 465

    code, out, _ = run_cli("enumerate", "--max-len", "1", "--json", capsys=capsys)
    summary = json.loads(out)
    assert summary["total"] == 3
    assert summary["outcomes"].get("infinite_lyndon", 0) == 0


def test_enumerate_verify_small(capsys):
    code, out, _ = run_cli(
        "enumerate", "--max-len", "2", "--verify", "400", "--json", capsys=capsys
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["verify"]["agreements"]["false"] == 0
    assert summary["verify"]["disagreements"] == []


def test_enumerate_guard(capsys):
    code, _, err = run_cli("enumerate", "--max-len", "6", capsys=capsys)
    assert code == 64


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli("nonsense", capsys=capsys)
    assert code == 64


def test_console_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "lynmorph.cli", "classify", "a=ab;b=b"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "infinite_lyndon" in proc.stdout
