"""Command line behavior: formats, golden bytes, exit codes."""

import json

import pytest

from crcsieve import catalog, cli, distance


def run_cli(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse exits for parse-level errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_order_command(capsys):
    code, out, _ = run_cli(capsys, "order", "93f")
    assert (code, out) == (0, "762\n")


def test_score_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "score", "158ff", "8192,512", "--csv")
    assert code == 0
    assert out == (
        "poly_hex,degree,order,M,score\n"
        "158ff,16,7161,512,2196\n"
        "158ff,16,7161,8192,\n"
    )


def test_score_human_dash(capsys):
    code, out, _ = run_cli(capsys, "score", "a0f", "512")
    assert code == 0
    assert "order 146" in out
    assert "S -" in out


def test_score_json_null(capsys):
    code, out, _ = run_cli(capsys, "score", "158ff", "512,8192", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 7161
    assert data["scores"]["512"] == 2196
    assert data["scores"]["8192"] is None


def test_profile_csv_golden(capsys):
    code, out, _ = run_cli(capsys, "profile", "158ff", "512", "--csv")
    assert code == 0
    assert out == (
        "poly_hex,n_lo,n_hi,d\n"
        "158ff,17,17,12\n"
        "158ff,18,25,8\n"
        "158ff,26,111,6\n"
        "158ff,112,512,4\n"
    )


def test_profile_json(capsys):
    code, out, _ = run_cli(capsys, "profile", "b", "7", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 7
    assert data["runs"] == [{"n_lo": 4, "n_hi": 7, "d": 3}]


def test_profile_human_mentions_empty_range(capsys):
    code, out, _ = run_cli(capsys, "profile", "11", "30")
    assert code == 0
    assert "no lengths" in out


def test_search_toy_by_hand(capsys):
    # only x^2+x+1 reaches order 3; at M=3 its score is d(3) = 3
    code, out, _ = run_cli(capsys, "search", "2", "--M", "3", "--csv")
    assert code == 0
    assert out == "poly_hex,degree,order,M,score\n7,2,3,3,3\n"
    # no degree-2 polynomial has order 4, so M=4 prunes them all
    code, out, _ = run_cli(capsys, "search", "2", "--M", "4", "--csv")
    assert code == 0
    assert out == "poly_hex,degree,order,M,score\n"


def test_search_csv_byte_stable(capsys):
    argv = ("search", "8", "--M", "100,200", "--csv")
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.splitlines()[0] == "poly_hex,degree,order,M,score"


def test_search_json(capsys):
    code, out, _ = run_cli(capsys, "search", "8", "--M", "200", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["complete"] is True
    rows = data["boards"]["200"]
    assert rows[0]["score"] >= rows[1]["score"]


def test_search_progress_goes_to_stderr(capsys):
    code, out, err = run_cli(capsys, "search", "6", "--M", "60", "--progress", "--csv")
    assert code == 0
    assert "block" in err
    assert "block" not in out


def test_search_checkpoint_mismatch_is_a_usage_error(tmp_path, capsys):
    path = str(tmp_path / "ck.json")
    code, _, _ = run_cli(capsys, "search", "8", "--M", "100", "--checkpoint", path, "--csv")
    assert code == 0
    code, _, err = run_cli(capsys, "search", "8", "--M", "120", "--checkpoint", path, "--csv")
    assert code == 2
    assert "checkpoint" in err


def test_verify_clean_run(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--samples", "40", "--seed", "3",
        "--degrees", "4:8", "--offsets", "1:10",
    )
    assert code == 0
    assert "40/40 samples agree" in out


def test_verify_flags_an_injected_fault(capsys, monkeypatch):
    real = distance.min_distance
    monkeypatch.setattr(distance, "min_distance", lambda g, n: real(g, n) + 1)
    code, out, _ = run_cli(
        capsys, "verify", "--samples", "40", "--seed", "3",
        "--degrees", "4:8", "--offsets", "1:10",
    )
    assert code == 1
    assert "MISMATCH" in out
    assert "0/40 samples agree" in out


def test_verify_is_reproducible_for_a_seed(capsys):
    args = ("verify", "--samples", "25", "--seed", "9", "--degrees", "4:7", "--offsets", "1:8")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_tables_fast_sections_pass(capsys):
    code, out, _ = run_cli(capsys, "tables", "--sections", "11-15,distances")
    assert code == 0
    assert "0 mismatches" in out
    assert "derived" in out  # the entry carrying no embedded expectation


def test_tables_csv_schema(capsys):
    code, out, _ = run_cli(capsys, "tables", "--sections", "11-15", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "poly_hex,degree,order,M,score"
    assert "a0f,11,146,512," in lines


def test_tables_distance_csv(capsys):
    code, out, _ = run_cli(capsys, "tables", "--sections", "distances", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "poly_hex,n,d"
    assert "1a2eb,24,8" in lines
    assert "11021,128,4" in lines


def test_tables_json(capsys):
    code, out, _ = run_cli(capsys, "tables", "--sections", "distances", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["mismatches"] == 0
    entry = data["sections"][0]["entries"][0]
    assert entry["poly"] == "1a2eb"
    assert entry["distances"] == [8, 6, 6, 6, 4]


def test_tables_flags_a_planted_mismatch(capsys, monkeypatch):
    bad = catalog.CatalogSection(
        "11-15", (512,), (catalog.CatalogEntry("93f", 762, {512: 9999}),)
    )
    monkeypatch.setattr(catalog, "SECTIONS", (bad,))
    code, out, _ = run_cli(capsys, "tables", "--sections", "11-15")
    assert code == 1
    assert "MISMATCH" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("order", "zz"),
        ("order", "10"),  # even mask
        ("score", "93f", "5"),  # length below degree+1
        ("score", "93f", "0"),
        ("profile", "93f", "4"),
        ("search", "21", "--M", "512"),  # degree 21 needs --long-run
        ("search", "8", "--M", "4"),
        ("tables", "--sections", "nope"),
        ("verify", "--offsets", "1:40"),  # beyond the brute-force cap
        ("verify", "--degrees", "9:4"),
        ("verify", "--degrees", "1:25"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err
