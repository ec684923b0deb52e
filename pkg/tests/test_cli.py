import json

import pytest

from chaindex.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_indices_crossed(capsys):
    code, out, _ = run_cli(capsys, "indices", "--n", "1", "--kind", "crossed")
    assert code == 0
    payload = json.loads(out)
    assert payload["kf"] == "95/3"
    assert payload["tau"] == "12288"
    assert payload["closed_form"]["kf"] == "95/3"
    assert payload["closed_form"]["wiener_claim"] == "88"
    assert payload["wiener"] == "87"


def test_indices_plain_has_no_closed_forms(capsys):
    code, out, _ = run_cli(capsys, "indices", "--n", "1", "--kind", "plain")
    assert code == 0
    payload = json.loads(out)
    assert "closed_form" not in payload
    assert payload["kf"] == "2155/31"


def test_indices_rejects_invalid_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["indices", "--n", "0"])
    assert exc.value.code != 0


def test_indices_rejects_bad_kind(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["indices", "--n", "1", "--kind", "mobius"])
    assert exc.value.code != 0


def test_verify_range(capsys):
    code, out, _ = run_cli(capsys, "verify", "--from", "1", "--to", "1")
    assert code == 0
    payload = json.loads(out)
    by_claim = {r["claim_id"]: r for r in payload["records"]}
    assert by_claim["wiener.claim-vs-oracle"]["status"] == "mismatch"
    assert by_claim["kf.closed-vs-oracle"]["status"] == "match"
    assert payload["summary"]["mismatch"] >= 1
    # mismatches are findings, not process failures: exit code stays 0


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--from", "1", "--to", "1",
                           "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "claim_id,n,claimed,computed,status"


def test_verify_bad_range(capsys):
    code, _, err = run_cli(capsys, "verify", "--from", "3", "--to", "1")
    assert code == 1
    assert "error" in err


def test_table_one(capsys):
    code, out, _ = run_cli(capsys, "table", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,exact,rendered,printed,status"
    assert "2,156,156.00,156.00,match" in lines
    assert len(lines) == 16


def test_table_three_verbatim(capsys):
    code, out, _ = run_cli(capsys, "table", "3")
    assert code == 0
    row7 = next(line for line in out.splitlines() if line.startswith("7,"))
    assert row7.split(",")[1] == "7528977498068181366035447808"
    assert row7.endswith("match")


def test_table_two_rounding_and_misprint(capsys):
    code, out, _ = run_cli(capsys, "table", "2")
    assert code == 0
    rows = {line.split(",")[0]: line for line in out.splitlines()[1:]}
    assert rows["12"].split(",") == ["12", "1194028/3", "398009.33",
                                     "398009.34", "rounding_match"]
    # the one genuine misprint in the printed table
    assert rows["11"].split(",")[4] == "mismatch"


def test_table_beyond_printed_range(capsys):
    code, out, _ = run_cli(capsys, "table", "3", "--to", "9")
    rows = out.splitlines()
    assert rows[-1].startswith("9,")
    assert rows[-1].endswith(",,")  # no printed value, no status


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "1", "--format", "json")
    payload = json.loads(out)
    assert payload["table"] == "kf"
    assert payload["rows"][0]["rendered"] == "31.67"


def test_bench_small(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "1,2")
    assert code == 0
    payload = json.loads(out)
    assert [row["n"] for row in payload] == [1, 2]
    for row in payload:
        assert row["exact_match"] is True
        assert row["closed_form"]["kf"] == row["oracle"]["kf"]
        assert row["oracle"]["seconds"] > 0


def test_bench_respects_oracle_limit(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "1,30", "--oracle-limit", "5")
    payload = json.loads(out)
    assert payload[0]["oracle"] is not None
    assert payload[1]["oracle"] is None
    assert payload[1]["exact_match"] is None


def test_bench_csv_lists_methods(capsys):
    code, out, _ = run_cli(capsys, "bench", "--n", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,method,seconds,kf,kf_star,tau,exact_match"
    methods = {line.split(",")[1] for line in lines[1:]}
    assert methods == {"closed-form", "oracle"}
    assert all(line.endswith("true") for line in lines[1:])


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "indices", "--n", "1", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["kf"] == "95/3"
