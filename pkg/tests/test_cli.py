import json

from ansing import cli
from ansing.exactmath import parse_rational
from ansing.invariants import chi_orb, mu


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def run_raw(capsys, argv):
    code = cli.run(argv)
    return code, capsys.readouterr()


def test_omega_verb(capsys):
    code, payload = run_json(capsys, ["omega", "--n", "2", "--no-timestamp"])
    assert code == 0
    assert payload == {"n": 2, "h0_omega": "29/216", "h1_omega": "67/216"}


def test_hsum_verb(capsys):
    code, payload = run_json(capsys, ["hsum", "--n", "2", "--m", "6", "--no-timestamp"])
    assert code == 0
    assert payload == {"n": 2, "m": 6, "hsum": 44}


def test_oracle_verify_verb(capsys):
    code, payload = run_json(
        capsys, ["oracle-verify", "--n", "1", "--m", "2", "--no-timestamp"]
    )
    assert code == 0
    assert payload["formula"] == 3 and payload["oracle"] == 3 and payload["match"]


def test_oracle_verify_mismatch_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli.latticesum, "hsum", lambda n, m: 999)
    code, payload = run_json(
        capsys, ["oracle-verify", "--n", "1", "--m", "2", "--no-timestamp"]
    )
    assert code == 3
    assert not payload["match"]


def test_mu_and_chi_orb_verbs(capsys):
    code, payload = run_json(capsys, ["mu", "--n", "2", "--m", "2", "--no-timestamp"])
    assert code == 0 and payload["mu"] == "0"
    code, payload = run_json(
        capsys, ["chi-orb", "--n", "1", "--m", "2", "--no-timestamp"]
    )
    assert code == 0 and payload["chi_orb"] == "-45/8"


def test_h1_verb_checks_integrality(capsys):
    code, payload = run_json(capsys, ["h1", "--n", "2", "--m", "2", "--no-timestamp"])
    assert code == 0
    assert payload["h1"] == "7" and payload["integral_and_nonnegative"]


def test_divisor_verb(capsys):
    code, payload = run_json(
        capsys, ["divisor", "--n", "3", "--m", "5", "--no-timestamp"]
    )
    assert code == 0
    assert payload["coefficients"] == [2, 3, 2]


def test_polygon_verb(capsys):
    code, payload = run_json(
        capsys, ["polygon", "--n", "2", "--m", "6", "--no-timestamp"]
    )
    assert code == 0
    assert payload["half_planes"] == [[-1, 0, 0], [0, -1, 0], [1, -1, 6], [-1, 3, 8]]
    assert [piece["label"] for piece in payload["pieces"]] == [0, 1, 2, 3]


def test_fit_verb(capsys):
    code, payload = run_json(
        capsys, ["fit", "--n", "2", "--m-to", "47", "--no-timestamp"]
    )
    assert code == 0
    assert payload["period"] == 6
    assert payload["branches"][1] == ["-143/216", "1/8", "29/72", "29/216"]


def test_fit_verb_no_period_exits_3(capsys):
    code, captured = run_raw(
        capsys,
        ["fit", "--n", "2", "--m-to", "47", "--max-period", "5", "--no-timestamp"],
    )
    assert code == 3
    assert "no period" in captured.err


def test_integral_check_verb(capsys):
    code, payload = run_json(
        capsys, ["integral-check", "--n", "2", "--m", "6", "--no-timestamp"]
    )
    assert code == 0
    assert payload["hsum"] == 44
    residual = parse_rational(payload["residual"])
    assert abs(residual) < 6  # O(m) deviation at m = 6


def test_bigness_verb(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps({"name": "demo", "s2": "-4/5", "singularities": [{"n": 1, "count": 6}]})
    )
    code, payload = run_json(
        capsys, ["bigness", "--config", str(cfg), "--no-timestamp"]
    )
    assert code == 0
    assert payload["total"] == "34/45"
    assert payload["verdict"] == "big (criterion satisfied)"


def test_bigness_unreadable_config_exits_2(capsys, tmp_path):
    code, captured = run_raw(
        capsys, ["bigness", "--config", str(tmp_path / "nope.json"), "--no-timestamp"]
    )
    assert code == 2
    assert "unreadable" in captured.err


def test_limits_verb(capsys):
    code, payload = run_json(capsys, ["limits", "--n", "30", "--no-timestamp"])
    assert code == 0
    assert payload["h0"]["strictly_increasing"]
    assert payload["h1"]["strictly_increasing"]


def test_sweep_values(capsys):
    code, payload = run_json(
        capsys, ["hsum-sweep", "--n", "1", "--m-from", "0", "--m-to", "2", "--no-timestamp"]
    )
    assert code == 0
    r1 = mu(1, 1) - chi_orb(1, 1) - 0
    assert [row["h1"] for row in payload["rows"]] == ["0", str(r1), "3"]
    assert [row["m"] for row in payload["rows"]] == [0, 1, 2]


def test_sweep_empty_range(capsys):
    code, payload = run_json(
        capsys, ["hsum-sweep", "--n", "2", "--m-from", "3", "--m-to", "2", "--no-timestamp"]
    )
    assert code == 0
    assert payload["rows"] == []


def test_sweep_csv_has_header(capsys):
    code, captured = run_raw(
        capsys, ["hsum-sweep", "--n", "1", "--m-from", "0", "--m-to", "2", "--csv"]
    )
    assert code == 0
    lines = captured.out.strip().splitlines()
    assert lines[0] == "m,hsum,mu,chi_orb,h1"
    assert lines[1] == "0,0,1/8,1/8,0"
    assert len(lines) == 4


def test_single_record_csv(capsys):
    code, captured = run_raw(capsys, ["omega", "--n", "2", "--csv"])
    assert code == 0
    lines = captured.out.strip().splitlines()
    assert lines[0] == "n,h0_omega,h1_omega"
    assert lines[1] == "2,29/216,67/216"


def test_deterministic_output_without_timestamp(capsys):
    _, first = run_raw(capsys, ["omega", "--n", "3", "--no-timestamp"])
    _, second = run_raw(capsys, ["omega", "--n", "3", "--no-timestamp"])
    assert first.out == second.out


def test_timestamp_present_by_default(capsys):
    code, payload = run_json(capsys, ["hsum", "--n", "1", "--m", "2"])
    assert code == 0
    assert "timestamp" in payload


def test_round_trip_matches_fresh_computation(capsys):
    code, payload = run_json(capsys, ["h1", "--n", "3", "--m", "7", "--no-timestamp"])
    assert code == 0
    assert parse_rational(payload["mu"]) == mu(3, 7)
    assert parse_rational(payload["chi_orb"]) == chi_orb(3, 7)
    assert parse_rational(payload["h1"]) == mu(3, 7) - chi_orb(3, 7) - payload["hsum"]


def test_cache_reuse_and_corruption_recovery(capsys, tmp_path):
    cache = tmp_path / "cache.jsonl"
    args = [
        "hsum-sweep", "--n", "2", "--m-from", "0", "--m-to", "4",
        "--cache", str(cache), "--no-timestamp",
    ]
    code, first = run_json(capsys, args)
    assert code == 0
    assert cache.exists() and len(cache.read_text().strip().splitlines()) == 5

    # corrupt one cached row; the sweep must recompute it and still be right
    lines = cache.read_text().strip().splitlines()
    record = json.loads(lines[2])
    record["row"]["hsum"] = 10**6
    lines[2] = json.dumps(record)
    cache.write_text("\n".join(lines) + "\n")

    code, second = run_json(capsys, args)
    assert code == 0
    assert second["rows"] == first["rows"]


def test_csv_identical_with_warm_cache(capsys, tmp_path):
    cache = tmp_path / "cache.jsonl"
    args = ["hsum-sweep", "--n", "1", "--m-from", "0", "--m-to", "3", "--csv"]
    _, cold = run_raw(capsys, args + ["--cache", str(cache)])
    _, warm = run_raw(capsys, args + ["--cache", str(cache)])
    _, plain = run_raw(capsys, args)
    assert cold.out == warm.out == plain.out


def test_parallel_sweep_matches_serial(capsys):
    serial_code, serial = run_json(
        capsys, ["hsum-sweep", "--n", "2", "--m-from", "0", "--m-to", "6", "--no-timestamp"]
    )
    parallel_code, parallel = run_json(
        capsys,
        [
            "hsum-sweep", "--n", "2", "--m-from", "0", "--m-to", "6",
            "--parallel", "3", "--no-timestamp",
        ],
    )
    assert serial_code == parallel_code == 0
    assert serial["rows"] == parallel["rows"]


def test_invalid_inputs_exit_2(capsys):
    code, _ = run_raw(capsys, ["hsum", "--n", "0", "--m", "2"])
    assert code == 2
    code, _ = run_raw(capsys, ["hsum", "--n", "1", "--m", "-3"])
    assert code == 2
    code, _ = run_raw(capsys, ["hsum-sweep", "--n", "1", "--m-from", "5", "--m-to", "2"])
    assert code == 2


def test_unknown_verb_exits_2(capsys):
    assert cli.run(["frobnicate"]) == 2
