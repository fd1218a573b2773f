import json

import powerdiam


def test_version():
    assert powerdiam.__version__ == "0.1.0"


def test_diam_known_value():
    assert powerdiam.diam("S4") == 7
    assert powerdiam.genset("S4") == "A' = {a',b}"


def test_run_matches_direct_call():
    rc, out, err = powerdiam.run(["diam", "S4"])
    assert rc == 0
    assert err == ""
    assert json.loads(out) == {"diam": 7, "genset": "A' = {a',b}"}


def test_run_reports_errors():
    rc, out, err = powerdiam.run(["diam", "X9"])
    assert rc == 1
    assert out == ""
    assert "unrecognized group spec" in err


def test_express():
    assert powerdiam.express("S4", "(1 3)") == "a'^2-b-a'"
    assert powerdiam.express("S4", "()") == ""


def test_power_diam():
    assert powerdiam.power_diam("S3", 2) == 4
    assert powerdiam.power_diam("S3", 2, "coprime") == 6


def test_check_subcommands_round_trip():
    rc, out, _ = powerdiam.run(["check-weak", "S3", "2"])
    assert rc == 0
    report = json.loads(out)
    assert report["verdict"] == "verified-witness"
    assert report["bound"] == 8

    rc, out, _ = powerdiam.run(["check-strong", "Z6", "2"])
    assert rc == 0
    assert json.loads(out)["verdict"] == "verified-exhaustive"
