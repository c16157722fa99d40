import csv
import io
import json

import pytest

from sscoincidence import SUPERSINGULAR_PRIMES
from sscoincidence.cli import CSV_FIELDS, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_csv_100(capsys):
    code, out, err = run(capsys, "verify", "--max-prime", "100", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == 26
    assert code == 0
    assert "summary: OK" in err


def test_csv_header_exact(capsys):
    code, out, _ = run(capsys, "verify", "--max-prime", "3", "--format", "csv")
    assert out.splitlines()[0] == (
        "p,c1_monster,c2_genus_plus_zero,c3_ss_rational,c4_jacobi_zero,consistent,in_S,"
        "genus_x0,fricke_fixed_points,genus_plus,jacobi_dim,ss_expected,ss_in_fp,kodaira"
    )
    assert out.splitlines()[1] == "2,true,true,true,true,true,true,0,2,0,0,1,1,Unirational"


def test_verify_json_71(capsys):
    code, out, _ = run(capsys, "verify", "--max-prime", "71", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert list(doc) == ["meta", "records", "summary"]
    assert doc["meta"]["bound"] == 71
    assert doc["summary"]["zero_set"] == list(SUPERSINGULAR_PRIMES)
    rec = doc["records"][0]
    assert list(rec)[:8] == [
        "p", "c1_monster", "c2_genus_plus_zero", "c3_ss_rational", "c4_jacobi_zero",
        "consistent", "in_S", "kodaira",
    ]


@pytest.mark.parametrize("value", ["1", "0", "-5", "abc", "1000001"])
def test_verify_bad_max_prime(capsys, value):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--max-prime", value])
    assert exc.value.code == 2


def test_verify_bad_format(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--format", "xml"])
    assert exc.value.code == 2


def test_workers_must_be_positive(capsys):
    code, _, err = run(capsys, "verify", "--max-prime", "10", "--workers", "0")
    assert code == 2


def test_csv_json_round_trip(capsys):
    _, out_csv, _ = run(capsys, "verify", "--max-prime", "200", "--format", "csv")
    _, out_json, _ = run(capsys, "verify", "--max-prime", "200", "--format", "json")
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    records = json.loads(out_json)["records"]
    assert len(rows) == len(records)

    def b(x):
        return "true" if x else "false"

    for row, rec in zip(rows, records):
        expected = {
            "p": str(rec["p"]),
            "c1_monster": b(rec["c1_monster"]),
            "c2_genus_plus_zero": b(rec["c2_genus_plus_zero"]),
            "c3_ss_rational": b(rec["c3_ss_rational"]),
            "c4_jacobi_zero": b(rec["c4_jacobi_zero"]),
            "consistent": b(rec["consistent"]),
            "in_S": b(rec["in_S"]),
            "genus_x0": str(rec["genus"]["genus"]),
            "fricke_fixed_points": str(rec["genus"]["fricke_fixed_points"]),
            "genus_plus": str(rec["genus"]["genus_plus"]),
            "jacobi_dim": str(rec["jacobi"]["dim"]),
            "ss_expected": str(rec["supersingular"]["expected_count"]),
            "ss_in_fp": str(len(rec["supersingular"]["found_in_fp"])),
            "kodaira": rec["kodaira"],
        }
        assert row == expected


def test_json_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--max-prime", "150", "--format", "json")
    _, b, _ = run(capsys, "verify", "--max-prime", "150", "--format", "json")
    assert a == b


def test_table_output(capsys):
    code, out, _ = run(capsys, "verify", "--max-prime", "100")
    assert code == 0
    assert out.startswith("# sscoincidence")
    assert "summary: OK checked=25" in out
    assert "NonNegativeOpen: 10 primes [13, 17, 19, 23, 29, 31, 41, 47, 59, 71]" in out


def test_genus_detail(capsys):
    code, out, _ = run(capsys, "genus", "37", "--format", "json")
    g = json.loads(out)
    assert code == 0
    assert (g["genus"], g["fricke_fixed_points"], g["genus_plus"], g["dim_weight2_plus"]) == (2, 2, 1, 1)


def test_jacobi_detail(capsys):
    _, out, _ = run(capsys, "jacobi", "11", "--format", "json")
    assert json.loads(out) == {"p": 11, "dim": 0}
    _, out, _ = run(capsys, "jacobi", "11", "--terms", "--format", "json")
    assert json.loads(out)["terms"] == [0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0]


def test_supersingular_detail(capsys):
    _, out, _ = run(capsys, "supersingular", "13", "--list", "--format", "json")
    assert json.loads(out)["found_in_fp"] == [5]
    _, out, _ = run(capsys, "supersingular", "13")
    assert "found_in_fp: 1" in out


def test_conditions_detail(capsys):
    code, out, _ = run(capsys, "conditions", "37", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["kodaira"] == "GeneralType" and rec["in_S"] is False
    code, out, _ = run(capsys, "conditions", "71", "--format", "csv")
    assert out.splitlines()[1].startswith("71,true,true,true,true,true,true")


def test_composite_names_factor(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["genus", "91"])
    assert exc.value.code == 2
    assert "divisible by 7" in capsys.readouterr().err


def test_monster_check(capsys):
    code, out, _ = run(capsys, "monster-check")
    assert code == 0 and "OK" in out
