import csv
import io
import json
import subprocess
import sys

import pytest

from icobeltrami.catalog import catalog
from icobeltrami.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from icobeltrami.exactnum import gn
from icobeltrami.poly import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_single_field(capsys):
    code, out, _ = run(capsys, "verify", "I")
    assert code == EXIT_OK
    assert "curl(I) = I: pass" in out.splitlines()
    assert out.rstrip().endswith("all checks passed")


def test_verify_all(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "all", "--out", str(report))
    assert code == EXIT_OK
    assert "d_I(1) = 2: pass" in out
    data = json.loads(report.read_text())
    assert data["passed"] is True
    assert [c["criterion"] for c in data["criteria"]] == list(range(1, 13))


def test_verify_json_format(capsys):
    code, out, _ = run(capsys, "verify", "ABC", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["scope"] == "ABC"


def test_unknown_field_is_a_usage_error(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == EXIT_USAGE
    assert "bogus" in err and "V0" in err


def test_taylor_y_9_times_scale_is_q(capsys):
    code, out, _ = run(capsys, "taylor", "Y", "9")
    assert code == EXIT_OK
    data = json.loads(out)
    comps = [Polynomial.from_json(3, c).scale(23224320) for c in data["components"]]
    q = catalog()["Q"]
    assert all(c == qc.polynomial_part() for c, qc in zip(comps, q))


def test_taylor_degree_zero_is_zero(capsys):
    code, out, _ = run(capsys, "taylor", "I", "--degree", "0")
    assert code == EXIT_OK
    assert json.loads(out)["zero"] is True


def test_taylor_cap(capsys):
    code, _, err = run(capsys, "taylor", "I", "40")
    assert code == EXIT_USAGE
    assert "cap" in err


def test_orbit_csv(capsys):
    code, out, _ = run(capsys, "orbit", "--x0", "5,6,7", "--t-end", "1")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t", "x", "y", "z"]
    assert len(rows) - 1 == 1001
    assert float(rows[-1][0]) == 1.0
    _, again, _ = run(capsys, "orbit", "--x0", "5,6,7", "--t-end", "1")
    assert again == out


def test_orbit_json_and_file(capsys, tmp_path):
    path = tmp_path / "orbit.json"
    code, _, _ = run(capsys, "orbit", "I", "--t-end", "0.01", "--format", "json", "--out", str(path))
    assert code == EXIT_OK
    data = json.loads(path.read_text())
    assert data["integrator"] == "rk4" and len(data["t"]) == 11


@pytest.mark.parametrize("step", ["0", "-0.1", "abc"])
def test_orbit_bad_step(capsys, step):
    code, _, _ = run(capsys, "orbit", "--step", step)
    assert code == EXIT_USAGE


def test_orbit_rational_field_rejected(capsys):
    code, _, err = run(capsys, "orbit", "B_sasakian")
    assert code == EXIT_USAGE and "rational" in err


def test_zeros_face_line(capsys):
    code, out, _ = run(capsys, "zeros", "F", "20")
    assert code == EXIT_OK
    rep = json.loads(out)["reports"][0]
    assert abs(rep["first_positive_root"] - 5.1625967944) < 1e-9


def test_zeros_all(capsys):
    code, out, _ = run(capsys, "zeros", "all", "--s-max", "3")
    assert code == EXIT_OK
    assert len(json.loads(out)["reports"]) == 62


def test_zeros_bad_class(capsys):
    code, _, _ = run(capsys, "zeros", "Z")
    assert code == EXIT_USAGE


def test_lines(capsys):
    code, out, _ = run(capsys, "lines")
    data = json.loads(out)
    assert code == EXIT_OK and data["count"] == 62
    assert {r["class"] for r in data["lines"]} == {"F", "V", "E"}


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["nonzero"] is True
    w = data["witness"]
    assert gn(w["coefficient"]) != 0


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--starts", "30")
    assert code == EXIT_OK
    data = json.loads(out)
    assert all(z["residual"] < 1e-10 for z in data["zeros"])


def test_fields(capsys):
    code, out, _ = run(capsys, "fields")
    assert code == EXIT_OK
    assert [r["name"] for r in json.loads(out)] == catalog().names()
    code, out, _ = run(capsys, "fields", "M")
    assert json.loads(out)["kind"] == "polynomial"


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "icobeltrami", "verify", "ABC"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == EXIT_OK
    assert "all checks passed" in proc.stdout


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_FAIL, EXIT_USAGE}) == 3
