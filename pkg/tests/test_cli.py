import csv
import io
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from repfn.cli import main, random_balanced_set


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# -- construct -------------------------------------------------------------


def test_construct_golden_outputs():
    assert run_cli("construct", "thm2", "--k", "0") == (0, "N=3;P=0,3,4\n", "")
    assert run_cli("construct", "thm3", "--n", "5") == (0, "N=5;P=1,3,5,6,7\n", "")
    assert run_cli("construct", "thm1", "--n", "2") == (0, "N=2;P=2,3\n", "")
    assert run_cli("construct", "cor3", "--k", "1")[1] == "N=3;P=3,4,5\n"


def test_construct_missing_param_is_usage_error():
    code, _, err = run_cli("construct", "thm1")
    assert code == 2
    assert "requires --n" in err


def test_construct_bad_param_is_usage_error():
    code, _, err = run_cli("construct", "thm1", "--n", "1")
    assert code == 2


# -- repfn profile ----------------------------------------------------------


def test_repfn_csv_satisfies_pair_accounting(tmp_path):
    path = tmp_path / "prof.csv"
    code, _, _ = run_cli("repfn", "--set", "A0", "--n-max", "64", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0].startswith("#")
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 65
    for row in rows:
        n = int(row["n"])
        total = (
            int(row["r_cross"])
            + 2 * int(row["r2_A"])
            + 2 * int(row["r2_comp"])
            + (1 if n % 2 == 0 else 0)
        )
        assert total == n + 1
    assert rows[7]["r2_A"] == "0" and rows[7]["r2_comp"] == "0"


def test_repfn_stdout_and_methods_agree():
    base = run_cli("repfn", "--set", "N=3;P=0,3,4", "--n-max", "40")[1]
    for method in ("naive", "conv"):
        alt = run_cli(
            "repfn", "--set", "N=3;P=0,3,4", "--n-max", "40", "--method", method
        )[1]
        assert alt.splitlines()[2:] == base.splitlines()[2:]  # same rows


def test_repfn_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli("repfn", "--construct", "thm2", "--k", "1", "--n-max", "99", "--out", str(p1))
    run_cli("repfn", "--construct", "thm2", "--k", "1", "--n-max", "99", "--out", str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_repfn_requires_exactly_one_source():
    code, _, err = run_cli("repfn", "--n-max", "10")
    assert code == 2
    code, _, err = run_cli(
        "repfn", "--set", "A0", "--construct", "thm1", "--n", "4", "--n-max", "10"
    )
    assert code == 2


# -- verify -------------------------------------------------------------------


def test_verify_passing_targets():
    assert run_cli("verify", "thm2", "--k", "1")[0] == 0
    assert run_cli("verify", "thm3", "--n", "7")[0] == 0
    assert run_cli("verify", "dombi", "--n-max", "2000")[0] == 0
    assert run_cli("verify", "thm1", "--n", "4", "--m-max", "5")[0] == 0
    assert run_cli("verify", "cor3", "--k", "2", "--m-max", "5")[0] == 0
    assert run_cli("verify", "lemma1", "--set", "N=3;P=0,3,4")[0] == 0
    assert (
        run_cli(
            "verify", "lower-bounds", "--construct", "thm1", "--n", "8", "--n-max", "3000"
        )[0]
        == 0
    )


def test_verify_converse_fails_with_witness(tmp_path):
    path = tmp_path / "report.csv"
    code, out, _ = run_cli(
        "verify",
        "thm-a",
        "--set",
        "N=2;P=0,1,2(unchecked)",
        "--n-max",
        "200",
        "--out",
        str(path),
    )
    assert code == 1
    assert "FAIL" in out
    rows = list(csv.DictReader(path.read_text().splitlines()))
    assert rows[0]["theorem_id"] == "ThmA"
    assert rows[0]["passed"] == "false"
    assert 3 <= int(rows[0]["worst_n"]) <= 200
    assert int(rows[0]["worst_margin_num"]) < 0


def test_verify_report_csv_columns(tmp_path):
    path = tmp_path / "report.csv"
    run_cli(
        "verify", "lower-bounds", "--construct", "thm1", "--n", "4",
        "--n-max", "500", "--out", str(path),
    )
    rows = list(csv.DictReader(path.read_text().splitlines()))
    assert [r["theorem_id"] for r in rows] == ["ThmE", "ThmB", "ThmF"]
    for row in rows:
        assert row["passed"] == "true"
        assert int(row["worst_margin_den"]) >= 1
        assert row["set_spec"].startswith("N=4;P=")


def test_verify_cor3_report_id(tmp_path):
    path = tmp_path / "cor3.csv"
    run_cli("verify", "cor3", "--k", "3", "--out", str(path))
    rows = list(csv.DictReader(path.read_text().splitlines()))
    assert rows[0]["theorem_id"] == "Cor3"
    assert rows[0]["passed"] == "true"


def test_verify_random_set_reproducible():
    a = run_cli("verify", "thm-a", "--set", "random", "--seed", "7", "--n-max", "500")
    b = run_cli("verify", "thm-a", "--set", "random", "--seed", "7", "--n-max", "500")
    assert a == b
    assert a[0] == 0


def test_verify_usage_errors():
    assert run_cli("verify", "thm2")[0] == 2  # missing --k
    assert run_cli("verify", "thm-a", "--set", "N=2;P=0,5", "--n-max", "100")[0] == 2
    assert run_cli("verify", "lower-bounds", "--set", "A0", "--n-max", "100")[0] == 2


def test_random_balanced_set_is_balanced():
    for seed in range(20):
        s = random_balanced_set(seed)
        assert s.balanced and 1 <= s.N <= 8


# -- scan -----------------------------------------------------------------------


def test_scan_csv_and_summary(tmp_path):
    path = tmp_path / "scan.csv"
    code, _, err = run_cli("scan", "--n", "3", "--out", str(path), "--workers", "1")
    assert code == 0
    assert "scanned 20 prefixes" in err
    lines = path.read_text().splitlines()
    assert lines[1] == "spec,tm_like,last_zero,min_F_margin,min_E_slack_num"
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 20
    c0_rows = [r for r in rows if r["spec"] == "N=3;P=0,3,4"]
    assert len(c0_rows) == 1 and c0_rows[0]["last_zero"] == "13"


def test_scan_deterministic_across_workers(tmp_path):
    p1, p2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    run_cli("scan", "--n", "2", "--out", str(p1), "--workers", "1")
    run_cli("scan", "--n", "2", "--out", str(p2), "--workers", "4")
    assert p1.read_bytes() == p2.read_bytes()


# -- density and ratios -----------------------------------------------------------


def test_density_reports_value(tmp_path):
    path = tmp_path / "hist.csv"
    code, out, _ = run_cli(
        "density", "--set", "A0", "--n-max", "2000", "--theta", "0.01",
        "--out", str(path),
    )
    assert code == 0
    assert out.startswith("density ")
    value = float(out.split()[1])
    assert 0.0 <= value <= 1.0
    rows = list(csv.DictReader(path.read_text().splitlines()[1:]))
    assert sum(int(r["count"]) for r in rows) == 2000


def test_density_rejects_boundary_theta():
    code, _, err = run_cli("density", "--set", "A0", "--n-max", "100", "--theta", "0.015")
    assert code == 2
    assert "theta" in err


def test_ratios_csv(tmp_path):
    path = tmp_path / "ratios.csv"
    code, _, _ = run_cli(
        "ratios", "--construct", "thm1", "--n", "16", "--count", "6",
        "--out", str(path),
    )
    assert code == 0
    rows = list(csv.DictReader(path.read_text().splitlines()[1:]))
    assert [int(r["n"]) for r in rows] == [1, 7, 31, 127, 511, 2047]
    for row in rows:
        n = int(row["n"])
        ratio = Fraction(int(row["ratio_num"]), int(row["ratio_den"]))
        assert ratio <= Fraction(n + 1, 32 * n)


# -- figures ----------------------------------------------------------------------


def test_plot_files_render(tmp_path):
    out = tmp_path / "prof.csv"
    code, _, _ = run_cli(
        "repfn", "--set", "A0", "--n-max", "200", "--out", str(out), "--plot"
    )
    assert code == 0
    png = tmp_path / "prof.png"
    assert png.exists() and png.stat().st_size > 1000
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    fig2 = tmp_path / "scanfig.png"
    run_cli("scan", "--n", "2", "--out", str(tmp_path / "s.csv"), "--plot", str(fig2))
    assert fig2.exists()

    run_cli(
        "density", "--set", "A0", "--n-max", "500", "--theta", "0.01",
        "--out", str(tmp_path / "d.csv"), "--plot",
    )
    assert (tmp_path / "d.png").exists()

    run_cli(
        "ratios", "--set", "A0", "--count", "5",
        "--out", str(tmp_path / "r.csv"), "--plot",
    )
    assert (tmp_path / "r.png").exists()


def test_plot_without_out_is_usage_error():
    code, _, err = run_cli("repfn", "--set", "A0", "--n-max", "50", "--plot")
    assert code == 2
    assert "--plot" in err
