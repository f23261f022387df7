import csv

from chordedit.report import fit_exponent, main


def test_fit_exponent():
    assert abs(fit_exponent([10, 20, 40], [1, 8, 64]) - 3.0) < 1e-9


def test_report_writes_csv_and_figures(tmp_path):
    assert main(["--out", str(tmp_path), "--sizes", "20", "30", "--budgets", "1", "2", "--repeats", "2"]) == 0
    rows = list(csv.DictReader(open(tmp_path / "scaling.csv")))
    assert rows and all(r["verdict"] == "feasible" for r in rows)
    assert (tmp_path / "time_vs_n.png").stat().st_size > 0
    assert (tmp_path / "nodes_vs_k.png").stat().st_size > 0
