import json

from arcgeom import cli, report


def test_to_csv_union_of_columns():
    text = report.to_csv([{"a": 1}, {"b": [1, 2]}])
    assert text.splitlines() == ["a,b", "1,", ',"[1, 2]"']
    assert report.to_csv([]) == ""


def test_secant_distribution_totals(orc2):
    dist = report.secant_count_distribution(orc2)
    assert sum(dist["on_curve"].values()) == 80
    assert sum(dist["off_curve"].values()) == 64 * 64 - 80


def test_verify_writes_report(tmp_path, capsys):
    code = cli.main(["verify", "--q", "2", "--suite", "curve,bounds", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    assert code == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"verify.json", "verify.csv", "spectrum.png", "secant_counts.json",
            "secant_counts.png", "bounds.png"} <= names
    assert json.loads((tmp_path / "verify.json").read_text())[0]["suite"] == "curve"
    for png in ("spectrum.png", "bounds.png"):
        assert (tmp_path / png).read_bytes()[:4] == b"\x89PNG"


def test_spectrum_and_bounds_figures(tmp_path, capsys):
    assert cli.main(["spectrum", "--q", "2", "--out-dir", str(tmp_path)]) == 0
    assert cli.main(["bounds", "--q-max", "5", "--out-dir", str(tmp_path)]) == 0
    capsys.readouterr()
    assert (tmp_path / "spectrum.png").exists() and (tmp_path / "bounds.png").exists()
