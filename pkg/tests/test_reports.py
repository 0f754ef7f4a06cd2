import pandas as pd
import pytest

from HomCat.core import QTPoly, TriPoincare
from HomCat.ReportGeneration.poincare_report import poincare_report, summary_frame, verification_report
from HomCat.ReportGeneration.visual_report import visual_report


@pytest.fixture
def table():
    return TriPoincare({(0, 0, 0): 1, (-1, 1, 1): 2, (0, -2, 2): 1}, 4)


def test_poincare_report(table, tmp_path):
    report_df = poincare_report(table, tmp_path / "table")
    assert list(report_df.columns) == ["h2", "hh2", "q2", "dim"]
    assert report_df.iloc[0].tolist() == [-1, 1, 1, 2]
    written = pd.read_csv(tmp_path / "table.tsv", sep = "\t")
    assert written.equals(report_df)


def test_poincare_report_of_series():
    report_df = poincare_report(QTPoly({(2, -2): 1, (0, 0): 3}))
    assert report_df["t2"].tolist() == [-2, 0]
    with pytest.raises(ValueError):
        poincare_report({"not": "a table"})


def test_summary_frame_halves_degrees(table):
    summary = summary_frame(table)
    assert summary.iloc[0].tolist() == ["-1/2", "1/2", "1/2", 2]
    assert summary_frame(TriPoincare({}, 2)).empty


def test_verification_report(tmp_path):
    reports = [{"check": "a2", "status": "pass", "qmax": 4, "checked": 4},
               {"check": "d_squared", "status": "fail", "qmax": 4, "checked": 2, "first_failure": {"case": "x", "q": 2}}]
    report_df = verification_report(reports, tmp_path / "checks")
    assert report_df["Status"].tolist() == ["pass", "fail"]
    assert report_df["First Failure"].iloc[0] == ""
    assert (tmp_path / "checks.csv").exists()


def test_visual_report(table, tmp_path):
    fig = visual_report(table, tmp_path / "heatmap")
    assert len(fig.axes) == 3
    assert (tmp_path / "heatmap.png").exists()
