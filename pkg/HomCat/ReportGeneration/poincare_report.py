from fractions import Fraction
import logging

import pandas as pd

from ..core import QTPoly, TriPoincare


def _half(value):
    return str(Fraction(value, 2))


def poincare_report(table, filename = None):
    """
    Tabular report of a Poincaré table.

    Args:
        table (TriPoincare or QTPoly): Doubled-degree table.
        filename (str): If given, the frame is written to <filename>.tsv.

    Returns:
        pandas DataFrame with columns h2, hh2, q2, dim (or t2, q2, coeff) sorted lexicographically.
    """
    if isinstance(table, (TriPoincare, QTPoly)):
        report_df = table.to_frame()
    else:
        logging.error(f"Cannot report on {type(table).__name__}.")
        raise ValueError("expected a TriPoincare or QTPoly")
    if not filename is None: report_df.to_csv(f"{filename}.tsv", sep = "\t", index = False)
    return report_df


def summary_frame(table):
    """
    The rows of a TriPoincare with halved degrees printed as fractions.
    """
    report_df = table.to_frame()
    if report_df.empty:
        return pd.DataFrame(columns = ["hom", "hh", "q", "dim"])
    return pd.DataFrame({"hom": report_df["h2"].apply(_half), "hh": report_df["hh2"].apply(_half),
                         "q": report_df["q2"].apply(_half), "dim": report_df["dim"]})


def verification_report(reports, filename = None):
    """
    One row per verification suite with its status and the first failure, if any.
    """
    rows = [{"Check": report["check"], "Status": report["status"], "qmax": report["qmax"], "Checked": report["checked"],
             "First Failure": str(report.get("first_failure", ""))} for report in reports]
    report_df = pd.DataFrame(rows, columns = ["Check", "Status", "qmax", "Checked", "First Failure"])
    if not filename is None: report_df.to_csv(f"{filename}.csv", index = False)
    return report_df
