# Copyright (C) 2025 Cognizant Digital Business, Evolutionary AI.
# All Rights Reserved.
# Issued under the Academic Public License.
#
# You can be released from the terms, and requirements of the Academic Public
# License by purchasing a commercial license.
# Purchase of a commercial license is mandatory for any use of the
# extlab Software in commercial settings.
#
# END COPYRIGHT
from typing import Any
from typing import Dict

import csv
import json
import math

from pathlib import Path

from extlab.experiments.sweep_report import SweepReport


class ReportWriter:
    """
    Writes SweepReports as CSV rows and as a JSON summary.
    """

    @staticmethod
    def clean(value: Any) -> Any:
        """
        :return: The value with NaN and infinities replaced by None, recursively
        """
        if isinstance(value, float) and not math.isfinite(value):
            return None
        if isinstance(value, dict):
            return {key: ReportWriter.clean(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [ReportWriter.clean(item) for item in value]
        return value

    def summary(self, report: SweepReport) -> Dict[str, Any]:
        """
        :return: The JSON-clean summary dictionary
        """
        return self.clean(report.to_dict())

    def summary_text(self, report: SweepReport) -> str:
        """
        :return: The JSON summary as text
        """
        return json.dumps(self.summary(report), indent=4, sort_keys=True)

    def write_csv(self, report: SweepReport, path: str):
        """
        :param report: The report
        :param path: The CSV file to write, UTF-8 with a header row
        """
        with Path(path).open("w", encoding="utf-8", newline="") as csv_file:
            writer = csv.writer(csv_file)
            writer.writerow(SweepReport.CSV_COLUMNS)
            for row in report.rows:
                bound: str = "" if row.bound is None else repr(float(row.bound))
                writer.writerow([repr(float(row.eps)), row.quantity_id, repr(float(row.value)),
                                 bound, row.slope_window])

    def write_json(self, report: SweepReport, path: str):
        """
        :param report: The report
        :param path: The JSON file to write
        """
        with Path(path).open("w", encoding="utf-8") as json_file:
            json_file.write(self.summary_text(report))
            json_file.write("\n")
