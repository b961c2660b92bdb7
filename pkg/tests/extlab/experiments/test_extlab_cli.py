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
from contextlib import redirect_stderr
from io import StringIO
from unittest import TestCase

import json
import tempfile

from pathlib import Path

from parameterized import parameterized

from extlab.experiments.extlab_cli import ExtLabCli
from extlab.experiments.sweep_config import SweepConfig
from extlab.experiments.sweep_report import SweepReport
from extlab.internals.errors.config_error import ConfigError


class TestExtLabCli(TestCase):
    """
    Unit tests for argument handling and exit codes of the command line tool.
    """

    @parameterized.expand([
        ("malformed_eps", ["sweep", "--eps", "0.1:0.01"]),
        ("increasing_eps", ["sweep", "--eps", "0.01:0.1:3"]),
        ("eps_out_of_range", ["example1", "--eps", "0.9:0.1:3"]),
        ("bad_alpha", ["example2", "--alpha", "1,x"]),
        ("zero_probes", ["sweep", "--probes", "0"]),
        ("bad_config_suffix", ["selftest", "--config", "settings.yaml"]),
    ])
    def test_config_errors_exit_2(self, _name: str, argv):
        """
        Configuration problems exit with code 2 before any computation.
        """
        self.assertEqual(ExtLabCli().main(argv), ExtLabCli.EXIT_CONFIG)

    def test_usage_error_exits_2(self):
        """
        argparse usage errors exit with code 2 as well.
        """
        with self.assertRaises(SystemExit) as context:
            ExtLabCli().main(["nosuchcommand"])
        self.assertEqual(context.exception.code, 2)

    def test_overrides(self):
        """
        Flags become nested config overrides, --out names both report files.
        """
        cli = ExtLabCli()
        cli.parse_args(["--json", "sweep", "--model", "twohalflines", "--extension", "salpha:2",
                        "--eps", "0.1:0.001:3", "--probes", "2", "--out", "runs/sweep.csv"])
        overrides = cli.get_overrides()
        self.assertTrue(cli.args.json)
        self.assertEqual(overrides["model"], "twohalflines")
        self.assertEqual(overrides["extension"], "salpha:2")
        self.assertEqual(overrides["eps"], {"start": 0.1, "stop": 0.001, "count": 3})
        self.assertEqual(overrides["probes"], 2)
        self.assertEqual(overrides["output"]["json"], "runs/sweep.json")
        self.assertNotIn("seed", overrides)

    def test_json_after_subcommand(self):
        """
        --json is accepted on either side of the sub-command.
        """
        cli = ExtLabCli()
        cli.parse_args(["selftest", "--json", "--pairs", "10"])
        self.assertTrue(cli.args.json)
        self.assertEqual(cli.args.pairs, 10)
        cli.parse_args(["selftest"])
        self.assertFalse(cli.args.json)

    def test_parse_alphas(self):
        """
        Comma separated couplings, blanks ignored.
        """
        self.assertEqual(ExtLabCli.parse_alphas("-2, -1,0,,3"), [-2.0, -1.0, 0.0, 3.0])
        with self.assertRaises(ConfigError):
            ExtLabCli.parse_alphas("one")

    def test_unwritable_report_exits_3(self):
        """
        A report path that cannot be opened is a formatted failure with exit code 3.
        """
        with tempfile.TemporaryDirectory() as directory:
            blocker = Path(directory) / "blocker"
            blocker.write_text("not a directory", encoding="utf-8")
            errors = StringIO()
            with redirect_stderr(errors):
                code = CannedReportCli().main(["sweep", "--out", str(blocker / "run.csv")])
        self.assertEqual(code, ExtLabCli.EXIT_FAILURE)
        self.assertRegex(errors.getvalue(), r"sweep: \w+Error: ")

    def test_value_error_exits_3(self):
        """
        A ValueError from the computation is reported in the chosen format with exit code 3.
        """
        errors = StringIO()
        with redirect_stderr(errors):
            code = CannedReportCli(ValueError("matrix is singular")).main(["--json", "example1"])
        self.assertEqual(code, ExtLabCli.EXIT_FAILURE)
        # Log records may share stderr, so pick out the error object
        output = errors.getvalue()
        record = json.loads(output[output.rindex("{\n"):])
        self.assertEqual(record["command"], "example1")
        self.assertEqual(record["kind"], "ValueError")
        self.assertEqual(record["message"], "matrix is singular")


class CannedReportCli(ExtLabCli):
    """
    Skips the computation: returns an empty report or raises the given error.
    """

    def __init__(self, error: Exception = None):
        super().__init__()
        self.error: Exception = error

    def run_command(self, config: SweepConfig) -> SweepReport:
        if self.error is not None:
            raise self.error
        return SweepReport(command=self.args.command)
