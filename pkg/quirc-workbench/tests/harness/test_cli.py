# Copyright The QuIRC Workbench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import shutil
import tempfile
from unittest import TestCase, mock

from quirc.circuit.ir import CircuitValidationError
from quirc.harness import cli
from quirc.harness.logs import disable_log_correlation


class TestMain(TestCase):
    def setUp(self):
        patcher = mock.patch("quirc.harness.cli.configure_tracing")
        patcher.start()
        self.addCleanup(patcher.stop)
        self.addCleanup(disable_log_correlation)
        self.out = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.out, ignore_errors=True)

    @mock.patch("quirc.harness.cli.run_experiment")
    def test_ok(self, run_experiment):
        run_experiment.return_value = mock.Mock(passed=True)
        code = cli.main(["span", "--seed", "3", "--out", self.out])
        self.assertEqual(code, cli.EXIT_OK)
        (config,), _ = run_experiment.call_args
        self.assertEqual((config.kind, config.seed), ("span", 3))
        self.assertEqual(config.out, self.out)

    @mock.patch("quirc.harness.cli.run_experiment")
    def test_failed_check(self, run_experiment):
        run_experiment.return_value = mock.Mock(passed=False)
        self.assertEqual(cli.main(["span"]), cli.EXIT_CHECK_FAILED)

    @mock.patch("quirc.harness.cli.run_experiment")
    def test_invalid_config(self, run_experiment):
        code = cli.main(["surface", "--override", "distances=4"])
        self.assertEqual(code, cli.EXIT_INVALID)
        run_experiment.assert_not_called()

    @mock.patch("quirc.harness.cli.run_experiment")
    def test_invalid_circuit(self, run_experiment):
        run_experiment.side_effect = CircuitValidationError(
            "Qubit 9 out of range", "index", 4
        )
        self.assertEqual(cli.main(["surface"]), cli.EXIT_INVALID)

    @mock.patch("quirc.harness.cli.run_experiment")
    def test_unexpected_error(self, run_experiment):
        run_experiment.side_effect = RuntimeError("boom")
        with self.assertLogs("quirc.harness.cli", "ERROR"):
            self.assertEqual(cli.main(["span"]), cli.EXIT_ERROR)

    def test_unknown_kind(self):
        with self.assertRaises(SystemExit) as caught:
            cli.parse_args(["teleport"])
        self.assertEqual(caught.exception.code, 2)

    def test_end_to_end(self):
        code = cli.main(
            [
                "protocol-check",
                "--out",
                self.out,
                "--override",
                "nu_max=3",
                "--log-level",
                "warning",
            ]
        )
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(
            sorted(os.listdir(self.out)),
            ["protocol_check.csv", "protocol_check.json", "remote_cx.csv"],
        )
