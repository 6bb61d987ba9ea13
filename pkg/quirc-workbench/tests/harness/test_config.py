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
import tempfile
from unittest import TestCase, mock

from quirc.harness.config import (
    ConfigError,
    ExperimentConfig,
    load_config,
    parse_assignments,
)


class TestLoadConfig(TestCase):
    def setUp(self):
        handle, self.path = tempfile.mkstemp(suffix=".cfg")
        with os.fdopen(handle, "w") as config_file:
            config_file.write(
                "# surface run\n"
                "shots = 10\n"
                "seed = 1\n"
                "distances = 3,5\n"
                "combos = 3x8, 4x6\n"
            )

    def tearDown(self):
        os.remove(self.path)

    def test_defaults(self):
        config = load_config(kind="span", env={})
        self.assertEqual(config, ExperimentConfig(kind="span"))

    def test_file_values(self):
        config = load_config(path=self.path, env={})
        self.assertEqual(config.shots, 10)
        self.assertEqual(config.seed, 1)
        self.assertEqual(config.combos, ((3, 8), (4, 6)))

    def test_layer_precedence(self):
        env = {"QUIRC_SHOTS": "20", "QUIRC_SEED": "2"}
        config = load_config(path=self.path, env=env)
        self.assertEqual((config.shots, config.seed), (20, 2))

        config = load_config(
            path=self.path, env=env, overrides=["shots=30"]
        )
        self.assertEqual((config.shots, config.seed), (30, 2))

        config = load_config(
            path=self.path, env=env, overrides=["shots=30"], shots=40
        )
        self.assertEqual(config.shots, 40)

    @mock.patch.dict("os.environ", {"QUIRC_P_LOCAL": "0.004"})
    def test_process_environment(self):
        self.assertEqual(load_config().p_local, 0.004)

    def test_converters(self):
        config = load_config(
            env={},
            overrides=[
                "include_d7=yes",
                "rounds=none",
                "latency_once=false",
                "grid=0.01, 0.02",
                "topologies=ring,ruche-8-4",
            ],
        )
        self.assertEqual(config.distance_list, (3, 5, 7))
        self.assertIsNone(config.rounds)
        self.assertFalse(config.latency_once)
        self.assertEqual(config.grid, (0.01, 0.02))
        self.assertEqual(config.topologies, ("ring", "ruche-8-4"))

    def test_explicit_kind_wins(self):
        config = load_config(
            kind="threshold", env={}, overrides=["kind=span"]
        )
        self.assertEqual(config.kind, "threshold")

    def test_unknown_and_malformed_keys(self):
        with self.assertRaises(ConfigError) as caught:
            load_config(env={}, overrides=["bogus=1", "shots=abc"])
        self.assertEqual(set(caught.exception.fields), {"bogus", "shots"})

    def test_validation(self):
        cases = {
            "distances=4": "distances",
            "distances=1": "distances",
            "p_local=1.5": "p_local",
            "sweep=p_other": "sweep",
            "topologies=torus": "topologies",
            "shots=0": "shots",
            "rounds=0": "rounds",
            "nu=1": "nu",
        }
        for override, field in cases.items():
            with self.subTest(override=override):
                with self.assertRaises(ConfigError) as caught:
                    load_config(env={}, overrides=[override])
                self.assertIn(field, caught.exception.fields)

    def test_bad_kind_and_seed(self):
        with self.assertRaises(ConfigError) as caught:
            load_config(kind="nope", env={})
        self.assertEqual(caught.exception.fields, ("kind",))
        with self.assertRaises(ConfigError):
            load_config(env={}, seed=1 << 64)

    def test_missing_file(self):
        with self.assertRaises(ConfigError) as caught:
            load_config(path=self.path + ".missing", env={})
        self.assertEqual(caught.exception.fields, ("config",))


class TestParseAssignments(TestCase):
    def test_comments_and_blanks(self):
        values = parse_assignments("a = 1 # one\n\n# skip\nb=x=y\n")
        self.assertEqual(values, {"a": "1", "b": "x=y"})

    def test_missing_equals(self):
        with self.assertRaises(ConfigError):
            parse_assignments("shots 10\n", "run.cfg")


class TestConfigHash(TestCase):
    def test_ignores_out_and_workers(self):
        base = ExperimentConfig()
        other = ExperimentConfig(out="elsewhere", workers=8)
        self.assertNotIn("out", base.canonical())
        self.assertEqual(base.config_hash(), other.config_hash())
        self.assertEqual(len(base.config_hash()), 64)

    def test_changes_with_seed(self):
        self.assertNotEqual(
            ExperimentConfig(seed=1).config_hash(),
            ExperimentConfig(seed=2).config_hash(),
        )
