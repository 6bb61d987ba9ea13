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

import argparse
import sys
from logging import getLogger
from typing import Optional, Sequence

from quirc.circuit.ir import CircuitValidationError
from quirc.harness.config import KINDS, ConfigError, load_config
from quirc.harness.logs import LEVELS, enable_log_correlation
from quirc.harness.runner import run as run_experiment
from quirc.harness.tracing import configure_tracing

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_CHECK_FAILED = 3


def parse_args(argv: Optional[Sequence[str]] = None):
    parser = argparse.ArgumentParser(
        prog="quirc",
        description="""
        quirc runs one workbench experiment and writes its CSV rows and
        JSON summary into the output directory.
        """,
    )
    parser.add_argument("kind", choices=KINDS, help="Experiment to run.")
    parser.add_argument(
        "--config", help="Flat key = value file with experiment settings."
    )
    parser.add_argument("--seed", type=int, help="64-bit master seed.")
    parser.add_argument("--shots", type=int, help="Shots per sweep point.")
    parser.add_argument("--out", help="Output directory.")
    parser.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="""
        Overrides one config key; may be repeated.

        Examples:

            --override distances=3,5,7 --override p_local=0.004
        """,
    )
    parser.add_argument(
        "--log-level",
        choices=sorted(LEVELS),
        help="Overrides QUIRC_LOG_LEVEL.",
    )
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    enable_log_correlation(
        log_level=LEVELS.get(args.log_level) if args.log_level else None
    )
    configure_tracing()
    try:
        config = load_config(
            kind=args.kind,
            path=args.config,
            overrides=args.override,
            seed=args.seed,
            shots=args.shots,
            out=args.out,
        )
        report = run_experiment(config)
    except (ConfigError, CircuitValidationError) as exc:
        logger.error("%s", exc)
        return EXIT_INVALID
    except Exception:  # pylint: disable=broad-except
        logger.exception("Experiment %s failed", args.kind)
        return EXIT_ERROR
    if not report.passed:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def run() -> None:
    sys.exit(main())
