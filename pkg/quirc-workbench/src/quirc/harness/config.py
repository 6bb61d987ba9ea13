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

"""
Experiment configuration.

Values are layered, later layers winning: dataclass defaults, a flat
``key = value`` file, ``QUIRC_<KEY>`` environment variables, ``key=value``
overrides and finally the explicit ``seed``/``shots``/``out`` arguments.
Lists are comma separated; ``combos`` is written ``3x8,4x6``.
"""

import hashlib
import json
from dataclasses import asdict, dataclass, fields, replace
from logging import getLogger
from os import environ
from typing import Dict, Iterable, Mapping, Optional, Tuple

from quirc.harness.environment_variables import QUIRC_PREFIX
from quirc.routecard.topology import TOPOLOGY_KINDS
from quirc.sched.benchmark import DEFAULT_COMBOS, DEFAULT_MODULES

logger = getLogger(__name__)

KINDS = (
    "span",
    "transpile",
    "ep-sched",
    "protocol-check",
    "surface",
    "threshold",
    "full-model",
    "reproduce-table1",
    "reproduce-thresholds",
    "decoder-check",
)
SWEEPS = ("p_local", "p_remote", "p_latency")
SEED_LIMIT = 1 << 64
_PROBABILITIES = (
    "p_spam",
    "p_local",
    "p_remote_x",
    "p_remote_z",
    "p_latency",
    "full_p_latency",
)


class ConfigError(ValueError):
    """Raised when configuration values are missing or out of range."""

    def __init__(self, message: str, fields_: Iterable[str] = ()):
        super().__init__(message)
        self.fields = tuple(fields_)


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str = "surface"
    seed: int = 0
    shots: int = 100_000
    out: str = "quirc-out"
    workers: int = 1
    # transpile and span
    n: int = 24
    combos: Tuple[Tuple[int, int], ...] = DEFAULT_COMBOS
    modules: Tuple[int, ...] = DEFAULT_MODULES
    samples: int = 100
    span_k: Tuple[int, ...] = (2, 3, 6, 12)
    span_trials: int = 100_000
    # routing card
    topologies: Tuple[str, ...] = TOPOLOGY_KINDS
    ep_modules: Tuple[int, ...] = (1, 2, 4, 6, 8, 12)
    internals_per_gap: int = 1
    nu: int = 6
    nu_max: int = 12
    t_ep: float = 2e-6
    t1: float = 100e-6
    # surface code
    distances: Tuple[int, ...] = (3, 5)
    include_d7: bool = False
    rounds: Optional[int] = None
    latency_once: bool = True
    p_spam: float = 0.01
    p_local: float = 0.001
    p_remote_x: float = 0.0
    p_remote_z: float = 0.0
    p_latency: float = 0.0
    sweep: str = "p_local"
    grid: Tuple[float, ...] = ()
    bootstrap: int = 200
    full_p_local: Tuple[float, ...] = (0.002, 0.005)
    full_p_latency: float = 0.01
    pair_budget: Optional[int] = None

    @property
    def distance_list(self) -> Tuple[int, ...]:
        if self.include_d7 and 7 not in self.distances:
            return tuple(sorted(self.distances + (7,)))
        return self.distances

    def canonical(self) -> Dict:
        """Everything that affects results; excludes ``out`` and
        ``workers``."""
        values = asdict(self)
        for key in ("out", "workers"):
            values.pop(key)
        return values

    def config_hash(self) -> str:
        text = json.dumps(self.canonical(), sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _split(value: str):
    return [part.strip() for part in value.split(",") if part.strip()]


def _bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise ValueError("not a boolean: {!r}".format(value))


def _optional_int(value: str) -> Optional[int]:
    if value.strip().lower() in ("", "none"):
        return None
    return int(value)


def _combos(value: str) -> Tuple[Tuple[int, int], ...]:
    combos = []
    for part in _split(value):
        p, k = part.lower().split("x")
        combos.append((int(p), int(k)))
    return tuple(combos)


def _ints(value: str) -> Tuple[int, ...]:
    return tuple(int(v) for v in _split(value))


def _floats(value: str) -> Tuple[float, ...]:
    return tuple(float(v) for v in _split(value))


_CONVERTERS = {
    "kind": str.strip,
    "seed": int,
    "shots": int,
    "out": str.strip,
    "workers": int,
    "n": int,
    "combos": _combos,
    "modules": _ints,
    "samples": int,
    "span_k": _ints,
    "span_trials": int,
    "topologies": lambda v: tuple(_split(v)),
    "ep_modules": _ints,
    "internals_per_gap": int,
    "nu": int,
    "nu_max": int,
    "t_ep": float,
    "t1": float,
    "distances": _ints,
    "include_d7": _bool,
    "rounds": _optional_int,
    "latency_once": _bool,
    "p_spam": float,
    "p_local": float,
    "p_remote_x": float,
    "p_remote_z": float,
    "p_latency": float,
    "sweep": str.strip,
    "grid": _floats,
    "bootstrap": int,
    "full_p_local": _floats,
    "full_p_latency": float,
    "pair_budget": _optional_int,
}


def parse_assignments(text: str, source: str = "<config>") -> Dict[str, str]:
    """Reads ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(
                "{}:{}: expected key = value, got {!r}".format(
                    source, number, raw
                )
            )
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _from_environ(env: Mapping[str, str]) -> Dict[str, str]:
    values = {}
    for key in _CONVERTERS:
        name = QUIRC_PREFIX + key.upper()
        if name in env:
            values[key] = env[name]
    return values


def _convert(raw: Mapping[str, str]) -> Dict:
    converted = {}
    bad = []
    for key, value in raw.items():
        converter = _CONVERTERS.get(key)
        if converter is None:
            bad.append(key)
            continue
        try:
            converted[key] = converter(value)
        except ValueError:
            bad.append(key)
    if bad:
        raise ConfigError(
            "Unknown or malformed config keys: {}".format(", ".join(bad)),
            bad,
        )
    return converted


def validate(config: ExperimentConfig) -> ExperimentConfig:
    problems = []
    if config.kind not in KINDS:
        problems.append("kind")
    if not 0 <= config.seed < SEED_LIMIT:
        problems.append("seed")
    for name in ("shots", "samples", "span_trials", "n", "bootstrap"):
        if getattr(config, name) < 1:
            problems.append(name)
    if config.workers < 0:
        problems.append("workers")
    for name in _PROBABILITIES:
        if not 0.0 <= getattr(config, name) <= 1.0:
            problems.append(name)
    if any(not 0.0 <= p <= 1.0 for p in config.grid + config.full_p_local):
        problems.append("grid")
    for name in ("combos", "modules", "span_k", "topologies", "ep_modules"):
        if not getattr(config, name):
            problems.append(name)
    if not config.full_p_local:
        problems.append("full_p_local")
    if not config.distances or any(
        d < 3 or d % 2 == 0 for d in config.distances
    ):
        problems.append("distances")
    if config.sweep not in SWEEPS:
        problems.append("sweep")
    if any(kind not in TOPOLOGY_KINDS for kind in config.topologies):
        problems.append("topologies")
    if config.nu < 2 or config.nu_max < 2:
        problems.append("nu")
    if config.t_ep <= 0 or config.t1 <= 0:
        problems.append("t_ep/t1")
    if config.internals_per_gap < 0:
        problems.append("internals_per_gap")
    if config.rounds is not None and config.rounds < 1:
        problems.append("rounds")
    if problems:
        raise ConfigError(
            "Invalid configuration fields: {}".format(", ".join(problems)),
            problems,
        )
    return config


def load_config(
    kind: Optional[str] = None,
    path: Optional[str] = None,
    env: Optional[Mapping[str, str]] = None,
    overrides: Iterable[str] = (),
    seed: Optional[int] = None,
    shots: Optional[int] = None,
    out: Optional[str] = None,
) -> ExperimentConfig:
    raw: Dict[str, str] = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as handle:
                raw.update(parse_assignments(handle.read(), path))
        except OSError as exc:
            raise ConfigError(
                "Cannot read config {}: {}".format(path, exc), ["config"]
            ) from exc
    raw.update(_from_environ(environ if env is None else env))
    raw.update(parse_assignments("\n".join(overrides), "--override"))
    values = _convert(raw)
    if kind is not None:
        values["kind"] = kind
    explicit = {"seed": seed, "shots": shots, "out": out}
    values.update({k: v for k, v in explicit.items() if v is not None})
    known = {f.name for f in fields(ExperimentConfig)}
    config = replace(
        ExperimentConfig(), **{k: v for k, v in values.items() if k in known}
    )
    logger.debug("Loaded config %s", config)
    return validate(config)
