"""Run configuration loaded from JSON, with defaults for every field."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from .engines.operators import ENGINES
from .errors import ConfigInvalid
from .words import Alphabet

DEPTH_LIMIT = 12


def _default_alphabet():
    return list(Alphabet.default().symbols)


@dataclass
class RunConfig:
    alphabet: list = field(default_factory=_default_alphabet)
    base: list = field(default_factory=lambda: ["bold", "kind"])
    depth: int = 3
    superstructure_depth: int = 3
    engine: str = "adjective"
    seed: int = 0
    samples: int = 200
    step_budget: int = 7
    output: str | None = None

    def validate(self):
        def need(cond, key, msg):
            if not cond:
                raise ConfigInvalid(f"$.{key}", msg)

        need(isinstance(self.alphabet, list) and all(isinstance(g, str) for g in self.alphabet), "alphabet", "must be a list of strings")
        try:
            Alphabet(tuple(self.alphabet))
        except ValueError as exc:
            raise ConfigInvalid("$.alphabet", str(exc)) from None
        need(isinstance(self.base, list) and self.base and all(isinstance(b, str) and b for b in self.base), "base", "must be a nonempty list of names")
        for key, limit in (("depth", DEPTH_LIMIT), ("superstructure_depth", 4), ("step_budget", 64)):
            value = getattr(self, key)
            need(type(value) is int and 0 <= value <= limit, key, f"must be an integer in [0, {limit}]")
        need(self.step_budget >= 1, "step_budget", "must be at least 1")
        need(self.engine in ENGINES, "engine", f"must be one of {list(ENGINES)}")
        need(type(self.seed) is int, "seed", "must be an integer")
        need(type(self.samples) is int and self.samples > 0, "samples", "must be a positive integer")
        need(self.output is None or isinstance(self.output, str), "output", "must be a path string or null")
        return self

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigInvalid("$", "config must be a JSON object")
        known = {f.name for f in fields(cls)}
        for key in data:
            if key not in known:
                raise ConfigInvalid(f"$.{key}", "unknown key")
        return cls(**data).validate()


def load_config(path) -> RunConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise ConfigInvalid("$", f"no such file {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigInvalid("$", f"invalid JSON: {exc}") from None
    return RunConfig.from_dict(data)

