"""Aggregated game configuration with optional JSON file overrides.

Every tunable constant in the game lives here: round timing/scoring,
bonus pacing, level graduation thresholds, and session policy. A config
file supplies partial overrides; anything absent keeps its default.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .bonus import BonusConfig
from .engine import RoundConfig


@dataclass(frozen=True)
class LevelPolicy:
    window: int = 10
    promote_mean: float = 4.5
    demote_mean: float = 2.0


@dataclass(frozen=True)
class SessionPolicy:
    # Consecutive perfect rounds that trigger the bonus round.
    streak_to_bonus: int = 3
    tick_interval_ms: int = 100


@dataclass(frozen=True)
class GameConfig:
    round: RoundConfig = field(default_factory=RoundConfig)
    bonus: BonusConfig = field(default_factory=BonusConfig)
    levels: LevelPolicy = field(default_factory=LevelPolicy)
    session: SessionPolicy = field(default_factory=SessionPolicy)

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def game_config_from_dict(data: dict[str, Any]) -> GameConfig:
    """Build a GameConfig from a partial override mapping.

    Unknown sections or keys raise ValueError so typos do not silently
    fall back to defaults.
    """
    known = {"round": RoundConfig, "bonus": BonusConfig, "levels": LevelPolicy, "session": SessionPolicy}
    extra = set(data) - set(known)
    if extra:
        raise ValueError(f"unknown config sections: {sorted(extra)}")
    sections: dict[str, Any] = {}
    for name, cls in known.items():
        overrides = data.get(name, {})
        if not isinstance(overrides, dict):
            raise ValueError(f"config section {name!r} must be an object")
        allowed = {f.name for f in dataclasses.fields(cls)}
        unknown = set(overrides) - allowed
        if unknown:
            raise ValueError(f"unknown keys in config section {name!r}: {sorted(unknown)}")
        sections[name] = cls(**overrides)
    return GameConfig(**sections)


def load_game_config(path: str | Path | None) -> GameConfig:
    if path is None:
        return GameConfig()
    raw = Path(path).read_text(encoding="utf-8")
    data = json.loads(raw)
    if not isinstance(data, dict):
        raise ValueError("config file must contain a JSON object")
    return game_config_from_dict(data)
