"""Persistence: one JSON profile document per player, NDJSON session logs.

Profiles round-trip exactly (load(save(p)) == p). Session logs are
append-only, one JSON object per line, flushed per line so a crash
never corrupts lines already written.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Iterable, Iterator, Protocol

from .scheduler import LearnerProfile, LevelController, WordMemory

PROFILE_SCHEMA = 1

_PLAYER_ID_RE = re.compile(r"^[A-Za-z0-9_-]{1,64}$")


class StorageError(Exception):
    pass


class CorruptProfile(StorageError):
    pass


class ProfileStore(Protocol):
    def load(self, player_id: str) -> LearnerProfile: ...

    def save(self, profile: LearnerProfile) -> None: ...


def validate_player_id(player_id: str) -> str:
    if not _PLAYER_ID_RE.match(player_id):
        raise StorageError(f"player id {player_id!r} must match [A-Za-z0-9_-]{{1,64}}")
    return player_id


def profile_to_dict(profile: LearnerProfile) -> dict[str, Any]:
    c = profile.controller
    return {
        "schema": PROFILE_SCHEMA,
        "player_id": profile.player_id,
        "presentation_counter": profile.presentation_counter,
        "controller": {
            "window": c.window,
            "promote_mean": c.promote_mean,
            "demote_mean": c.demote_mean,
            "current_level": c.current_level,
            "recent_qualities": list(c.recent_qualities),
        },
        "memories": {
            word: {
                "ef": m.ef,
                "repetitions": m.repetitions,
                "interval": m.interval,
                "due_at": m.due_at,
            }
            for word, m in sorted(profile.memories.items())
        },
    }


def profile_from_dict(data: Any) -> LearnerProfile:
    try:
        if data["schema"] != PROFILE_SCHEMA:
            raise CorruptProfile(f"unsupported profile schema {data['schema']!r}")
        c = data["controller"]
        controller = LevelController(
            window=int(c["window"]),
            promote_mean=float(c["promote_mean"]),
            demote_mean=float(c["demote_mean"]),
            current_level=int(c["current_level"]),
            recent_qualities=[int(q) for q in c["recent_qualities"]],
        )
        memories = {
            str(word): WordMemory(
                word=str(word),
                ef=float(m["ef"]),
                repetitions=int(m["repetitions"]),
                interval=int(m["interval"]),
                due_at=int(m["due_at"]),
            )
            for word, m in data["memories"].items()
        }
        return LearnerProfile(
            player_id=str(data["player_id"]),
            memories=memories,
            controller=controller,
            presentation_counter=int(data["presentation_counter"]),
        )
    except CorruptProfile:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptProfile(f"profile document violates the schema: {exc}") from exc


class DirectoryProfileStore:
    """Profiles under <data-dir>/players/<id>.json, written atomically."""

    def __init__(self, data_dir: str | Path):
        self.players_dir = Path(data_dir) / "players"
        try:
            self.players_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot create {self.players_dir}: {exc}") from exc

    def _path(self, player_id: str) -> Path:
        return self.players_dir / f"{validate_player_id(player_id)}.json"

    def load(self, player_id: str) -> LearnerProfile:
        path = self._path(player_id)
        if not path.exists():
            return LearnerProfile(player_id=player_id)
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot read {path}: {exc}") from exc
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CorruptProfile(f"{path} is not valid JSON: {exc}") from exc
        return profile_from_dict(data)

    def save(self, profile: LearnerProfile) -> None:
        path = self._path(profile.player_id)
        tmp = path.with_suffix(".json.tmp")
        try:
            tmp.write_text(
                json.dumps(profile_to_dict(profile), indent=2) + "\n", encoding="utf-8"
            )
            tmp.replace(path)
        except OSError as exc:
            raise StorageError(f"cannot write {path}: {exc}") from exc


class InMemoryProfileStore:
    """Store for tests, simulation, and log replay.

    Profiles are held in their serialized form so load() always hands
    out an independent copy, exactly like the directory store does.
    """

    def __init__(self, profiles: Iterable[LearnerProfile] = ()):
        self.profiles: dict[str, dict[str, Any]] = {}
        for p in profiles:
            self.save(p)

    def load(self, player_id: str) -> LearnerProfile:
        if player_id in self.profiles:
            return profile_from_dict(self.profiles[player_id])
        return LearnerProfile(player_id=player_id)

    def save(self, profile: LearnerProfile) -> None:
        self.profiles[profile.player_id] = profile_to_dict(profile)


class SessionLog:
    """Append-only NDJSON log for one session."""

    def __init__(self, data_dir: str | Path, session_id: str):
        logs_dir = Path(data_dir) / "logs"
        try:
            logs_dir.mkdir(parents=True, exist_ok=True)
            self.path = logs_dir / f"{session_id}.ndjson"
            self._fh = self.path.open("a", encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot open session log: {exc}") from exc

    def append(self, record: dict[str, Any]) -> None:
        try:
            self._fh.write(json.dumps(record, separators=(",", ":")) + "\n")
            self._fh.flush()
        except (OSError, ValueError) as exc:
            raise StorageError(f"cannot append to {self.path}: {exc}") from exc

    def close(self) -> None:
        self._fh.close()


def read_session_log(path: str | Path) -> Iterator[dict[str, Any]]:
    """Yield parseable records; a truncated final line is skipped."""
    with Path(path).open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError:
                # Only the last line can be mid-write; anything before it
                # was flushed whole.
                continue
