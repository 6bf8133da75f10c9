"""Record real server event streams as NDJSON fixtures for the client tests.

The client test suite replays these byte-for-byte, so the TypeScript
parser and view model are exercised against exactly what the service
sends, not against hand-written approximations.

Run from the repository root with the Python package installed:

    python3 frontend/scripts/record_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from molespell.config import GameConfig
from molespell.catalog import load_catalog
from molespell.protocol import encode_line
from molespell.runtime import SessionRuntime
from molespell.session import Bonus, create_session
from molespell.storage import InMemoryProfileStore

FIXTURES = Path(__file__).resolve().parent.parent / "test" / "fixtures"
CONFIG = GameConfig()


class Recorder:
    def __init__(self, words: list[str], seed: int):
        catalog = load_catalog(
            {"lists": [{"id": "w", "name": "Words", "level": 1, "words": words}]}
        )
        self.session = create_session(
            "kid", catalog, seed, store=InMemoryProfileStore(), now=0
        )
        self.runtime = SessionRuntime(session=self.session)
        self.lines = [encode_line(e) for e in self.runtime.attach_stream()]
        self.wall = 0

    def _run(self, line: str) -> None:
        self.lines.extend(
            encode_line(e) for e in self.runtime.process_line(line, self.wall)
        )

    def key(self, letter: str) -> None:
        self.wall += 250
        self._run(json.dumps({"type": "key_hit", "letter": letter}))

    def tick(self, wall: int) -> None:
        self.wall = wall
        self.lines.extend(
            encode_line(e) for e in self.runtime.process_tick(self.wall)
        )

    def escalate_once(self) -> None:
        # No pauses here, so the active clock equals the wall clock.
        entered = self.session.mode.round.phase_entered_at
        self.tick(entered + CONFIG.round.choice_hint_delay_ms)

    def spell(self, word: str) -> None:
        for letter in word:
            self.key(letter)

    def write(self, name: str) -> None:
        (FIXTURES / name).write_text("".join(self.lines), encoding="utf-8")
        print(f"{name}: {len(self.lines)} lines")


def record_occurrence_round() -> None:
    rec = Recorder(["occurrence", "labyrinth"], seed=5)
    rec.spell("occ")
    rec.escalate_once()  # bombs for the u
    rec.key("u")
    rec.escalate_once()  # bombs for the first r ...
    rec.escalate_once()  # ... then the mole gives it away
    rec.key("r")
    rec.spell("rence")
    rec.write("occurrence-round.ndjson")


def record_bonus_session() -> None:
    rec = Recorder(["cat", "dog", "sun", "map"], seed=11)
    for _ in range(3):  # three perfect rounds trigger the bonus
        rec.spell(rec.session.mode.round.word)
    mode = rec.session.mode
    assert isinstance(mode, Bonus), "bonus did not start"
    started = mode.state.start  # active ms == wall ms, no pauses here
    for spawn in mode.state.spawns[:2]:  # two clean hits
        rec.wall = started + spawn.t_offset + 1
        rec._run(json.dumps({"type": "whack", "cell": spawn.cell}))
    miss = mode.state.spawns[2]
    rec.wall = started + miss.t_offset + 1
    rec._run(json.dumps({"type": "whack", "cell": (miss.cell + 1) % 9}))
    rec.tick(started + CONFIG.bonus.duration_ms + 50)  # expiry cashes out
    rec.key("m")  # back to spelling
    rec.write("bonus-session.ndjson")


if __name__ == "__main__":
    FIXTURES.mkdir(parents=True, exist_ok=True)
    record_occurrence_round()
    record_bonus_session()
