"""Session runtime: raw protocol lines in, server events out, log in between.

This is the piece both the network service and the headless tools share.
It decodes client lines, applies them to the session core, answers
protocol and mode errors with error events instead of dropping them,
and appends a replayable record of everything that happened.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .catalog import Catalog
from .config import GameConfig, game_config_from_dict
from .protocol import (
    ClientEvent,
    ErrorEvent,
    ProtocolError,
    RoundResultEvent,
    ServerEvent,
    decode_client_event,
    decode_client_line,
    encode_client_event,
    encode_server_event,
)
from .session import (
    EventNotAllowedInMode,
    SessionQuit,
    SessionState,
    create_session,
    handle_event,
    snapshot,
    tick_session,
)
from .storage import InMemoryProfileStore, ProfileStore, profile_from_dict, profile_to_dict

AppendFn = Callable[[dict[str, Any]], None]


@dataclass
class SessionRuntime:
    session: SessionState
    append_log: AppendFn | None = None
    _attached: bool = field(default=False, init=False)

    def start_log(self) -> None:
        """Write the header that makes the log self-contained for replay."""
        self._log(
            {
                "type": "session_start",
                "session_id": self.session.session_id,
                "player_id": self.session.player.player_id,
                "seed": self.session.seed,
                "config": self.session.config.to_dict(),
                "profile": profile_to_dict(self.session.player),
            }
        )

    def attach_stream(self) -> list[ServerEvent]:
        """Events for a client that just connected (or reconnected)."""
        events: list[ServerEvent] = [snapshot(self.session)]
        if not self._attached:
            events.extend(self.session.pending_effects)
            self.session.pending_effects = []
            self._attached = True
        return events

    def process_event(self, event: ClientEvent, wall: int) -> list[ServerEvent]:
        """Apply a decoded client event; errors become error events."""
        try:
            _, emitted = handle_event(self.session, event, wall)
        except SessionQuit as exc:
            emitted = [ErrorEvent("session_quit", str(exc))]
        except EventNotAllowedInMode as exc:
            emitted = [ErrorEvent("event_not_allowed", str(exc))]
        self._log(
            {
                "type": "event",
                "wall": wall,
                "event": encode_client_event(event),
                "emitted": [encode_server_event(e) for e in emitted],
            }
        )
        for e in emitted:
            if isinstance(e, RoundResultEvent):
                self._log(
                    {
                        "type": "round_result",
                        "wall": wall,
                        **encode_server_event(e),
                    }
                )
        if self.session.ended:
            self._log({"type": "session_end", "wall": wall, "score": self.session.score})
        return emitted

    def process_line(self, line: str, wall: int) -> list[ServerEvent]:
        """Raw NDJSON line from the client; malformed input is answered,
        never dropped."""
        try:
            event = decode_client_line(line)
        except ProtocolError as exc:
            return [ErrorEvent(exc.code, str(exc))]
        return self.process_event(event, wall)

    def process_tick(self, wall: int) -> list[ServerEvent]:
        _, emitted = tick_session(self.session, wall)
        if emitted:
            # Quiet ticks only move the clock, which the next record's
            # wall time reproduces on its own.
            self._log(
                {
                    "type": "tick",
                    "wall": wall,
                    "emitted": [encode_server_event(e) for e in emitted],
                }
            )
        return emitted

    def _log(self, record: dict[str, Any]) -> None:
        if self.append_log is not None:
            self.append_log(record)


@dataclass
class ReplayResult:
    session: SessionState
    # Encoded server events per replayed input line, in log order.
    emitted: list[list[dict[str, Any]]]
    recorded_final_score: int | None

    @property
    def final_score(self) -> int:
        return self.session.score


def replay_session_log(records: Iterable[dict[str, Any]], catalog: Catalog) -> ReplayResult:
    """Re-run a logged session through a fresh engine.

    The header carries everything needed (seed, config, starting
    profile); the catalog must be the one the session played with.
    """
    it = iter(records)
    try:
        header = next(it)
    except StopIteration:
        raise ValueError("empty session log") from None
    if header.get("type") != "session_start":
        raise ValueError("session log must start with a session_start record")

    config = game_config_from_dict(header["config"])
    store = InMemoryProfileStore([profile_from_dict(header["profile"])])
    session = create_session(
        header["player_id"],
        catalog,
        header["seed"],
        config=config,
        store=store,
        session_id=header["session_id"],
    )
    runtime = SessionRuntime(session=session)

    emitted: list[list[dict[str, Any]]] = []
    recorded_score: int | None = None
    for record in it:
        kind = record.get("type")
        if kind == "event":
            events = runtime.process_event(decode_client_event(record["event"]), record["wall"])
            emitted.append([encode_server_event(e) for e in events])
        elif kind == "tick":
            events = runtime.process_tick(record["wall"])
            emitted.append([encode_server_event(e) for e in events])
        elif kind == "session_end":
            recorded_score = record["score"]
        # round_result records are derived views; replay regenerates them.
    return ReplayResult(session=session, emitted=emitted, recorded_final_score=recorded_score)
