"""Wire protocol: newline-delimited JSON messages between client and service.

Each line is one message with a ``type`` tag. Client-to-server types:
key_hit, replay, whack, pause, resume, quit. Server-to-client types:
effect, state_snapshot, round_result, bonus_start, bonus_end, error.
Decoding is strict: unknown types, unknown fields, and badly typed
fields are all rejected, never silently dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from . import engine
from .engine import Effect, LetterRecord, Outcome, RoundResult

ALPHABET = engine.ALPHABET


class ProtocolError(ValueError):
    """A message that does not conform to the wire format."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# Client -> server ----------------------------------------------------------


@dataclass(frozen=True)
class KeyHit:
    letter: str


@dataclass(frozen=True)
class Replay:
    pass


@dataclass(frozen=True)
class Whack:
    cell: int


@dataclass(frozen=True)
class Pause:
    pass


@dataclass(frozen=True)
class Resume:
    pass


@dataclass(frozen=True)
class Quit:
    pass


ClientEvent = Union[KeyHit, Replay, Whack, Pause, Resume, Quit]


# Server -> client ----------------------------------------------------------


@dataclass(frozen=True)
class RoundView:
    """What the client may know about the round in flight: accepted
    letters, total length, and the visible hint state. Unresolved
    letters are never exposed outside a hint."""

    length: int
    accepted: str
    phase_kind: str  # awaiting_input | choice_hint | giveaway_reveal
    choices: tuple[str, ...] = ()
    revealed: str | None = None


@dataclass(frozen=True)
class BonusView:
    grid_cells: int
    remaining_ms: int
    active_cell: int | None
    hits: int


@dataclass(frozen=True)
class EffectEvent:
    effect: Effect


@dataclass(frozen=True)
class StateSnapshot:
    session_id: str
    score: int
    streak: int
    level: int
    mode: str  # spelling | bonus | paused | idle
    round: RoundView | None = None
    bonus: BonusView | None = None


@dataclass(frozen=True)
class RoundResultEvent:
    result: RoundResult
    score: int
    streak: int
    level: int


@dataclass(frozen=True)
class BonusStart:
    pass


@dataclass(frozen=True)
class BonusEnd:
    points: int


@dataclass(frozen=True)
class ErrorEvent:
    code: str
    message: str


ServerEvent = Union[
    EffectEvent, StateSnapshot, RoundResultEvent, BonusStart, BonusEnd, ErrorEvent
]


# Encoding ------------------------------------------------------------------

_CLIENT_TAGS = {
    KeyHit: "key_hit",
    Replay: "replay",
    Whack: "whack",
    Pause: "pause",
    Resume: "resume",
    Quit: "quit",
}

_EFFECT_TAGS = {
    engine.SpeakWord: "speak_word",
    engine.SpeakLetter: "speak_letter",
    engine.LetterAccepted: "letter_accepted",
    engine.KeyFlashGreen: "key_flash_green",
    engine.KeyFlashRed: "key_flash_red",
    engine.PlayChime: "play_chime",
    engine.PlayBuzzer: "play_buzzer",
    engine.ShowChoiceBombs: "show_choice_bombs",
    engine.ExplodeRevealMole: "explode_reveal_mole",
    engine.RoundComplete: "round_complete",
}


def encode_client_event(event: ClientEvent) -> dict[str, Any]:
    payload: dict[str, Any] = {"type": _CLIENT_TAGS[type(event)]}
    if isinstance(event, KeyHit):
        payload["letter"] = event.letter
    elif isinstance(event, Whack):
        payload["cell"] = event.cell
    return payload


def encode_server_event(event: ServerEvent) -> dict[str, Any]:
    if isinstance(event, EffectEvent):
        return {"type": "effect", "effect": effect_to_wire(event.effect)}
    if isinstance(event, StateSnapshot):
        data: dict[str, Any] = {
            "type": "state_snapshot",
            "session_id": event.session_id,
            "score": event.score,
            "streak": event.streak,
            "level": event.level,
            "mode": event.mode,
            "round": None,
            "bonus": None,
        }
        if event.round is not None:
            data["round"] = {
                "length": event.round.length,
                "accepted": event.round.accepted,
                "phase_kind": event.round.phase_kind,
                "choices": sorted(event.round.choices),
                "revealed": event.round.revealed,
            }
        if event.bonus is not None:
            data["bonus"] = {
                "grid_cells": event.bonus.grid_cells,
                "remaining_ms": event.bonus.remaining_ms,
                "active_cell": event.bonus.active_cell,
                "hits": event.bonus.hits,
            }
        return data
    if isinstance(event, RoundResultEvent):
        return {
            "type": "round_result",
            "result": result_to_wire(event.result),
            "score": event.score,
            "streak": event.streak,
            "level": event.level,
        }
    if isinstance(event, BonusStart):
        return {"type": "bonus_start"}
    if isinstance(event, BonusEnd):
        return {"type": "bonus_end", "points": event.points}
    if isinstance(event, ErrorEvent):
        return {"type": "error", "code": event.code, "message": event.message}
    raise TypeError(f"not a server event: {event!r}")


def effect_to_wire(effect: Effect) -> dict[str, Any]:
    kind = _EFFECT_TAGS[type(effect)]
    if isinstance(effect, engine.SpeakWord):
        return {"kind": kind, "text": effect.text}
    if isinstance(effect, (engine.SpeakLetter, engine.KeyFlashGreen, engine.KeyFlashRed, engine.ExplodeRevealMole)):
        return {"kind": kind, "letter": effect.letter}
    if isinstance(effect, engine.LetterAccepted):
        return {"kind": kind, "letter": effect.letter, "index": effect.index}
    if isinstance(effect, engine.ShowChoiceBombs):
        return {"kind": kind, "letters": sorted(effect.letters)}
    if isinstance(effect, engine.RoundComplete):
        return {"kind": kind, "result": result_to_wire(effect.result)}
    return {"kind": kind}


def result_to_wire(result: RoundResult) -> dict[str, Any]:
    return {
        "word": result.word,
        "records": [
            {"letter": r.letter, "outcome": r.outcome.value, "wrong_attempts": r.wrong_attempts}
            for r in result.records
        ],
        "points": result.points,
        "quality": result.quality,
        "perfect": result.perfect,
    }


def encode_line(event: ClientEvent | ServerEvent) -> str:
    if type(event) in _CLIENT_TAGS:
        data = encode_client_event(event)  # type: ignore[arg-type]
    else:
        data = encode_server_event(event)  # type: ignore[arg-type]
    return json.dumps(data, separators=(",", ":")) + "\n"


# Decoding ------------------------------------------------------------------


def _parse_json_line(line: str) -> dict[str, Any]:
    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ProtocolError("bad_json", f"message is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ProtocolError("bad_json", "message must be a JSON object")
    return data


def _check_fields(data: dict[str, Any], required: dict[str, type | tuple[type, ...]]) -> None:
    unknown = set(data) - {"type"} - set(required)
    if unknown:
        raise ProtocolError(
            "unknown_field", f"{data.get('type')}: unknown fields {sorted(unknown)}"
        )
    for name, expected in required.items():
        if name not in data:
            raise ProtocolError("missing_field", f"{data.get('type')}: missing field {name!r}")
        value = data[name]
        if isinstance(value, bool) and expected in (int, (int,)):
            raise ProtocolError("bad_field", f"{data.get('type')}: field {name!r} must be an integer")
        if not isinstance(value, expected):
            raise ProtocolError(
                "bad_field", f"{data.get('type')}: field {name!r} has the wrong type"
            )


def decode_client_event(data: dict[str, Any]) -> ClientEvent:
    tag = data.get("type")
    if tag == "key_hit":
        _check_fields(data, {"letter": str})
        letter = data["letter"]
        if len(letter) != 1 or letter not in ALPHABET:
            raise ProtocolError("bad_field", f"key_hit: letter {letter!r} is not a-z")
        return KeyHit(letter)
    if tag == "replay":
        _check_fields(data, {})
        return Replay()
    if tag == "whack":
        _check_fields(data, {"cell": int})
        if data["cell"] < 0:
            raise ProtocolError("bad_field", "whack: cell must be >= 0")
        return Whack(data["cell"])
    if tag == "pause":
        _check_fields(data, {})
        return Pause()
    if tag == "resume":
        _check_fields(data, {})
        return Resume()
    if tag == "quit":
        _check_fields(data, {})
        return Quit()
    raise ProtocolError("unknown_type", f"unknown client message type {tag!r}")


def decode_client_line(line: str) -> ClientEvent:
    return decode_client_event(_parse_json_line(line))


def decode_server_event(data: dict[str, Any]) -> ServerEvent:
    tag = data.get("type")
    if tag == "effect":
        _check_fields(data, {"effect": dict})
        return EffectEvent(effect_from_wire(data["effect"]))
    if tag == "state_snapshot":
        _check_fields(
            data,
            {
                "session_id": str,
                "score": int,
                "streak": int,
                "level": int,
                "mode": str,
                "round": (dict, type(None)),
                "bonus": (dict, type(None)),
            },
        )
        round_view = None
        if data["round"] is not None:
            r = data["round"]
            _check_round_view(r)
            round_view = RoundView(
                length=r["length"],
                accepted=r["accepted"],
                phase_kind=r["phase_kind"],
                choices=tuple(r["choices"]),
                revealed=r["revealed"],
            )
        bonus_view = None
        if data["bonus"] is not None:
            b = data["bonus"]
            _check_bonus_view(b)
            bonus_view = BonusView(
                grid_cells=b["grid_cells"],
                remaining_ms=b["remaining_ms"],
                active_cell=b["active_cell"],
                hits=b["hits"],
            )
        return StateSnapshot(
            session_id=data["session_id"],
            score=data["score"],
            streak=data["streak"],
            level=data["level"],
            mode=data["mode"],
            round=round_view,
            bonus=bonus_view,
        )
    if tag == "round_result":
        _check_fields(data, {"result": dict, "score": int, "streak": int, "level": int})
        return RoundResultEvent(
            result=result_from_wire(data["result"]),
            score=data["score"],
            streak=data["streak"],
            level=data["level"],
        )
    if tag == "bonus_start":
        _check_fields(data, {})
        return BonusStart()
    if tag == "bonus_end":
        _check_fields(data, {"points": int})
        return BonusEnd(data["points"])
    if tag == "error":
        _check_fields(data, {"code": str, "message": str})
        return ErrorEvent(data["code"], data["message"])
    raise ProtocolError("unknown_type", f"unknown server message type {tag!r}")


def decode_server_line(line: str) -> ServerEvent:
    return decode_server_event(_parse_json_line(line))


def _check_round_view(r: Any) -> None:
    if (
        not isinstance(r, dict)
        or set(r) != {"length", "accepted", "phase_kind", "choices", "revealed"}
        or not isinstance(r["length"], int)
        or not isinstance(r["accepted"], str)
        or r["phase_kind"] not in ("awaiting_input", "choice_hint", "giveaway_reveal")
        or not isinstance(r["choices"], list)
        or not all(isinstance(c, str) for c in r["choices"])
        or not (r["revealed"] is None or isinstance(r["revealed"], str))
    ):
        raise ProtocolError("bad_field", "state_snapshot: malformed round view")


def _check_bonus_view(b: Any) -> None:
    if (
        not isinstance(b, dict)
        or set(b) != {"grid_cells", "remaining_ms", "active_cell", "hits"}
        or not isinstance(b["grid_cells"], int)
        or not isinstance(b["remaining_ms"], int)
        or not (b["active_cell"] is None or isinstance(b["active_cell"], int))
        or not isinstance(b["hits"], int)
    ):
        raise ProtocolError("bad_field", "state_snapshot: malformed bonus view")


def effect_from_wire(data: Any) -> Effect:
    if not isinstance(data, dict):
        raise ProtocolError("bad_field", "effect payload must be an object")
    kind = data.get("kind")
    by_kind = {tag: cls for cls, tag in _EFFECT_TAGS.items()}
    cls = by_kind.get(kind)
    if cls is None:
        raise ProtocolError("unknown_type", f"unknown effect kind {kind!r}")

    def need(fields: dict[str, type]) -> None:
        if set(data) != {"kind"} | set(fields):
            raise ProtocolError("bad_field", f"effect {kind}: wrong field set {sorted(data)}")
        for fname, ftype in fields.items():
            if not isinstance(data[fname], ftype):
                raise ProtocolError("bad_field", f"effect {kind}: field {fname!r} has wrong type")

    if cls is engine.SpeakWord:
        need({"text": str})
        return engine.SpeakWord(data["text"])
    if cls in (engine.SpeakLetter, engine.KeyFlashGreen, engine.KeyFlashRed, engine.ExplodeRevealMole):
        need({"letter": str})
        return cls(data["letter"])  # type: ignore[call-arg]
    if cls is engine.LetterAccepted:
        need({"letter": str, "index": int})
        return engine.LetterAccepted(data["letter"], data["index"])
    if cls is engine.ShowChoiceBombs:
        need({"letters": list})
        letters = data["letters"]
        if not all(isinstance(ch, str) for ch in letters):
            raise ProtocolError("bad_field", "show_choice_bombs: letters must be strings")
        return engine.ShowChoiceBombs(frozenset(letters))
    if cls is engine.RoundComplete:
        need({"result": dict})
        return engine.RoundComplete(result_from_wire(data["result"]))
    need({})
    return cls()  # type: ignore[call-arg]


def result_from_wire(data: Any) -> RoundResult:
    if not isinstance(data, dict) or set(data) != {"word", "records", "points", "quality", "perfect"}:
        raise ProtocolError("bad_field", "malformed round result")
    try:
        records = tuple(
            LetterRecord(r["letter"], Outcome(r["outcome"]), r["wrong_attempts"])
            for r in data["records"]
        )
    except (TypeError, KeyError, ValueError) as exc:
        raise ProtocolError("bad_field", f"malformed letter records: {exc}") from exc
    if (
        not isinstance(data["word"], str)
        or not isinstance(data["points"], int)
        or not isinstance(data["quality"], int)
        or not isinstance(data["perfect"], bool)
    ):
        raise ProtocolError("bad_field", "malformed round result fields")
    return RoundResult(
        word=data["word"],
        records=records,
        points=data["points"],
        quality=data["quality"],
        perfect=data["perfect"],
    )
