"""Session orchestration: rounds, score meter, streaks, bonus, pausing.

A session owns one player's live game. It translates wall-clock event
times into an active-play clock (paused intervals never count), drives
the round engine and the bonus mini-game, folds finished rounds into
the learner profile, and triggers the bonus round on a streak of
perfect rounds. All mutations of one session happen sequentially; the
engine layers underneath are pure values.
"""

from __future__ import annotations

import random
import uuid
from dataclasses import dataclass, field
from typing import Union

from . import bonus as bonus_mod
from . import engine
from .catalog import Catalog, list_at_level
from .config import GameConfig
from .engine import RoundState
from .protocol import (
    BonusEnd,
    BonusStart,
    BonusView,
    ClientEvent,
    EffectEvent,
    KeyHit,
    Pause,
    Quit,
    Replay,
    Resume,
    RoundResultEvent,
    RoundView,
    ServerEvent,
    StateSnapshot,
    Whack,
)
from .scheduler import LearnerProfile, adjust_level, next_word, record_round
from .storage import ProfileStore


class SessionError(Exception):
    pass


class EventNotAllowedInMode(SessionError):
    pass


class SessionQuit(SessionError):
    pass


@dataclass
class Spelling:
    round: RoundState


@dataclass
class Bonus:
    state: bonus_mod.BonusState
    # Spawn index shown at the last snapshot, to emit one on each change.
    last_active: int | None = None


@dataclass
class Paused:
    prior: Union[Spelling, Bonus]
    pause_started_wall: int


@dataclass
class Idle:
    pass


Mode = Union[Spelling, Bonus, Paused, Idle]


@dataclass
class SessionState:
    session_id: str
    player: LearnerProfile
    catalog: Catalog
    config: GameConfig
    seed: int
    mode: Mode
    score: int = 0
    streak: int = 0
    clock: int = 0  # active-play milliseconds; frozen while paused
    last_wall: int = 0
    ended: bool = False
    rng: random.Random = field(default_factory=random.Random, repr=False)
    store: ProfileStore | None = field(default=None, repr=False)
    # Effects produced before any stream is attached (the first word's
    # speech); drained by whoever delivers events to the client.
    pending_effects: list[ServerEvent] = field(default_factory=list)


def create_session(
    player_id: str,
    catalog: Catalog,
    seed: int,
    *,
    config: GameConfig | None = None,
    store: ProfileStore | None = None,
    session_id: str | None = None,
    now: int = 0,
) -> SessionState:
    """Load (or create) the player's profile and start their first round."""
    config = config or GameConfig()
    profile = store.load(player_id) if store is not None else LearnerProfile(player_id)
    # Graduation policy follows the current game config; the evidence
    # (level, quality window, memories) is the player's own.
    profile.controller.window = config.levels.window
    profile.controller.promote_mean = config.levels.promote_mean
    profile.controller.demote_mean = config.levels.demote_mean
    profile.controller.current_level = min(
        max(profile.controller.current_level, 1), catalog.max_level
    )
    session = SessionState(
        session_id=session_id or uuid.uuid4().hex,
        player=profile,
        catalog=catalog,
        config=config,
        seed=seed,
        mode=Idle(),
        last_wall=now,
        rng=random.Random(seed),
        store=store,
    )
    session.pending_effects = _start_next_round(session, active_now=0)
    return session


def handle_event(
    session: SessionState, event: ClientEvent, now: int
) -> tuple[SessionState, list[ServerEvent]]:
    """Apply one client event at wall time ``now``.

    Raises SessionQuit after the session ended and EventNotAllowedInMode
    for events the current mode cannot accept.
    """
    if session.ended:
        raise SessionQuit(f"session {session.session_id} has ended")
    active_now = _advance_clock(session, now)

    if isinstance(event, Quit):
        session.ended = True
        session.mode = Idle()
        _persist(session)
        return session, [snapshot(session)]

    if isinstance(event, Pause):
        if isinstance(session.mode, (Paused, Idle)):
            raise EventNotAllowedInMode("nothing to pause")
        session.mode = Paused(prior=session.mode, pause_started_wall=now)
        return session, [snapshot(session)]

    if isinstance(event, Resume):
        if not isinstance(session.mode, Paused):
            raise EventNotAllowedInMode("session is not paused")
        session.mode = session.mode.prior
        return session, [snapshot(session)]

    if isinstance(event, KeyHit):
        if not isinstance(session.mode, Spelling):
            raise EventNotAllowedInMode("key_hit is only valid while spelling")
        state, effects = engine.handle_key(session.mode.round, event.letter, active_now)
        session.mode.round = state
        events: list[ServerEvent] = [EffectEvent(e) for e in effects]
        if state.completed:
            events.extend(_complete_round(session, active_now))
        return session, events

    if isinstance(event, Replay):
        if not isinstance(session.mode, Spelling):
            raise EventNotAllowedInMode("replay is only valid while spelling")
        return session, [EffectEvent(e) for e in engine.handle_replay(session.mode.round)]

    if isinstance(event, Whack):
        if not isinstance(session.mode, Bonus):
            raise EventNotAllowedInMode("whack is only valid during the bonus round")
        state, _hit = bonus_mod.on_whack(session.mode.state, event.cell, active_now)
        session.mode.state = state
        session.mode.last_active = bonus_mod.active_spawn(state, active_now)
        return session, [snapshot(session)]

    raise EventNotAllowedInMode(f"unsupported event {event!r}")


def tick_session(session: SessionState, now: int) -> tuple[SessionState, list[ServerEvent]]:
    """Advance time: hint escalation while spelling, expiry during bonus."""
    if session.ended:
        return session, []
    active_now = _advance_clock(session, now)

    if isinstance(session.mode, Spelling):
        state, effects = engine.handle_tick(session.mode.round, active_now)
        session.mode.round = state
        return session, [EffectEvent(e) for e in effects]

    if isinstance(session.mode, Bonus):
        bstate = session.mode.state
        if active_now - bstate.start >= bstate.config.duration_ms:
            bstate, points = bonus_mod.finish_bonus(bstate, active_now)
            session.mode.state = bstate
            session.score += points
            events: list[ServerEvent] = [BonusEnd(points)]
            events.extend(_start_next_round(session, active_now))
            events.append(snapshot(session))
            return session, events
        active = bonus_mod.active_spawn(bstate, active_now)
        if active != session.mode.last_active:
            session.mode.last_active = active
            return session, [snapshot(session)]
        return session, []

    return session, []


def snapshot(session: SessionState) -> StateSnapshot:
    """Authoritative view of the session for (re)syncing a client."""
    mode = session.mode
    round_view = None
    bonus_view = None
    if isinstance(mode, Paused):
        label = "paused"
        inner = mode.prior
    else:
        inner = mode
        label = {Spelling: "spelling", Bonus: "bonus", Idle: "idle"}[type(mode)]
    if isinstance(inner, Spelling):
        round_view = _round_view(inner.round)
    elif isinstance(inner, Bonus):
        bonus_view = _bonus_view(inner.state, session.clock)
    return StateSnapshot(
        session_id=session.session_id,
        score=session.score,
        streak=session.streak,
        level=session.player.controller.current_level,
        mode=label,
        round=round_view,
        bonus=bonus_view,
    )


def _round_view(state: RoundState) -> RoundView:
    phase = state.phase
    if isinstance(phase, engine.ChoiceHint):
        return RoundView(
            length=len(state.word),
            accepted=state.word[: state.cursor],
            phase_kind="choice_hint",
            choices=tuple(sorted(phase.choices)),
        )
    if isinstance(phase, engine.GiveawayReveal):
        return RoundView(
            length=len(state.word),
            accepted=state.word[: state.cursor],
            phase_kind="giveaway_reveal",
            revealed=phase.correct,
        )
    return RoundView(
        length=len(state.word),
        accepted=state.word[: state.cursor],
        phase_kind="awaiting_input",
    )


def _bonus_view(state: bonus_mod.BonusState, active_now: int) -> BonusView:
    idx = bonus_mod.active_spawn(state, active_now)
    remaining = max(0, state.config.duration_ms - (active_now - state.start))
    return BonusView(
        grid_cells=state.config.grid_cells,
        remaining_ms=remaining,
        active_cell=state.spawns[idx].cell if idx is not None else None,
        hits=len(state.hits),
    )


def _advance_clock(session: SessionState, now: int) -> int:
    delta = max(0, now - session.last_wall)
    session.last_wall = now
    if not isinstance(session.mode, Paused):
        session.clock += delta
    return session.clock


def _start_next_round(session: SessionState, active_now: int) -> list[ServerEvent]:
    word = next_word(session.player, session.catalog)
    round_seed = session.rng.getrandbits(32)
    state, effects = engine.start_round(word, session.config.round, round_seed, active_now)
    session.mode = Spelling(round=state)
    return [EffectEvent(e) for e in effects]


def _complete_round(session: SessionState, active_now: int) -> list[ServerEvent]:
    assert isinstance(session.mode, Spelling)
    result = engine.round_result(session.mode.round)
    session.score += result.points
    record_round(session.player, result)
    adjust_level(session.player.controller, session.catalog.max_level)
    session.streak = session.streak + 1 if result.perfect else 0
    _persist(session)

    events: list[ServerEvent] = [
        RoundResultEvent(
            result=result,
            score=session.score,
            streak=session.streak,
            level=session.player.controller.current_level,
        )
    ]
    if session.streak >= session.config.session.streak_to_bonus:
        session.streak = 0
        bonus_seed = session.rng.getrandbits(32)
        bstate = bonus_mod.start_bonus(session.config.bonus, bonus_seed, start=active_now)
        session.mode = Bonus(state=bstate, last_active=bonus_mod.active_spawn(bstate, active_now))
        events.append(BonusStart())
        events.append(snapshot(session))
    else:
        events.extend(_start_next_round(session, active_now))
    return events


def _persist(session: SessionState) -> None:
    if session.store is not None:
        session.store.save(session.player)


def progress_summary(profile: LearnerProfile) -> dict:
    """Profile summary served at /players/{id}/progress."""
    due = sum(
        1 for m in profile.memories.values() if m.due_at <= profile.presentation_counter
    )
    return {
        "player_id": profile.player_id,
        "level": profile.controller.current_level,
        "words_seen": len(profile.memories),
        "due_count": due,
        "rounds_played": profile.presentation_counter,
    }


def current_word(session: SessionState) -> str | None:
    """The word in flight, if a round is active (including paused)."""
    mode = session.mode
    if isinstance(mode, Paused):
        mode = mode.prior
    if isinstance(mode, Spelling):
        return mode.round.word
    return None


def default_catalog_level(catalog: Catalog, level: int) -> tuple[str, ...]:
    return list_at_level(catalog, level).words
