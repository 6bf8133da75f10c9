"""Per-word spelling round: a pure, deterministic state machine.

Each letter of the word goes through an escalation ladder. It starts
awaiting input; if the player stalls, a timed multiple-choice hint marks
the correct key and some random decoys with bombs; if they stall again
(or hit a wrong key at any point), the bombs explode and a mole pops up
under the correct key, which is then the only way forward and earns
nothing. Correct hits before any hint earn full points, after the choice
hint reduced points.

All transitions take an explicit ``now`` timestamp (milliseconds on
whatever clock the caller runs); the engine never reads a wall clock,
so pausing is just not advancing ``now``. Randomness lives in an
explicit generator state threaded through the round state, making every
round a pure function of (word, config, seed, event sequence).
"""

from __future__ import annotations

import dataclasses
import enum
import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ALPHABET = string.ascii_lowercase

# Opaque deterministic generator state (random.Random.getstate() value).
RngState = tuple


class EngineError(Exception):
    pass


class RoundAlreadyComplete(EngineError):
    pass


class CountOutOfRange(EngineError):
    pass


class EmptyRecords(EngineError):
    pass


@dataclass(frozen=True)
class RoundConfig:
    """Timing and scoring knobs for a spelling round."""

    choice_hint_delay_ms: int = 5000
    giveaway_delay_ms: int = 5000
    decoy_count: int = 2
    points_unaided: int = 10
    points_after_hint: int = 5
    points_giveaway: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.points_after_hint < self.points_unaided:
            raise ValueError("points must satisfy 0 < after_hint < unaided")
        if self.points_giveaway != 0:
            raise ValueError("giveaway letters earn no points")
        if not 1 <= self.decoy_count <= 25:
            raise ValueError("decoy_count must be in 1..25")
        if self.choice_hint_delay_ms <= 0 or self.giveaway_delay_ms <= 0:
            raise ValueError("hint delays must be positive")


class Outcome(enum.Enum):
    UNAIDED = "unaided"
    AFTER_CHOICE_HINT = "after_choice_hint"
    AFTER_GIVEAWAY = "after_giveaway"


# Letter phases -------------------------------------------------------------


@dataclass(frozen=True)
class AwaitingInput:
    pass


@dataclass(frozen=True)
class ChoiceHint:
    """Correct letter plus decoys, all marked with bombs."""

    choices: frozenset[str]


@dataclass(frozen=True)
class GiveawayReveal:
    """Mole sits on the correct key; only that key advances the round."""

    correct: str


LetterPhase = Union[AwaitingInput, ChoiceHint, GiveawayReveal]


@dataclass(frozen=True)
class LetterRecord:
    letter: str
    outcome: Outcome
    wrong_attempts: int = 0


# Effects -------------------------------------------------------------------
# Audiovisual feedback commands consumed by clients; the engine only
# decides *that* they happen, never how they look or sound.


@dataclass(frozen=True)
class SpeakWord:
    text: str


@dataclass(frozen=True)
class SpeakLetter:
    letter: str


@dataclass(frozen=True)
class LetterAccepted:
    letter: str
    index: int


@dataclass(frozen=True)
class KeyFlashGreen:
    letter: str


@dataclass(frozen=True)
class KeyFlashRed:
    letter: str


@dataclass(frozen=True)
class PlayChime:
    pass


@dataclass(frozen=True)
class PlayBuzzer:
    pass


@dataclass(frozen=True)
class ShowChoiceBombs:
    letters: frozenset[str]


@dataclass(frozen=True)
class ExplodeRevealMole:
    letter: str


@dataclass(frozen=True)
class RoundResult:
    word: str
    records: tuple[LetterRecord, ...]
    points: int
    quality: int
    perfect: bool


@dataclass(frozen=True)
class RoundComplete:
    result: RoundResult


Effect = Union[
    SpeakWord,
    SpeakLetter,
    LetterAccepted,
    KeyFlashGreen,
    KeyFlashRed,
    PlayChime,
    PlayBuzzer,
    ShowChoiceBombs,
    ExplodeRevealMole,
    RoundComplete,
]


@dataclass(frozen=True)
class RoundState:
    """Progress through one word; an immutable value, one owner at a time."""

    word: str
    config: RoundConfig
    cursor: int
    phase: LetterPhase
    phase_entered_at: int
    records: tuple[LetterRecord, ...]
    points: int
    rng: RngState
    completed: bool
    # Wrong hits against the letter at ``cursor``, folded into its record
    # once that letter resolves.
    pending_wrong_attempts: int = 0

    @property
    def current_letter(self) -> str:
        return self.word[self.cursor]


def rng_from_seed(seed: int) -> RngState:
    return random.Random(seed).getstate()


def pick_decoys(rng: RngState, correct: str, count: int) -> tuple[frozenset[str], RngState]:
    """Draw ``count`` distinct wrong letters, uniformly without replacement.

    Returns the decoy set and the advanced generator state.
    """
    if not 1 <= count <= 25:
        raise CountOutOfRange(f"decoy count {count} not in 1..25")
    gen = random.Random()
    gen.setstate(rng)
    pool = [ch for ch in ALPHABET if ch != correct]
    decoys = gen.sample(pool, count)
    return frozenset(decoys), gen.getstate()


def compute_quality(records: tuple[LetterRecord, ...]) -> int:
    """Summarize per-letter outcomes as a 0..5 review quality.

    Unaided letters weigh 1, choice-hint letters 0.6, giveaway letters 0;
    the mean weight is scaled to 0..5 and rounded half-up. Evaluated in
    exact rational arithmetic so boundary means like 0.9 round correctly.
    """
    if not records:
        raise EmptyRecords("cannot score an empty record list")
    weights = {
        Outcome.UNAIDED: Fraction(1),
        Outcome.AFTER_CHOICE_HINT: Fraction(3, 5),
        Outcome.AFTER_GIVEAWAY: Fraction(0),
    }
    raw = sum((weights[r.outcome] for r in records), Fraction(0)) / len(records)
    return int(raw * 5 + Fraction(1, 2))  # int() floors nonnegative rationals


def start_round(word: str, config: RoundConfig, seed: int, now: int) -> tuple[RoundState, list[Effect]]:
    """Begin a round: the word is spoken, the first letter awaits input."""
    state = RoundState(
        word=word,
        config=config,
        cursor=0,
        phase=AwaitingInput(),
        phase_entered_at=now,
        records=(),
        points=0,
        rng=rng_from_seed(seed),
        completed=False,
    )
    return state, [SpeakWord(word)]


def handle_key(state: RoundState, letter: str, now: int) -> tuple[RoundState, list[Effect]]:
    """Apply a key hit at time ``now``.

    Correct keys resolve the current letter with an outcome that depends
    on the phase; wrong keys buzz, and the first one forces the giveaway
    reveal for the letter.
    """
    if state.completed:
        raise RoundAlreadyComplete(f"round for {state.word!r} is finished")
    if letter not in ALPHABET:
        raise ValueError(f"key {letter!r} is not a letter a-z")

    correct = state.current_letter
    if letter == correct:
        outcome, earned = _resolution(state.phase, state.config)
        return _advance(state, outcome, earned, now)

    if isinstance(state.phase, GiveawayReveal):
        # The reveal persists; extra wrong hits just buzz.
        return state, [PlayBuzzer()]
    next_state = dataclasses.replace(
        state,
        phase=GiveawayReveal(correct),
        phase_entered_at=now,
        pending_wrong_attempts=state.pending_wrong_attempts + 1,
    )
    return next_state, [KeyFlashRed(letter), PlayBuzzer(), ExplodeRevealMole(correct)]


def handle_tick(state: RoundState, now: int) -> tuple[RoundState, list[Effect]]:
    """Advance hint escalation if the current phase's delay has elapsed.

    At most one escalation per call; the delay for the next stage is
    measured from this transition.
    """
    if state.completed:
        raise RoundAlreadyComplete(f"round for {state.word!r} is finished")

    elapsed = now - state.phase_entered_at
    if isinstance(state.phase, AwaitingInput) and elapsed >= state.config.choice_hint_delay_ms:
        correct = state.current_letter
        decoys, rng = pick_decoys(state.rng, correct, state.config.decoy_count)
        choices = frozenset({correct}) | decoys
        next_state = dataclasses.replace(
            state, phase=ChoiceHint(choices), phase_entered_at=now, rng=rng
        )
        return next_state, [ShowChoiceBombs(choices)]
    if isinstance(state.phase, ChoiceHint) and elapsed >= state.config.giveaway_delay_ms:
        correct = state.current_letter
        next_state = dataclasses.replace(
            state, phase=GiveawayReveal(correct), phase_entered_at=now
        )
        return next_state, [ExplodeRevealMole(correct)]
    return state, []


def handle_replay(state: RoundState) -> list[Effect]:
    """Re-speak the word; no state change, timers unaffected."""
    if state.completed:
        raise RoundAlreadyComplete(f"round for {state.word!r} is finished")
    return [SpeakWord(state.word)]


def _resolution(phase: LetterPhase, config: RoundConfig) -> tuple[Outcome, int]:
    if isinstance(phase, AwaitingInput):
        return Outcome.UNAIDED, config.points_unaided
    if isinstance(phase, ChoiceHint):
        return Outcome.AFTER_CHOICE_HINT, config.points_after_hint
    return Outcome.AFTER_GIVEAWAY, config.points_giveaway


def _advance(state: RoundState, outcome: Outcome, earned: int, now: int) -> tuple[RoundState, list[Effect]]:
    letter = state.current_letter
    record = LetterRecord(letter, outcome, state.pending_wrong_attempts)
    records = state.records + (record,)
    cursor = state.cursor + 1
    completed = cursor == len(state.word)
    next_state = dataclasses.replace(
        state,
        cursor=cursor,
        phase=AwaitingInput(),
        phase_entered_at=now,
        records=records,
        points=state.points + earned,
        completed=completed,
        pending_wrong_attempts=0,
    )
    effects: list[Effect] = [
        KeyFlashGreen(letter),
        PlayChime(),
        SpeakLetter(letter),
        LetterAccepted(letter, state.cursor),
    ]
    if completed:
        effects.append(RoundComplete(round_result(next_state)))
    return next_state, effects


def round_result(state: RoundState) -> RoundResult:
    """Result of a completed round."""
    if not state.completed:
        raise EngineError("round is not finished")
    perfect = all(
        r.outcome is Outcome.UNAIDED and r.wrong_attempts == 0 for r in state.records
    )
    return RoundResult(
        word=state.word,
        records=state.records,
        points=state.points,
        quality=compute_quality(state.records),
        perfect=perfect,
    )
