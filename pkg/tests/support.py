"""Drivers and builders shared across test modules."""

from __future__ import annotations

import random

from molespell import engine
from molespell.catalog import Catalog, load_catalog
from molespell.engine import (
    LetterRecord,
    Outcome,
    RoundConfig,
    RoundState,
    start_round,
)

OUTCOME_OF = {
    "U": Outcome.UNAIDED,
    "H": Outcome.AFTER_CHOICE_HINT,
    "G": Outcome.AFTER_GIVEAWAY,
}


def small_catalog() -> Catalog:
    return load_catalog(
        {
            "lists": [
                {"id": "easy", "name": "Easy", "level": 1,
                 "words": ["cat", "dog", "sun", "map"]},
                {"id": "mid", "name": "Mid", "level": 2,
                 "words": ["planet", "rhythm", "basket"]},
                {"id": "hard", "name": "Hard", "level": 3,
                 "words": ["occurrence", "labyrinth"]},
            ]
        }
    )


def make_records(vector: str, word: str | None = None) -> tuple[LetterRecord, ...]:
    """Records for an outcome vector like "UUHG" (letters are arbitrary)."""
    word = word or "abcdefghijklmnopqrstuvwxyz"[: len(vector)]
    return tuple(LetterRecord(word[i], OUTCOME_OF[v]) for i, v in enumerate(vector))


def drive_round(
    word: str,
    vector: str,
    config: RoundConfig | None = None,
    seed: int = 0,
    start: int = 0,
):
    """Play a full round forcing the given outcome per letter.

    "U" types the correct key straight away, "H" waits for the choice
    hint first, "G" waits through both hint stages. Returns the final
    state, every effect in order, and the points earned per letter.
    """
    config = config or RoundConfig()
    state, effects = start_round(word, config, seed, start)
    now = start
    deltas: list[int] = []
    for step in vector:
        before = state.points
        if step in ("H", "G"):
            now = state.phase_entered_at + config.choice_hint_delay_ms
            state, fx = engine.handle_tick(state, now)
            effects.extend(fx)
        if step == "G":
            now = state.phase_entered_at + config.giveaway_delay_ms
            state, fx = engine.handle_tick(state, now)
            effects.extend(fx)
        now += 1
        state, fx = engine.handle_key(state, state.current_letter, now)
        effects.extend(fx)
        deltas.append(state.points - before)
    assert state.completed
    return state, effects, deltas


def random_round_script(rng: random.Random, word: str, config: RoundConfig, length: int = 30):
    """A reproducible event script: (kind, payload, now) triples.

    Keys are biased toward the current expectation so that scripts
    regularly finish words, but wrong keys, ticks, and replays are all
    mixed in. ``now`` moves forward by random jumps.
    """
    script = []
    now = rng.randrange(0, 1000)
    for _ in range(length):
        now += rng.randrange(0, config.choice_hint_delay_ms + 1500)
        roll = rng.random()
        if roll < 0.55:
            script.append(("key", None, now))  # the currently correct letter
        elif roll < 0.70:
            script.append(("key", rng.choice(engine.ALPHABET), now))
        elif roll < 0.95:
            script.append(("tick", None, now))
        else:
            script.append(("replay", None, now))
    return script


def run_round_script(word: str, config: RoundConfig, seed: int, script) -> tuple[RoundState, list]:
    """Apply a script from random_round_script; stops once the word ends."""
    state, effects = start_round(word, config, seed, 0)
    for kind, payload, now in script:
        if state.completed:
            break
        if kind == "key":
            letter = payload if payload is not None else state.current_letter
            state, fx = engine.handle_key(state, letter, now)
        elif kind == "tick":
            state, fx = engine.handle_tick(state, now)
        else:
            fx = engine.handle_replay(state)
        effects.extend(fx)
    return state, effects
