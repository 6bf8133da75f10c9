"""Headless simulated learner, for exercising the whole session pipeline.

The learner types each letter correctly with probability 1 - p, where p
is tracked per word: it starts at the configured error rate and shrinks
by the learning-rate factor every time a giveaway reveal shows that
word's letter. A learning rate of 1.0 means no learning at all, which
makes the first and second half of a run statistically identical; below
1.0 the second half should show fewer giveaways.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Any

from .catalog import Catalog, load_sample_catalog
from .config import GameConfig
from .engine import ALPHABET, Outcome, RoundResult
from .protocol import BonusStart, KeyHit, RoundResultEvent
from .session import Bonus, Spelling, create_session, current_word, handle_event, tick_session
from .storage import InMemoryProfileStore

KEY_STEP_MS = 200


class ParameterOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class SimulationSummary:
    words: int
    seed: int
    error_rate: float
    learning_rate: float
    first_half_giveaway_rate: float | None
    second_half_giveaway_rate: float | None
    mean_quality: float
    perfect_rounds: int
    bonus_rounds: int
    final_score: int
    level_trajectory: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["level_trajectory"] = list(self.level_trajectory)
        return data


def simulate(
    error_rate: float,
    learning_rate: float,
    words: int,
    seed: int,
    *,
    catalog: Catalog | None = None,
    config: GameConfig | None = None,
) -> SimulationSummary:
    """Run ``words`` rounds with a synthetic learner and summarize them."""
    if not 0.0 <= error_rate <= 1.0:
        raise ParameterOutOfRange(f"error rate {error_rate} not in [0, 1]")
    if not 0.0 <= learning_rate <= 1.0:
        raise ParameterOutOfRange(f"learning rate {learning_rate} not in [0, 1]")
    if words < 1:
        raise ParameterOutOfRange(f"word count {words} must be >= 1")

    catalog = catalog or load_sample_catalog()
    config = config or GameConfig()
    session = create_session(
        "simulated-learner",
        catalog,
        seed,
        config=config,
        store=InMemoryProfileStore(),
        session_id=f"sim-{seed}",
    )
    learner = random.Random(f"learner-{seed}")
    word_error: dict[str, float] = {}
    wall = 0

    results: list[RoundResult] = []
    levels: list[int] = []
    bonus_rounds = 0

    while len(results) < words:
        if isinstance(session.mode, Bonus):
            # The learner sits the bonus out; skip to its end.
            wall += config.bonus.duration_ms
            tick_session(session, wall)
            continue

        assert isinstance(session.mode, Spelling)
        word = current_word(session)
        assert word is not None
        p = word_error.setdefault(word, error_rate)

        correct = word[session.mode.round.cursor]
        wall += KEY_STEP_MS
        if learner.random() < p:
            wrong = learner.choice([ch for ch in ALPHABET if ch != correct])
            handle_event(session, KeyHit(wrong), wall)
            word_error[word] = p * learning_rate  # giveaway exposure
            wall += KEY_STEP_MS
        _, events = handle_event(session, KeyHit(correct), wall)

        for event in events:
            if isinstance(event, RoundResultEvent):
                results.append(event.result)
                levels.append(event.level)
            elif isinstance(event, BonusStart):
                bonus_rounds += 1

    return _summarize(results, levels, bonus_rounds, session.score, error_rate, learning_rate, words, seed)


def _summarize(
    results: list[RoundResult],
    levels: list[int],
    bonus_rounds: int,
    final_score: int,
    error_rate: float,
    learning_rate: float,
    words: int,
    seed: int,
) -> SimulationSummary:
    half = words // 2
    return SimulationSummary(
        words=words,
        seed=seed,
        error_rate=error_rate,
        learning_rate=learning_rate,
        first_half_giveaway_rate=giveaway_rate(results[:half]),
        second_half_giveaway_rate=giveaway_rate(results[half:]),
        mean_quality=sum(r.quality for r in results) / len(results),
        perfect_rounds=sum(1 for r in results if r.perfect),
        bonus_rounds=bonus_rounds,
        final_score=final_score,
        level_trajectory=tuple(levels),
    )


def giveaway_rate(results: list[RoundResult]) -> float | None:
    """Fraction of letters resolved by the giveaway reveal, pooled."""
    total = sum(len(r.records) for r in results)
    if total == 0:
        return None
    given = sum(
        1 for r in results for rec in r.records if rec.outcome is Outcome.AFTER_GIVEAWAY
    )
    return given / total
