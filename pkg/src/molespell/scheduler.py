"""Per-player word scheduling: spaced repetition plus level graduation.

Review intervals use the classic SuperMemo-2 update rule, but measured
in word presentations rather than days: a game session lasts minutes,
so "come back to this word later" means "after this many other rounds".
Difficulty graduation watches a sliding window of recent round
qualities and promotes or demotes the player's list level.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .catalog import Catalog, list_at_level
from .engine import RoundResult

INITIAL_EF = 2.5
MIN_EF = 1.3


class SchedulerError(Exception):
    pass


class QualityOutOfRange(SchedulerError):
    pass


@dataclass(frozen=True)
class WordMemory:
    """Review state for one word; intervals count presentations."""

    word: str
    ef: float = INITIAL_EF
    repetitions: int = 0
    interval: int = 1
    due_at: int = 0


@dataclass
class LevelController:
    """Promote/demote between word-list levels on recent round quality."""

    window: int = 10
    promote_mean: float = 4.5
    demote_mean: float = 2.0
    current_level: int = 1
    recent_qualities: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.demote_mean < self.promote_mean:
            raise ValueError("demote_mean must be below promote_mean")
        if self.window < 1:
            raise ValueError("window must be >= 1")


@dataclass
class LearnerProfile:
    player_id: str
    memories: dict[str, WordMemory] = field(default_factory=dict)
    controller: LevelController = field(default_factory=LevelController)
    presentation_counter: int = 0


def update_memory(memory: WordMemory, quality: int, counter: int) -> WordMemory:
    """Apply one review at the given quality; ``counter`` dates the due point.

    The easiness factor moves by the SM-2 delta and never drops below
    1.3. Qualities below 3 reset the repetition run and make the word
    due again after one presentation.
    """
    if not isinstance(quality, int) or isinstance(quality, bool) or not 0 <= quality <= 5:
        raise QualityOutOfRange(f"quality {quality!r} not in 0..5")
    ef = max(memory.ef + (0.1 - (5 - quality) * (0.08 + (5 - quality) * 0.02)), MIN_EF)
    if quality >= 3:
        repetitions = memory.repetitions + 1
        if repetitions == 1:
            interval = 1
        elif repetitions == 2:
            interval = 6
        else:
            interval = round(memory.interval * ef)
    else:
        repetitions = 0
        interval = 1
    return WordMemory(
        word=memory.word,
        ef=ef,
        repetitions=repetitions,
        interval=interval,
        due_at=counter + interval,
    )


def next_word(profile: LearnerProfile, catalog: Catalog) -> str:
    """Pick the word to present next.

    Due reviews (any level) come first, earliest due point wins; then
    the first not-yet-seen word of the current level's list; failing
    both, the review that will become due soonest. Ties break
    lexicographically so the choice is a pure function of the inputs.
    """
    due = [
        m for m in profile.memories.values() if m.due_at <= profile.presentation_counter
    ]
    if due:
        return min(due, key=lambda m: (m.due_at, m.word)).word

    current = list_at_level(catalog, profile.controller.current_level)
    for word in current.words:
        if word not in profile.memories:
            return word

    soonest = min(profile.memories.values(), key=lambda m: (m.due_at, m.word))
    return soonest.word


def record_round(profile: LearnerProfile, result: RoundResult) -> LearnerProfile:
    """Fold a finished round into the profile (mutates and returns it)."""
    profile.presentation_counter += 1
    memory = profile.memories.get(result.word, WordMemory(word=result.word))
    profile.memories[result.word] = update_memory(
        memory, result.quality, profile.presentation_counter
    )
    controller = profile.controller
    controller.recent_qualities.append(result.quality)
    if len(controller.recent_qualities) > controller.window:
        del controller.recent_qualities[: -controller.window]
    return profile


def adjust_level(controller: LevelController, max_level: int) -> LevelController:
    """Promote or demote once the quality window is full (mutates in place).

    Either decision consumes the window, even when the level is already
    clamped at an end of the range.
    """
    if len(controller.recent_qualities) < controller.window:
        return controller
    mean = sum(controller.recent_qualities) / len(controller.recent_qualities)
    if mean >= controller.promote_mean:
        controller.current_level = min(controller.current_level + 1, max_level)
        controller.recent_qualities.clear()
    elif mean <= controller.demote_mean:
        controller.current_level = max(controller.current_level - 1, 1)
        controller.recent_qualities.clear()
    return controller


def fresh_memory_after_round(word: str, quality: int, counter: int) -> WordMemory:
    """First review of a brand-new word (convenience for tests/tools)."""
    return update_memory(WordMemory(word=word), quality, counter)


def copy_profile(profile: LearnerProfile) -> LearnerProfile:
    """Deep-enough copy: memories are immutable values, controller is not."""
    return LearnerProfile(
        player_id=profile.player_id,
        memories=dict(profile.memories),
        controller=dataclasses.replace(
            profile.controller, recent_qualities=list(profile.controller.recent_qualities)
        ),
        presentation_counter=profile.presentation_counter,
    )
