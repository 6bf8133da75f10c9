"""Reference computations the tests check the package against.

Everything here is written straight from the definitions, without
calling into molespell, so a bug in the package cannot hide behind the
same bug appearing in its tests. Quality uses pure integer arithmetic,
the SM-2 easiness deltas are frozen constants worked out by hand, and
the bonus schedule is enumerated with a while loop instead of the
closed form.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

# Letter outcome tags, as they appear on the wire and in RoundResult.
UNAIDED = "unaided"
HINTED = "after_choice_hint"
GIVEAWAY = "after_giveaway"

# Outcome weights in tenths: 1.0, 0.6, 0.0.
_W10 = {UNAIDED: 10, HINTED: 6, GIVEAWAY: 0}


def quality_oracle(outcomes: Sequence[str]) -> int:
    """floor(mean_weight * 5 + 0.5) in exact integer arithmetic.

    mean_weight = S/(10n) with S = sum of tenth-weights, so the rounded
    scaled mean is floor(S/(2n) + 1/2) = (S + n) // (2n).
    """
    n = len(outcomes)
    if n == 0:
        raise ValueError("no outcomes")
    s = sum(_W10[o] for o in outcomes)
    return (s + n) // (2 * n)


def points_oracle(outcomes: Sequence[str], unaided: int = 10, hinted: int = 5) -> int:
    per = {UNAIDED: unaided, HINTED: hinted, GIVEAWAY: 0}
    return sum(per[o] for o in outcomes)


# SM-2 easiness delta by quality, from 0.1 - (5-q)(0.08 + (5-q)*0.02),
# evaluated by hand: q=5 -> +0.10, q=4 -> 0.1-0.10, q=3 -> 0.1-2*0.12,
# q=2 -> 0.1-3*0.14, q=1 -> 0.1-4*0.16, q=0 -> 0.1-5*0.18.
SM2_DELTA = {5: 0.1, 4: 0.0, 3: -0.14, 2: -0.32, 1: -0.54, 0: -0.8}

SM2_MIN_EF = 1.3


def sm2_oracle(
    ef: float, repetitions: int, interval: int, quality: int, counter: int
) -> dict:
    """One SM-2 review step, intervals counted in presentations."""
    new_ef = ef + SM2_DELTA[quality]
    if new_ef < SM2_MIN_EF:
        new_ef = SM2_MIN_EF
    if quality < 3:
        new_reps = 0
        new_interval = 1
    else:
        new_reps = repetitions + 1
        if new_reps == 1:
            new_interval = 1
        elif new_reps == 2:
            new_interval = 6
        else:
            new_interval = round(interval * new_ef)
    return {
        "ef": new_ef,
        "repetitions": new_reps,
        "interval": new_interval,
        "due_at": counter + new_interval,
    }


def bonus_offsets_oracle(duration_ms: int, visible_ms: int, period_ms: int) -> list[int]:
    """Spawn offsets: one per period while a full visibility window fits."""
    offsets = []
    t = 0
    while t + visible_ms <= duration_ms:
        offsets.append(t)
        t += period_ms
    return offsets


def next_word_oracle(
    memories: Mapping[str, int], counter: int, level_words: Iterable[str]
) -> str:
    """Selection rule restated over plain data.

    ``memories`` maps each seen word to its due point. Due words first
    (earliest due point, then alphabetical); then the first unseen word
    in the current level's order; then the globally soonest review.
    """
    ranked = sorted((due, word) for word, due in memories.items())
    if ranked and ranked[0][0] <= counter:
        return ranked[0][1]
    for word in level_words:
        if word not in memories:
            return word
    return ranked[0][1]
