"""Time-limited Whac-A-Mole bonus: whack scheduled moles for extra score.

The whole spawn schedule is derived up front from the seed, so a bonus
round is replayable the same way as a spelling round. Timestamps use the
same caller-supplied millisecond clock as the round engine.
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass


class BonusError(Exception):
    pass


class BonusFinished(BonusError):
    pass


class BonusStillRunning(BonusError):
    pass


class CellOutOfRange(BonusError):
    pass


@dataclass(frozen=True)
class BonusConfig:
    duration_ms: int = 30_000
    grid_cells: int = 9
    spawn_period_ms: int = 900
    visible_ms: int = 700
    points_per_whack: int = 5

    def __post_init__(self) -> None:
        if self.visible_ms > self.spawn_period_ms:
            raise ValueError("visible_ms must not exceed spawn_period_ms")
        if self.duration_ms < self.spawn_period_ms:
            raise ValueError("duration_ms must cover at least one spawn period")
        if self.grid_cells < 1 or self.visible_ms < 1 or self.points_per_whack < 0:
            raise ValueError("grid_cells and visible_ms must be >= 1, points >= 0")


@dataclass(frozen=True)
class Spawn:
    t_offset: int
    cell: int


@dataclass(frozen=True)
class BonusState:
    config: BonusConfig
    start: int
    spawns: tuple[Spawn, ...]
    hits: frozenset[int]
    finished: bool

    def points(self) -> int:
        return len(self.hits) * self.config.points_per_whack


def start_bonus(config: BonusConfig, seed: int, start: int) -> BonusState:
    """Precompute the full mole schedule for one bonus round.

    Moles appear every spawn period, in a seeded-uniform random cell,
    for as long as a full visibility window still fits in the duration.
    """
    gen = random.Random(seed)
    count = (config.duration_ms - config.visible_ms) // config.spawn_period_ms + 1
    spawns = tuple(
        Spawn(t_offset=i * config.spawn_period_ms, cell=gen.randrange(config.grid_cells))
        for i in range(count)
    )
    return BonusState(config=config, start=start, spawns=spawns, hits=frozenset(), finished=False)


def active_spawn(state: BonusState, now: int) -> int | None:
    """Index of the unhit spawn whose visibility window contains ``now``."""
    elapsed = now - state.start
    for i, spawn in enumerate(state.spawns):
        if i in state.hits:
            continue
        if spawn.t_offset <= elapsed < spawn.t_offset + state.config.visible_ms:
            return i
    return None


def on_whack(state: BonusState, cell: int, now: int) -> tuple[BonusState, bool]:
    """Resolve a tap on ``cell``: a hit iff the visible, unhit mole is there."""
    if state.finished:
        raise BonusFinished("bonus round is over")
    if not 0 <= cell < state.config.grid_cells:
        raise CellOutOfRange(f"cell {cell} not in 0..{state.config.grid_cells - 1}")
    idx = active_spawn(state, now)
    if idx is None or state.spawns[idx].cell != cell:
        return state, False
    return dataclasses.replace(state, hits=state.hits | {idx}), True


def finish_bonus(state: BonusState, now: int) -> tuple[BonusState, int]:
    """Close the round once its duration has fully elapsed.

    Returns the finished state and the points earned; calling again on
    the finished state yields the same points.
    """
    if now - state.start < state.config.duration_ms:
        raise BonusStillRunning(
            f"{state.config.duration_ms - (now - state.start)} ms still to play"
        )
    return dataclasses.replace(state, finished=True), state.points()
