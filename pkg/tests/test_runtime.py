import json

import pytest

from molespell.protocol import (
    EffectEvent,
    ErrorEvent,
    KeyHit,
    Quit,
    RoundResultEvent,
    StateSnapshot,
)
from molespell.runtime import SessionRuntime, replay_session_log
from molespell.session import Spelling, create_session
from molespell.storage import InMemoryProfileStore


def build_runtime(catalog, seed=11):
    log: list[dict] = []
    session = create_session(
        "kid", catalog, seed, store=InMemoryProfileStore(), session_id="s-log", now=0
    )
    return SessionRuntime(session=session, append_log=log.append), log


class TestAttach:
    def test_first_attach_gets_snapshot_then_backlog(self, catalog):
        runtime, _ = build_runtime(catalog)
        events = runtime.attach_stream()
        assert isinstance(events[0], StateSnapshot)
        assert isinstance(events[1], EffectEvent)  # the first word being spoken

    def test_reattach_gets_only_a_snapshot(self, catalog):
        runtime, _ = build_runtime(catalog)
        runtime.attach_stream()
        events = runtime.attach_stream()
        assert len(events) == 1
        assert isinstance(events[0], StateSnapshot)


class TestProcessLine:
    def test_malformed_json_is_answered_not_dropped(self, catalog):
        runtime, log = build_runtime(catalog)
        events = runtime.process_line("{oops", 100)
        assert [e.code for e in events if isinstance(e, ErrorEvent)] == ["bad_json"]

    def test_unknown_type_is_answered(self, catalog):
        runtime, _ = build_runtime(catalog)
        events = runtime.process_line('{"type":"warp"}', 100)
        assert events[0].code == "unknown_type"

    def test_mode_violation_becomes_an_error_event(self, catalog):
        runtime, _ = build_runtime(catalog)
        events = runtime.process_line('{"type":"whack","cell":3}', 100)
        assert events[0].code == "event_not_allowed"

    def test_event_after_quit_is_answered(self, catalog):
        runtime, _ = build_runtime(catalog)
        runtime.process_line('{"type":"quit"}', 100)
        events = runtime.process_line('{"type":"replay"}', 200)
        assert events[0].code == "session_quit"

    def test_every_line_gets_at_least_one_event(self, catalog):
        runtime, _ = build_runtime(catalog)
        lines = [
            '{"type":"key_hit","letter":"c"}',
            '{"type":"key_hit","letter":"z"}',
            '{"type":"replay"}',
            '{"type":"whack","cell":1}',
            "...",
            '{"type":"pause"}',
            '{"type":"resume"}',
            '{"type":"quit"}',
        ]
        for i, line in enumerate(lines):
            assert runtime.process_line(line, 100 * (i + 1)), line


class TestLogRecords:
    def test_header_carries_everything_replay_needs(self, catalog):
        runtime, log = build_runtime(catalog)
        runtime.start_log()
        header = log[0]
        assert header["type"] == "session_start"
        assert header["session_id"] == "s-log"
        assert header["player_id"] == "kid"
        assert header["seed"] == 11
        assert set(header["config"]) == {"round", "bonus", "levels", "session"}
        assert header["profile"]["player_id"] == "kid"
        json.dumps(log[0])  # the record must be a plain JSON document

    def test_quiet_ticks_are_not_logged(self, catalog):
        runtime, log = build_runtime(catalog)
        runtime.start_log()
        assert runtime.process_tick(50) == []
        assert len(log) == 1

    def test_effectful_ticks_are_logged(self, catalog):
        runtime, log = build_runtime(catalog)
        runtime.start_log()
        events = runtime.process_tick(5000)
        assert events
        assert log[-1]["type"] == "tick"
        assert log[-1]["wall"] == 5000
        assert log[-1]["emitted"]

    def test_round_results_get_their_own_record(self, catalog):
        runtime, log = build_runtime(catalog)
        runtime.start_log()
        wall = 0
        for letter in "cat":
            wall += 200
            runtime.process_event(KeyHit(letter), wall)
        kinds = [r["type"] for r in log]
        assert kinds.count("round_result") == 1
        result_record = next(r for r in log if r["type"] == "round_result")
        assert result_record["result"]["word"] == "cat"

    def test_quit_writes_the_final_score(self, catalog):
        runtime, log = build_runtime(catalog)
        runtime.start_log()
        wall = 0
        for letter in "cat":
            wall += 200
            runtime.process_event(KeyHit(letter), wall)
        runtime.process_event(Quit(), wall + 100)
        assert log[-1] == {"type": "session_end", "wall": wall + 100, "score": 30}


class TestReplay:
    def play_and_log(self, catalog, seed=11):
        runtime, log = build_runtime(catalog, seed)
        runtime.start_log()
        wall = 0
        runtime.process_tick(5000)  # escalate the first letter once
        wall = 5000
        while isinstance(runtime.session.mode, Spelling) and not runtime.session.ended:
            state = runtime.session.mode.round
            if state.completed:
                break
            wall += 200
            runtime.process_event(KeyHit(state.current_letter), wall)
            if runtime.session.player.presentation_counter >= 2:
                break
        runtime.process_event(Quit(), wall + 50)
        return runtime, log

    def test_replay_reproduces_score_and_stream(self, catalog):
        runtime, log = self.play_and_log(catalog)
        replayed = replay_session_log(log, catalog)
        assert replayed.final_score == runtime.session.score
        assert replayed.recorded_final_score == runtime.session.score
        # The emitted streams match record for record.
        original = [r["emitted"] for r in log if r["type"] in ("event", "tick")]
        assert replayed.emitted == original

    def test_replay_needs_a_header(self, catalog):
        with pytest.raises(ValueError):
            replay_session_log([], catalog)
        with pytest.raises(ValueError):
            replay_session_log([{"type": "event"}], catalog)

    def test_replay_starts_from_the_logged_profile(self, catalog):
        # Play one session to completion, then a second one for the same
        # player; its log must replay against the *saved* profile.
        store = InMemoryProfileStore()
        first = create_session("kid", catalog, 3, store=store, session_id="a", now=0)
        rt1 = SessionRuntime(session=first, append_log=None)
        wall = 0
        for letter in "cat":
            wall += 150
            rt1.process_event(KeyHit(letter), wall)
        rt1.process_event(Quit(), wall + 10)

        log: list[dict] = []
        second = create_session("kid", catalog, 4, store=store, session_id="b", now=0)
        rt2 = SessionRuntime(session=second, append_log=log.append)
        rt2.start_log()
        word = rt2.session.mode.round.word
        wall = 0
        for letter in word:
            wall += 150
            rt2.process_event(KeyHit(letter), wall)
        rt2.process_event(Quit(), wall + 10)

        replayed = replay_session_log(log, catalog)
        assert replayed.final_score == rt2.session.score
        assert replayed.session.player.presentation_counter == 2
