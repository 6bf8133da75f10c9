import json

import pytest

from molespell.config import GameConfig, game_config_from_dict, load_game_config


class TestDefaults:
    def test_default_values(self):
        cfg = GameConfig()
        assert cfg.round.choice_hint_delay_ms == 5000
        assert cfg.round.giveaway_delay_ms == 5000
        assert (cfg.round.points_unaided, cfg.round.points_after_hint, cfg.round.points_giveaway) == (10, 5, 0)
        assert cfg.bonus.duration_ms == 30_000
        assert cfg.bonus.grid_cells == 9
        assert (cfg.levels.window, cfg.levels.promote_mean, cfg.levels.demote_mean) == (10, 4.5, 2.0)
        assert cfg.session.streak_to_bonus == 3
        assert cfg.session.tick_interval_ms == 100


class TestFromDict:
    def test_empty_overrides_are_the_defaults(self):
        assert game_config_from_dict({}) == GameConfig()

    def test_partial_override_keeps_the_rest(self):
        cfg = game_config_from_dict({"round": {"choice_hint_delay_ms": 1200}})
        assert cfg.round.choice_hint_delay_ms == 1200
        assert cfg.round.giveaway_delay_ms == 5000
        assert cfg.bonus == GameConfig().bonus

    def test_round_trips_through_to_dict(self):
        cfg = game_config_from_dict(
            {"round": {"decoy_count": 3}, "session": {"streak_to_bonus": 2}}
        )
        assert game_config_from_dict(cfg.to_dict()) == cfg

    def test_unknown_section_is_an_error(self):
        with pytest.raises(ValueError, match="unknown config sections"):
            game_config_from_dict({"rounds": {}})

    def test_unknown_key_is_an_error(self):
        with pytest.raises(ValueError, match="unknown keys"):
            game_config_from_dict({"round": {"hint_delay": 1}})

    def test_section_must_be_an_object(self):
        with pytest.raises(ValueError, match="must be an object"):
            game_config_from_dict({"round": 5})

    def test_section_validation_still_applies(self):
        with pytest.raises(ValueError):
            game_config_from_dict({"round": {"points_after_hint": 0}})


class TestLoadFile:
    def test_none_means_defaults(self):
        assert load_game_config(None) == GameConfig()

    def test_loads_overrides_from_json(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"bonus": {"duration_ms": 10_000}}))
        assert load_game_config(path).bonus.duration_ms == 10_000

    def test_top_level_must_be_an_object(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(ValueError):
            load_game_config(path)
