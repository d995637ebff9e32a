"""
Tests for configuration loading and verification presets
"""

import json

import pytest

from src.config.manager import AppConfig, ConfigManager, VerifyConfig
from src.config.presets import PresetManager
from src.game.errors import ConfigError


class TestConfigManager:

    def test_missing_file_gives_defaults(self, config_dir):
        config = ConfigManager(str(config_dir)).load_config()
        assert config == AppConfig()
        assert config.verify.string_edges == 7
        assert config.bench.edges == 18

    def test_yaml_sections(self, config_dir):
        (config_dir / "config.yaml").write_text(
            "verify:\n  max_edges: 2\n  seed: 9\nlogging:\n  level: DEBUG\n")
        config = ConfigManager(str(config_dir)).load_config()
        assert config.verify.max_edges == 2
        assert config.verify.seed == 9
        assert config.verify.graph_vertices == 4
        assert config.logging.level == "DEBUG"

    def test_json_by_suffix(self, tmp_path, config_dir):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({'explore': {'max_edges': 6, 'strict_green': True}}))
        config = ConfigManager(str(config_dir)).load_config(str(path))
        assert config.explore.max_edges == 6
        assert config.explore.strict_green

    @pytest.mark.parametrize("text", ["verify: [\n", "verify:\n  no_such_bound: 3\n"])
    def test_bad_file_falls_back_to_defaults(self, config_dir, text):
        (config_dir / "config.yaml").write_text(text)
        assert ConfigManager(str(config_dir)).load_config() == AppConfig()

    def test_save_and_reload(self, config_dir):
        manager = ConfigManager(str(config_dir))
        manager.load_config()
        manager.config.solver.memoize = False
        manager.config.verify.random_vertices = 5
        manager.save_config()
        reloaded = ConfigManager(str(config_dir)).load_config()
        assert not reloaded.solver.memoize
        assert reloaded.verify.random_vertices == 5

    def test_dump_config(self, config_dir):
        text = ConfigManager(str(config_dir)).dump_config()
        assert "string_edges: 7" in text
        assert "memoize: true" in text


class TestPresetManager:

    def make(self, config_dir):
        return PresetManager(ConfigManager(str(config_dir)))

    def test_builtin_names(self, config_dir):
        assert self.make(config_dir).get_preset_names() == [
            'acceptance-reduction', 'acceptance-theorem1', 'quick']

    def test_load_over_base(self, config_dir):
        config = self.make(config_dir).load_preset('quick', VerifyConfig(string_edges=3))
        assert (config.max_edges, config.random_trials, config.random_edges) == (3, 50, 6)
        assert config.string_edges == 3

    def test_acceptance_bounds(self, config_dir):
        config = self.make(config_dir).load_preset('acceptance-theorem1')
        assert (config.max_edges, config.string_edges, config.graph_vertices) == (5, 7, 4)

    def test_unknown(self, config_dir):
        with pytest.raises(ConfigError, match="unknown preset 'nope'"):
            self.make(config_dir).load_preset('nope')

    def test_install_once(self, config_dir):
        presets = self.make(config_dir)
        assert sorted(presets.install_builtin_presets()) == presets.get_preset_names()
        assert presets.install_builtin_presets() == []
        stored = json.loads((config_dir / "presets" / "quick.json").read_text())
        assert stored['verify']['max_edges'] == 3
        assert stored['_metadata']['name'] == 'quick'

    def test_disk_preset(self, config_dir):
        (config_dir / "presets" / "tiny.json").write_text(json.dumps(
            {'_metadata': {'name': 'tiny', 'description': 'one edge', 'suites': ['theorem1']},
             'verify': {'max_edges': 1, 'random_trials': 0}}))
        presets = self.make(config_dir)
        assert 'tiny' in presets.get_preset_names()
        assert presets.load_preset('tiny').max_edges == 1
        assert presets.get_preset_metadata('tiny').description == 'one edge'

    def test_invalid_field(self, config_dir):
        (config_dir / "presets" / "broken.json").write_text(json.dumps({'verify': {'edges': 1}}))
        with pytest.raises(ConfigError, match="invalid field"):
            self.make(config_dir).load_preset('broken')
