"""
Verification presets
Named suite bounds stored as JSON next to the configuration
"""

import logging
import json
from typing import Dict, List, Any, Optional
from dataclasses import dataclass, field, asdict, replace

from src.config.manager import ConfigManager, VerifyConfig
from src.game.errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass
class PresetMetadata:
    """Metadata for presets"""
    name: str
    description: str = ""
    suites: List[str] = field(default_factory=list)
    version: str = "1.0"


class PresetManager:
    """Built-in and on-disk verification presets"""

    def __init__(self, config_manager: ConfigManager):
        self.config_manager = config_manager
        self.presets_dir = config_manager.presets_dir

        self.builtin_presets: Dict[str, Dict[str, Any]] = {}
        self._create_builtin_presets()

    def _create_builtin_presets(self):
        """Create built-in preset definitions"""

        # Exhaustive strings to 7 edges, graphs to 5 edges over 4 non-ground vertices
        theorem1_preset = {
            'metadata': PresetMetadata(
                name="acceptance-theorem1",
                description="Misere Red-Blue formula, strategy and duality at acceptance scale",
                suites=["theorem1", "strategy", "duality"]
            ),
            'verify': {
                'max_edges': 5,
                'string_edges': 7,
                'graph_vertices': 4,
                'random_trials': 2000,
                'random_edges': 9,
                'seed': 42
            }
        }

        reduction_preset = {
            'metadata': PresetMetadata(
                name="acceptance-reduction",
                description="Reduction equivalence and ground-merge invariance at acceptance scale",
                suites=["reduction"]
            ),
            'verify': {
                'max_edges': 4,
                'graph_vertices': 4,
                'random_trials': 1000,
                'random_edges': 8,
                'seed': 42
            }
        }

        quick_preset = {
            'metadata': PresetMetadata(
                name="quick",
                description="Small bounds for a smoke run",
                suites=["theorem1", "reduction", "strategy", "duality"]
            ),
            'verify': {
                'max_edges': 3,
                'graph_vertices': 3,
                'random_trials': 50,
                'random_edges': 6,
                'seed': 42
            }
        }

        self.builtin_presets = {
            'acceptance-theorem1': theorem1_preset,
            'acceptance-reduction': reduction_preset,
            'quick': quick_preset
        }

    def install_builtin_presets(self) -> List[str]:
        """Write built-in presets missing from disk; returns the names written"""
        self.presets_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for name, preset_data in self.builtin_presets.items():
            preset_file = self.presets_dir / f"{name}.json"
            if preset_file.exists():
                continue
            data = {'_metadata': asdict(preset_data['metadata']), 'verify': preset_data['verify']}
            with open(preset_file, 'w') as f:
                json.dump(data, f, indent=2)
                f.write("\n")
            written.append(name)
            logger.info(f"Installed built-in preset: {name}")
        return written

    def _read_preset(self, name: str) -> Dict[str, Any]:
        preset_file = self.presets_dir / f"{name}.json"
        if preset_file.exists():
            try:
                with open(preset_file, 'r') as f:
                    return json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"cannot read preset '{name}': {e}") from e
        if name in self.builtin_presets:
            preset = self.builtin_presets[name]
            return {'_metadata': asdict(preset['metadata']), 'verify': preset['verify']}
        raise ConfigError(f"unknown preset '{name}' (available: {', '.join(self.get_preset_names())})")

    def load_preset(self, name: str, base: Optional[VerifyConfig] = None) -> VerifyConfig:
        """Preset bounds layered over ``base`` (default: the loaded configuration)"""
        base = base or self.config_manager.get_config().verify
        data = self._read_preset(name)
        try:
            config = replace(base, **data.get('verify', {}))
        except TypeError as e:
            raise ConfigError(f"preset '{name}' has an invalid field: {e}") from e
        logger.info(f"Loaded preset '{name}'")
        return config

    def get_preset_metadata(self, name: str) -> PresetMetadata:
        metadata = self._read_preset(name).get('_metadata', {'name': name})
        return PresetMetadata(**metadata)

    def get_preset_names(self) -> List[str]:
        """Built-in presets plus any JSON presets on disk"""
        names = set(self.builtin_presets)
        if self.presets_dir.exists():
            names.update(path.stem for path in self.presets_dir.glob("*.json"))
        return sorted(names)
