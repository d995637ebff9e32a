"""
Configuration management system
Handles loading and saving workbench defaults
"""

import json
import yaml
import logging
from pathlib import Path
from typing import Dict, Any, Optional
from dataclasses import dataclass, field, asdict

logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    """Search configuration"""
    memoize: bool = True


@dataclass
class VerifyConfig:
    """Verification suite bounds"""
    max_edges: int = 4
    string_edges: Optional[int] = 7
    graph_vertices: int = 4
    random_trials: int = 200
    random_edges: int = 8
    random_vertices: Optional[int] = None
    seed: int = 42
    max_examples: int = 20


@dataclass
class ExploreConfig:
    """Green-string explorer configuration"""
    max_edges: int = 4
    strict_green: bool = False


@dataclass
class BenchConfig:
    """Benchmark instance configuration"""
    edges: int = 18
    vertices: int = 10
    colors: str = "BRG"
    seed: int = 42


@dataclass
class LoggingConfig:
    """Diagnostic logging configuration"""
    level: str = "INFO"
    file: Optional[str] = None


@dataclass
class AppConfig:
    """Main application configuration"""
    solver: SolverConfig = field(default_factory=SolverConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    explore: ExploreConfig = field(default_factory=ExploreConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


class ConfigManager:
    """Configuration manager; presets live in ``<config_dir>/presets``"""

    def __init__(self, config_dir: str = "configs"):
        self.config_dir = Path(config_dir)
        self.presets_dir = self.config_dir / "presets"
        self.config_file = self.config_dir / "config.yaml"

        self.config: Optional[AppConfig] = None

        logger.debug(f"ConfigManager initialized with config dir: {config_dir}")

    def load_config(self, config_file: Optional[str] = None) -> AppConfig:
        """Load configuration from file, falling back to defaults"""
        config_path = Path(config_file) if config_file else self.config_file

        try:
            if config_path.exists():
                with open(config_path, 'r') as f:
                    if config_path.suffix.lower() == '.json':
                        data = json.load(f)
                    else:
                        data = yaml.safe_load(f)

                self.config = self._dict_to_config(data or {})
                logger.debug(f"Configuration loaded from {config_path}")
            else:
                self.config = AppConfig()
                logger.debug(f"No configuration at {config_path}, using defaults")

        except Exception as e:
            logger.error(f"Failed to load config: {e}")
            self.config = AppConfig()

        return self.config

    def save_config(self, config_file: Optional[str] = None):
        """Save current configuration to file"""
        if not self.config:
            logger.warning("No configuration to save")
            return

        config_path = Path(config_file) if config_file else self.config_file
        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, 'w') as f:
            yaml.dump(self._config_to_dict(self.config), f, default_flow_style=False, indent=2)

        logger.info(f"Configuration saved to {config_path}")

    def _dict_to_config(self, data: Dict[str, Any]) -> AppConfig:
        """Convert dictionary to AppConfig"""
        try:
            return AppConfig(
                solver=SolverConfig(**data.get('solver', {})),
                verify=VerifyConfig(**data.get('verify', {})),
                explore=ExploreConfig(**data.get('explore', {})),
                bench=BenchConfig(**data.get('bench', {})),
                logging=LoggingConfig(**data.get('logging', {}))
            )
        except Exception as e:
            logger.error(f"Error parsing config: {e}")
            return AppConfig()

    def _config_to_dict(self, config: AppConfig) -> Dict[str, Any]:
        """Convert AppConfig to dictionary"""
        return asdict(config)

    def get_config(self) -> AppConfig:
        """Get current configuration, loading defaults on first use"""
        if self.config is None:
            return self.load_config()
        return self.config

    def dump_config(self) -> str:
        """Current configuration as YAML text"""
        return yaml.dump(self._config_to_dict(self.get_config()),
                         default_flow_style=False, indent=2, sort_keys=True)
