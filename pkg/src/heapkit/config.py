"""
heapkit Configuration Management

Central configuration for verification windows, sampling, synthesis and output.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import TYPE_CHECKING

import toml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from heapkit.core.logging_config import LogConfig

DEFAULT_CONFIG_DIR = Path.home() / ".heapkit"
DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_DIR / "config.toml"


class SynthesisConfig(BaseModel):
    """Full-heap synthesis search settings."""

    workers: int = Field(default_factory=lambda: min(4, os.cpu_count() or 1))
    node_budget: int = 5_000_000
    prefix_depth: int = 2  # Letters fixed per queued task


class OutputConfig(BaseModel):
    """Rendering and fixture settings."""

    default_format: str = "text"
    fixtures_dir: Path = Path("tests/fixtures")


class LoggingSettings(BaseModel):
    """Logging settings mapped onto core.logging_config.LogConfig."""

    level: str = "WARNING"
    file: Path | None = None
    json_sink: bool = False


class HeapkitConfig(BaseSettings):
    """Main heapkit configuration."""

    window: int = 3
    seed: int = 0
    sample_size: int = 200

    synthesis: SynthesisConfig = Field(default_factory=SynthesisConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    model_config = SettingsConfigDict(
        env_prefix="HEAPKIT_", env_file=".env", env_nested_delimiter="__"
    )

    @field_validator("window")
    @classmethod
    def _window_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"window must be >= 1, got {value}")
        return value

    @classmethod
    def load(cls, config_path: Path | None = None) -> HeapkitConfig:
        """Load configuration from file."""
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH

        if config_path.exists():
            data = toml.load(config_path)
            return cls(**data)

        return cls()

    def save(self, config_path: Path | None = None) -> None:
        """Save configuration to file."""
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH

        config_path.parent.mkdir(parents=True, exist_ok=True)
        data = self.model_dump(mode="json", exclude_none=True)
        with open(config_path, "w") as f:
            toml.dump(data, f)

    def log_config(self) -> LogConfig:
        """Translate the logging section into a LogConfig."""
        from heapkit.core.logging_config import LogConfig, LogLevel

        config = LogConfig(console_level=LogLevel.parse(self.logging.level))
        if self.logging.file is not None:
            config.file_enabled = True
            config.file_path = self.logging.file
            if self.logging.json_sink:
                config.json_enabled = True
                config.json_path = self.logging.file.with_suffix(".json")
        return config


# Global config instance
_config: HeapkitConfig | None = None


def get_config() -> HeapkitConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = HeapkitConfig.load()
    return _config


def set_config(config: HeapkitConfig) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config
