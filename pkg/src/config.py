import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.oracle.field import DEFAULT_PRIME, PrimeField
from src.oracle.groebner import DEFAULT_PAIR_BUDGET
from src.rigidity.henneberg import MAX_GENERATE_VERTICES

VALID_PIVOT_STRATEGIES = ("default", "first", "all")


@dataclass
class EngineConfig:
    """Configuration for the Laman number recursion."""

    pivot_strategy: str = "default"
    early_zero: bool = True
    jobs: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "EngineConfig":
        """Create EngineConfig from YAML dict."""
        strategy = data.get("pivot_strategy", "default")
        if strategy not in VALID_PIVOT_STRATEGIES:
            raise ValueError(
                f"engine.pivot_strategy must be one of {', '.join(VALID_PIVOT_STRATEGIES)}, got: {strategy}"
            )
        return cls(
            pivot_strategy=strategy,
            early_zero=data.get("early_zero", True),
            jobs=data.get("jobs", 1),
        )


@dataclass
class OracleConfig:
    """Configuration for the algebraic solution-counting oracle."""

    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    max_retries: int = 5
    pair_budget: int = DEFAULT_PAIR_BUDGET
    max_vertices: int = 7

    def __post_init__(self) -> None:
        PrimeField(self.prime)

    @classmethod
    def from_dict(cls, data: dict) -> "OracleConfig":
        """Create OracleConfig from YAML dict."""
        return cls(
            prime=data.get("prime", DEFAULT_PRIME),
            seed=data.get("seed", 0),
            trials=data.get("trials", 3),
            max_retries=data.get("max_retries", 5),
            pair_budget=data.get("pair_budget", DEFAULT_PAIR_BUDGET),
            max_vertices=data.get("max_vertices", 7),
        )


@dataclass
class GenerateConfig:
    max_vertices: int = MAX_GENERATE_VERTICES

    @classmethod
    def from_dict(cls, data: dict) -> "GenerateConfig":
        return cls(max_vertices=data.get("max_vertices", MAX_GENERATE_VERTICES))


@dataclass
class BenchConfig:
    max_vertices: int = 8

    @classmethod
    def from_dict(cls, data: dict) -> "BenchConfig":
        return cls(max_vertices=data.get("max_vertices", 8))


def load_yaml_config(path: str) -> dict[str, Any]:
    """Load YAML configuration file.

    Args:
        path: Path to the YAML configuration file.

    Returns:
        Dictionary with configuration values, or empty dict if file doesn't exist.
    """
    if not os.path.exists(path):
        return {}

    with open(path, encoding="utf-8") as f:
        content = f.read()
        if not content.strip():
            return {}
        return yaml.safe_load(content) or {}


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="LAMAN_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    config_path: str = "config/config.yaml"
    records_path: str = "data/runs.jsonl"
    log_level: str = "INFO"

    @field_validator("log_level", mode="before")
    @classmethod
    def parse_log_level(cls, v: Any) -> str:
        """Normalize the level name and reject unknown ones."""
        level = str(v).strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"LAMAN_LOG_LEVEL must be a logging level name, got: {v}")
        return level


class AppConfig:
    """Application configuration combining Settings (env) and YAML config."""

    def __init__(self, settings: Settings):
        """Initialize AppConfig with Settings and load YAML config.

        Args:
            settings: Pydantic Settings instance with environment variables.
        """
        self._settings = settings
        self._yaml_config = load_yaml_config(settings.config_path)

    @property
    def settings(self) -> Settings:
        """Get the underlying Settings object."""
        return self._settings

    @property
    def log_level(self) -> str:
        return self._settings.log_level

    @property
    def records_path(self) -> str:
        return self._settings.records_path

    @property
    def engine(self) -> EngineConfig:
        """Get recursion engine configuration."""
        return EngineConfig.from_dict(self._yaml_config.get("engine", {}))

    @property
    def oracle(self) -> OracleConfig:
        """Get oracle configuration."""
        return OracleConfig.from_dict(self._yaml_config.get("oracle", {}))

    @property
    def generate(self) -> GenerateConfig:
        return GenerateConfig.from_dict(self._yaml_config.get("generate", {}))

    @property
    def bench(self) -> BenchConfig:
        return BenchConfig.from_dict(self._yaml_config.get("bench", {}))


DEFAULT_CONFIG_TEMPLATE = '''# Laman number counter configuration
# Generated automatically on first run

# Recursion engine
engine:
  pivot_strategy: default  # default | first | all
  early_zero: true  # twin biedges count 0 without recursing
  jobs: 1  # worker processes for the top-level expansion (0 = physical cores)

# Algebraic cross-check over a prime field
oracle:
  prime: 2147483647
  seed: 0
  trials: 3  # independent labelings that must agree
  max_retries: 5
  pair_budget: 50000  # S-pair reductions before giving up
  max_vertices: 7

# Henneberg generation
generate:
  max_vertices: 9

# Batch runs
bench:
  max_vertices: 8
'''


def generate_default_config(config_path: str) -> bool:
    """Generate default config file if it doesn't exist.

    Returns True if config was created, False if it already existed.
    """
    path = Path(config_path)

    if path.exists():
        return False

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(DEFAULT_CONFIG_TEMPLATE)
    return True
