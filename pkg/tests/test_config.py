import pytest
from unittest.mock import patch
from pydantic import ValidationError


def test_settings_defaults():
    with patch.dict("os.environ", {}, clear=True):
        from src.config import Settings
        settings = Settings(_env_file=None)
        assert settings.config_path == "config/config.yaml"
        assert settings.records_path == "data/runs.jsonl"
        assert settings.log_level == "INFO"


def test_settings_read_prefixed_env():
    with patch.dict("os.environ", {
        "LAMAN_CONFIG_PATH": "/tmp/laman.yaml",
        "LAMAN_RECORDS_PATH": "/tmp/runs.jsonl",
        "LAMAN_LOG_LEVEL": "debug",
    }, clear=True):
        from src.config import Settings
        settings = Settings(_env_file=None)
        assert settings.config_path == "/tmp/laman.yaml"
        assert settings.records_path == "/tmp/runs.jsonl"
        assert settings.log_level == "DEBUG"


def test_settings_reject_unknown_log_level():
    """Test that a level name logging does not know raises ValidationError."""
    with patch.dict("os.environ", {"LAMAN_LOG_LEVEL": "chatty"}, clear=True):
        from src.config import Settings
        with pytest.raises(ValidationError) as exc_info:
            Settings(_env_file=None)
        assert "LAMAN_LOG_LEVEL must be a logging level name" in str(exc_info.value)


def test_yaml_sections_are_parsed(tmp_path):
    """Test that engine, oracle, generate and bench sections are read."""
    config_file = tmp_path / "config.yaml"
    config_file.write_text("""
engine:
  pivot_strategy: first
  early_zero: false
  jobs: 4
oracle:
  prime: 1048583
  seed: 11
  trials: 5
generate:
  max_vertices: 8
bench:
  max_vertices: 6
""")

    with patch.dict("os.environ", {}, clear=True):
        from src.config import Settings, AppConfig

        config = AppConfig(Settings(_env_file=None, config_path=str(config_file)))

        assert config.engine.pivot_strategy == "first"
        assert config.engine.early_zero is False
        assert config.engine.jobs == 4
        assert config.oracle.prime == 1048583
        assert config.oracle.seed == 11
        assert config.oracle.trials == 5
        assert config.oracle.max_retries == 5
        assert config.generate.max_vertices == 8
        assert config.bench.max_vertices == 6


def test_missing_config_file_uses_defaults(tmp_path):
    with patch.dict("os.environ", {}, clear=True):
        from src.config import Settings, AppConfig

        config = AppConfig(Settings(_env_file=None, config_path=str(tmp_path / "absent.yaml")))

        assert config.engine.pivot_strategy == "default"
        assert config.engine.early_zero is True
        assert config.oracle.prime == 2147483647
        assert config.oracle.pair_budget == 50000
        assert config.generate.max_vertices == 9
        assert config.bench.max_vertices == 8


def test_empty_config_file_uses_defaults(tmp_path):
    config_file = tmp_path / "config.yaml"
    config_file.write_text("")

    from src.config import load_yaml_config

    assert load_yaml_config(str(config_file)) == {}


def test_invalid_pivot_strategy(tmp_path):
    from src.config import EngineConfig

    with pytest.raises(ValueError) as exc_info:
        EngineConfig.from_dict({"pivot_strategy": "random"})
    assert "engine.pivot_strategy must be one of" in str(exc_info.value)


def test_oracle_prime_must_be_prime():
    from src.config import OracleConfig
    from src.utils.errors import InputError

    with pytest.raises(InputError):
        OracleConfig.from_dict({"prime": 2**31})
