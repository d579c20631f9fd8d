"""Tests for default config generation."""

import yaml


class TestDefaultConfigGeneration:
    def test_generate_default_config(self, tmp_path):
        from src.config import generate_default_config

        config_path = tmp_path / "config.yaml"

        assert generate_default_config(str(config_path)) is True

        assert config_path.exists()
        content = config_path.read_text()

        # Check key sections exist
        assert "engine:" in content
        assert "oracle:" in content
        assert "generate:" in content
        assert "bench:" in content

        assert "#" in content  # Has comments

    def test_generated_config_matches_defaults(self, tmp_path):
        from src.config import EngineConfig, OracleConfig, generate_default_config

        config_path = tmp_path / "config.yaml"
        generate_default_config(str(config_path))
        data = yaml.safe_load(config_path.read_text())

        assert EngineConfig.from_dict(data["engine"]) == EngineConfig()
        assert OracleConfig.from_dict(data["oracle"]) == OracleConfig()

    def test_generate_default_does_not_overwrite(self, tmp_path):
        from src.config import generate_default_config

        config_path = tmp_path / "config.yaml"
        config_path.write_text("existing: content")

        assert generate_default_config(str(config_path)) is False

        # Should not overwrite
        assert config_path.read_text() == "existing: content"

    def test_generate_creates_parent_directories(self, tmp_path):
        from src.config import generate_default_config

        config_path = tmp_path / "nested" / "dir" / "config.yaml"
        generate_default_config(str(config_path))
        assert config_path.exists()
