import pytest

from sesx.core.text import attach_sentinel


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point sesx at a config path inside tmp_path and clear env overrides."""
    config_path = tmp_path / "sesx-config.yaml"
    monkeypatch.setenv("SESX_CONFIG", str(config_path))
    for var in ("SESX_MAX_RAW_LEN", "SESX_ALPHABET_SIZE", "SESX_LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)
    return config_path


@pytest.fixture
def sample_text():
    """The running example aabbaababa with its sentinel."""
    return attach_sentinel(b"aabbaababa")
