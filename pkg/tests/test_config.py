import json

import pytest

from core import dependency_validator
from core.config_loader import THREADS_ENV, ConfigLoader
from core.exceptions import DependencyValidationError


def _config_file(tmp_path, content):
    path = tmp_path / "bierkit.json"
    path.write_text(content if isinstance(content, str) else json.dumps(content), encoding="utf-8")
    return str(path)


def test_defaults_when_file_is_missing(tmp_path):
    config = ConfigLoader(str(tmp_path / "absent.json"), environ={})
    assert config.get_config() == ConfigLoader.DEFAULT_CONFIG
    assert config.threads == 1


def test_shipped_config_matches_the_defaults():
    assert ConfigLoader(environ={}).get_config() == ConfigLoader.DEFAULT_CONFIG


def test_partial_file_is_merged_over_defaults(tmp_path):
    config = ConfigLoader(_config_file(tmp_path, {"threads": 4, "log_level": "DEBUG", "unknown": 1}), environ={})
    assert config.threads == 4
    assert config.get("log_level") == "DEBUG"
    assert config.get("hull_chunk_size") == 256
    assert "unknown" not in config.get_config()


@pytest.mark.parametrize("content", ["{not json", "[1, 2]", {"threads": 0}, {"threads": "2"},
                                     {"log_to_file": "yes"}])
def test_bad_files_fall_back_to_defaults(tmp_path, content):
    config = ConfigLoader(_config_file(tmp_path, content), environ={})
    assert config.get_config() == ConfigLoader.DEFAULT_CONFIG


def test_thread_override_from_environment(tmp_path):
    path = _config_file(tmp_path, {"threads": 2})
    assert ConfigLoader(path, environ={THREADS_ENV: "8"}).threads == 8
    assert ConfigLoader(path, environ={THREADS_ENV: "zero"}).threads == 2
    assert ConfigLoader(path, environ={THREADS_ENV: "0"}).threads == 2
    assert ConfigLoader(path, environ={THREADS_ENV: ""}).threads == 2


def test_dependency_report(monkeypatch):
    assert dependency_validator.validate_dependencies()["missing_required"] == []
    monkeypatch.setattr(dependency_validator, "check_library_installed", lambda name: name != "pandas")
    report = dependency_validator.validate_dependencies()
    assert report == {"missing_required": ["pandas"], "missing_optional": []}
    assert dependency_validator.format_dependency_report(report) == ["Missing required libraries: pandas"]
    with pytest.raises(DependencyValidationError) as info:
        dependency_validator.validate_or_raise()
    assert info.value.dependency == "pandas"
