"""
ConfigLoader: Loads bierkit runtime settings from JSON or provides defaults.

A partial file is merged over the defaults. The BIERKIT_THREADS environment
variable overrides the thread count.
"""

import json
import os
from typing import Any, Dict, Optional

from loguru import logger

THREADS_ENV = "BIERKIT_THREADS"


class ConfigLoader:
    """
    Loads runtime configuration from a JSON file or falls back to defaults.

    Used by the experiment controller to size worker pools and by main.py
    to configure logging sinks.
    """

    DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                                       "config", "bierkit.json")

    # If no config file is found, these settings are used.
    DEFAULT_CONFIG = {
        "threads": 1,
        "log_level": "INFO",
        "log_to_file": False,
        "log_dir": "logs",
        "sample_seed": 20240607,
        "disjointness_samples": 64,
        "hull_chunk_size": 256,
    }

    INT_KEYS = ("threads", "sample_seed", "disjointness_samples", "hull_chunk_size")

    def __init__(self, config_path: Optional[str] = None, environ: Optional[Dict[str, str]] = None):
        self.config_path = config_path or self.DEFAULT_CONFIG_PATH
        self.environ = os.environ if environ is None else environ
        self.config: Dict[str, Any] = {}
        self.load_config()

    def load_config(self):
        """
        Loads settings from the config file if available, falling back to the
        defaults when it is missing or malformed, then applies the environment.
        """
        self.config = dict(self.DEFAULT_CONFIG)
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    loaded = json.load(f)
                if not isinstance(loaded, dict):
                    raise ValueError("top level must be a JSON object")
                self.config.update({k: v for k, v in loaded.items() if k in self.DEFAULT_CONFIG})
                self._validate()
                logger.debug(f"Loaded configuration from {self.config_path}")
            except Exception as e:
                logger.error(f"Error loading configuration {self.config_path}: {e}")
                self.config = dict(self.DEFAULT_CONFIG)
                logger.info("Using default configuration due to error.")
        else:
            logger.debug(f"Configuration file not found: {self.config_path}; using defaults")
        self._apply_environment()

    def _validate(self):
        for key in self.INT_KEYS:
            value = self.config[key]
            if isinstance(value, bool) or not isinstance(value, int) or value < (0 if key == "sample_seed" else 1):
                raise ValueError(f"{key} must be a positive integer, got {value!r}")
        if not isinstance(self.config["log_to_file"], bool):
            raise ValueError("log_to_file must be true or false")

    def _apply_environment(self):
        raw = self.environ.get(THREADS_ENV)
        if raw is None or raw == "":
            return
        try:
            threads = int(raw)
            if threads < 1:
                raise ValueError
        except ValueError:
            logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: expected a positive integer")
            return
        self.config["threads"] = threads

    def get(self, key: str) -> Any:
        return self.config.get(key, self.DEFAULT_CONFIG.get(key))

    @property
    def threads(self) -> int:
        return self.config["threads"]

    def get_config(self) -> Dict[str, Any]:
        return dict(self.config)
