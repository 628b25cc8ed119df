"""Runtime limits read from the environment.

Values are read on every call so tests and the CLI can override them with
``monkeypatch.setenv`` or a shell export.
"""
import os

DEFAULT_MAX_DEGREE = 4
DEFAULT_INDEX_BOUND = 10**7


def _int_env(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


def max_degree() -> int:
    return _int_env("CODERCO_MAX_DEGREE", DEFAULT_MAX_DEGREE)


def index_bound() -> int:
    return _int_env("CODERCO_INDEX_BOUND", DEFAULT_INDEX_BOUND)


def default_seed() -> int:
    return _int_env("CODERCO_SEED", 0)
