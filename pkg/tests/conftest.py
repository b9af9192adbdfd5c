"""Shared fixtures for the test suite."""

import json
import random

import pytest

from src.storage.files import matrix_to_dict


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running exhaustive or table checks")


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def strategy_file(tmp_path):
    """Write a matrix (or any JSON-ready object) to a file and return its path."""

    def write(obj, name="strategy.json"):
        path = tmp_path / name
        data = obj if isinstance(obj, dict) else matrix_to_dict(obj)
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write
