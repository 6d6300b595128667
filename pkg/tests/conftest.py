from __future__ import annotations

import random
from pathlib import Path

import pytest

DEFAULT_SEED = 20240607
DATA = Path(__file__).resolve().parents[1] / "src" / "tff" / "data"


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for the randomized checks")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture
def data_dir() -> Path:
    return DATA


_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Context manager recording a pass/fail line for an acceptance criterion."""
    import contextlib
    import time

    @contextlib.contextmanager
    def run(number: int, title: str):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _ACCEPTANCE[number] = (False, f"{title} ({time.perf_counter() - start:.2f}s)")
            raise
        _ACCEPTANCE[number] = (True, f"{title} ({time.perf_counter() - start:.2f}s)")

    return run


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, text = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
