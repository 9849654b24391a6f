"""Suite-wide offline enforcement: no test may touch the live network."""

import os
import sys
from pathlib import Path

os.environ["COMBINE_OFFLINE"] = "1"

sys.path.insert(0, str(Path(__file__).parent))

import pytest


@pytest.fixture(autouse=True, scope="session")
def forbid_live_network():
    """Replace the live HTTP sender with one that fails the test."""
    import combine.datasources.transport as transport_module

    original = transport_module._httpx_send

    def failing_send(descriptor, timeout=30.0):
        raise AssertionError(f"live network call attempted: {descriptor.normalized()}")

    transport_module._httpx_send = failing_send
    yield
    transport_module._httpx_send = original


@pytest.fixture
def failing_send():
    def send(descriptor):
        raise AssertionError(f"live network call attempted: {descriptor.normalized()}")

    return send


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from acceptance_report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")
