"""Collects acceptance criterion verdicts for the end-of-run summary."""

import sys
from contextlib import contextmanager

RESULTS: list[tuple[str, bool]] = []


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        RESULTS.append((name, False))
        print(f"ACCEPTANCE FAIL: {name}", file=sys.__stdout__, flush=True)
        raise
    RESULTS.append((name, True))
    print(f"ACCEPTANCE PASS: {name}", file=sys.__stdout__, flush=True)
