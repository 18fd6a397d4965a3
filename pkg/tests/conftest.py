"""Shared helpers for the test suite."""

import re

import pytest

from reca.iosys import PAGE_EJECT
from reca.session import SessionConfig, run_deck

FIELD = re.compile(r"-?\d\.\d{5}E[- ]\d\d")


def run(deck, **cfg):
    """Run a deck; returns (printed lines without page ejects, status)."""
    sess, status = run_deck(deck, config=SessionConfig(**cfg) if cfg else None)
    return [l for l in sess.output if l != PAGE_EJECT], status


def field_value(text):
    """Float value of one formatted field like ' 1.05000E 00'."""
    return float(text.replace("E ", "E+"))


def table_rows(lines):
    """Lines that consist only of formatted numeric fields."""
    rows = []
    for line in lines:
        fields = FIELD.findall(line)
        if fields and not line.strip(" -.0123456789E"):
            rows.append(fields)
    return rows


def squeeze(text):
    """Collapse blank runs, as the era's transcriptions did."""
    return " ".join(text.split())


@pytest.fixture
def run_fixture():
    return run
