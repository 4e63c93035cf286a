from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from vlattice import canonicalize
from vlattice.generator import Stream

L2 = (1, 2)
L3 = (1, 2, 3)
L4 = (1, 2, 3, 4)


def Q(x) -> Fraction:
    return Fraction(x)


def span(*vectors, labels=None):
    """Subspace spanned by integer/Fraction tuples over labels 1..n (or the given labels)."""
    if labels is None:
        n = len(vectors[0])
        labels = tuple(range(1, n + 1))
    return canonicalize(vectors, labels)


def rows(Y):
    """Basis as nested lists of Fractions, for readable comparisons."""
    return [list(r) for r in Y.basis]


@pytest.fixture
def stream():
    return Stream(20261016)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
