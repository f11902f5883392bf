import subprocess
import sys
from fractions import Fraction

import pytest


def rel_err(got, want) -> float:
    """|got - want| / |want|; absolute difference when want == 0."""
    got, want = float(got), float(want)
    if want == 0:
        return abs(got)
    return abs(got - want) / abs(want)


@pytest.fixture
def cli():
    """Run the installed CLI in a subprocess; returns CompletedProcess."""

    def run(*argv, **kwargs):
        return subprocess.run(
            [sys.executable, "-m", "umbralpoly", *map(str, argv)],
            capture_output=True,
            text=True,
            timeout=120,
            **kwargs,
        )

    return run


F = Fraction


@pytest.fixture
def rational_grid():
    return (F(0), F(1, 10), F(1, 3), F(1), F(3))
