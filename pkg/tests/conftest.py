import json
import random
from fractions import Fraction
from importlib import resources

import pytest

from shiftdim import Degree, IntervalModule


def load_fixture(name: str) -> dict:
    ref = resources.files("shiftdim.fixtures").joinpath(name)
    with ref.open("r", encoding="utf-8") as fh:
        return json.load(fh)


def fixture_path(name: str) -> str:
    return str(resources.files("shiftdim.fixtures").joinpath(name))


def random_interval_module(
    rng: random.Random,
    max_gens: int = 6,
    box: int = 12,
    max_rels: int = 4,
    rel_step: int = 5,
    denominator: int = 1,
) -> IntervalModule:
    """Random quotient of monomial ideals with integer (or d-adic) coordinates."""

    def coord(hi):
        return Fraction(rng.randint(0, hi * denominator), denominator)

    gens = [Degree(coord(box), coord(box)) for _ in range(rng.randint(1, max_gens))]
    module = IntervalModule(gens)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        g = rng.choice(list(module.generators))
        rels.append(
            g + Degree(
                Fraction(rng.randint(1, rel_step * denominator), denominator),
                Fraction(rng.randint(1, rel_step * denominator), denominator),
            )
        )
    return IntervalModule(gens, rels)


def random_direction(
    rng: random.Random, vmax: int = 5, denominator: int = 1, positive: bool = False
) -> Degree:
    lo = 1 if positive else 0
    return Degree(
        Fraction(rng.randint(lo, vmax * denominator), denominator),
        Fraction(rng.randint(lo, vmax * denominator), denominator),
    )


@pytest.fixture
def rng():
    return random.Random(20240817)
