import random
from fractions import Fraction

import pytest
from hypothesis import settings

from cubicinf.parser import parse_poly
from cubicinf.poly import Poly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def P(text, gens=("x0", "x1", "x2")):
    return parse_poly(text, gens, max_degree=None)


def random_poly(rng: random.Random, gens=("x0", "x1", "x2"), max_deg=2, nterms=4) -> Poly:
    terms = {}
    for _ in range(nterms):
        while True:
            mono = tuple(rng.randint(0, max_deg) for _ in gens)
            if sum(mono) <= max_deg:
                break
        terms[mono] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(terms, gens)


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
