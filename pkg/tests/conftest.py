import random

import pytest

from fermionic.exterior import Element, Monomial


def bubble_sign_product(n, a, b):
    """Oracle: concatenate generator words, bubble sort with sign flips, detect repeats."""
    word = Monomial(n, *a).generators() + Monomial(n, *b).generators()
    rank = {("t", i): i for i in range(1, n + 1)} | {("x", i): n + i for i in range(1, n + 1)}
    seq = [rank[g] for g in word]
    sign = 1
    for end in range(len(seq) - 1, 0, -1):
        for p in range(end):
            if seq[p] > seq[p + 1]:
                seq[p], seq[p + 1] = seq[p + 1], seq[p]
                sign = -sign
    if len(set(seq)) != len(seq):
        return Element.zero(n)
    theta = sum(1 << (v - 1) for v in seq if v <= n)
    xi = sum(1 << (v - n - 1) for v in seq if v > n)
    return Element(n, {(theta, xi): sign})


def random_key(rng, n):
    return rng.getrandbits(n), rng.getrandbits(n)


def random_element(rng, n, terms=3):
    return Element(n, {random_key(rng, n): rng.randint(-3, 3) for _ in range(terms)})


@pytest.fixture
def rng():
    return random.Random(20201018)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
