"""Deterministic corpora shared by the test modules."""

import itertools

import numpy as np

from sesx.core.ses import Ses
from sesx.core.text import random_text


def binary_strings(max_len: int):
    """Every word over {a, b} of length 1..max_len."""
    for length in range(1, max_len + 1):
        for letters in itertools.product(b"ab", repeat=length):
            yield bytes(letters)


def random_corpus(count: int, max_len: int, sigmas, seed: int = 0):
    """Seeded random words with lengths in [1, max_len], cycling through ``sigmas``."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        sigma = sigmas[k % len(sigmas)]
        length = int(rng.integers(1, max_len + 1))
        yield random_text(length, sigma, seed=int(rng.integers(0, 2**31)))


def random_system(rng: np.random.Generator, max_n: int = 120, max_eq: int = 60) -> Ses:
    """A valid system over {a, b} with random equations and a few pins."""
    a, b = ord("a"), ord("b")
    n = int(rng.integers(1, max_n + 1))
    equations = []
    for _ in range(int(rng.integers(0, max_eq + 1))):
        i, j = (int(x) for x in rng.integers(1, n + 1, size=2))
        length = int(rng.integers(1, n - max(i, j) + 2))
        equations.append((i, j, length))
    pins = {(int(rng.integers(1, n + 1)), int(rng.choice([a, b]))) for _ in range(int(rng.integers(0, 8)))}
    return Ses(n, tuple(equations), tuple(sorted(pins)))
