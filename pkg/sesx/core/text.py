"""Sentinel-terminated texts and deterministic corpus generators."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from sesx.errors import OutOfRange, SentinelCollision

SENTINEL = 0x00
MAX_THUE_MORSE_K = 24
MAX_FIBONACCI_K = 30

_MORPHISM = {ord("a"): b"ab", ord("b"): b"ba"}
_COMPLEMENT = bytes.maketrans(b"ab", b"ba")


@dataclass(frozen=True)
class Alphabet:
    """Distinct bytes of a text, sentinel included."""

    present: frozenset[int]

    @property
    def sigma(self) -> int:
        return len(self.present)


@dataclass(frozen=True)
class Text:
    """A byte string whose last byte is the sentinel.

    Positions are 1-based throughout: ``text[1]`` is the first byte and
    ``text[n]`` the sentinel.
    """

    data: bytes

    def __post_init__(self):
        if not self.data or self.data[-1] != SENTINEL:
            raise ValueError("text must end with the sentinel byte")
        if self.data.find(SENTINEL) != len(self.data) - 1:
            raise SentinelCollision(self.data.find(SENTINEL))

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def raw_len(self) -> int:
        return len(self.data) - 1

    @property
    def raw(self) -> bytes:
        return self.data[:-1]

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, pos: int) -> int:
        return self.data[pos - 1]

    def substring(self, start: int, length: int) -> bytes:
        """Return ``w[start..start+length-1]``."""
        return self.data[start - 1 : start - 1 + length]

    @cached_property
    def alphabet(self) -> Alphabet:
        return Alphabet(frozenset(self.data))

    @cached_property
    def codes(self) -> np.ndarray:
        return np.frombuffer(self.data, dtype=np.uint8)


def attach_sentinel(raw: bytes) -> Text:
    """Append the sentinel to ``raw``; reject inputs that already contain it."""
    offset = raw.find(SENTINEL)
    if offset != -1:
        raise SentinelCollision(offset)
    return Text(bytes(raw) + bytes([SENTINEL]))


def alphabet(text: Text) -> Alphabet:
    return text.alphabet


def apply_morphism(word: bytes) -> bytes:
    """One application of a -> ab, b -> ba."""
    return b"".join(_MORPHISM[c] for c in word)


def thue_morse(k: int) -> bytes:
    """Return the Thue-Morse word of order ``k`` (length 2^k)."""
    if not 0 <= k <= MAX_THUE_MORSE_K:
        raise OutOfRange(f"thue-morse order must be in [0, {MAX_THUE_MORSE_K}], got {k}")
    word = b"a"
    for _ in range(k):
        # mu^(j+1)(a) = mu^j(a) followed by its complement
        word = word + word.translate(_COMPLEMENT)
    return word


def fibonacci_word(k: int) -> bytes:
    """F_0 = b, F_1 = a, F_k = F_{k-1} F_{k-2}."""
    if not 0 <= k <= MAX_FIBONACCI_K:
        raise OutOfRange(f"fibonacci order must be in [0, {MAX_FIBONACCI_K}], got {k}")
    if k == 0:
        return b"b"
    prev, cur = b"b", b"a"
    for _ in range(k - 1):
        prev, cur = cur, cur + prev
    return cur


def random_text(length: int, sigma: int, seed: int) -> bytes:
    """Reproducible sentinel-free random text over ``sigma`` letters.

    Letters are ``a``, ``b``, ... for sigma <= 26 and bytes 1..sigma otherwise.
    """
    if length < 0:
        raise OutOfRange(f"length must be non-negative, got {length}")
    if not 1 <= sigma <= 255:
        raise OutOfRange(f"sigma must be in [1, 255], got {sigma}")
    first = ord("a") if sigma <= 26 else 1
    rng = np.random.default_rng(seed)
    letters = rng.integers(first, first + sigma, size=length, dtype=np.uint8)
    return letters.tobytes()
