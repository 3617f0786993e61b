"""Digit-level data model.

Numbers are handled as digit sequences and digit multisets, never as machine
integers: divisibility checks stream residues digit by digit, so lengths far
beyond 64-bit value range are fine.  A digit string is an ordinary ``str`` of
characters ``0``..``9``, most significant digit first.  A digit multiset is
the order-free content of such a string and is the identity that matters for
permutation-invariance questions.

Rep-block notation compresses runs: ``1_(26)01`` means twenty-six ones
followed by ``01``.  Runs of three or more render in block form, shorter
runs stay literal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb, factorial

__all__ = [
    "DigitMultiset",
    "compress",
    "digit_sum_of",
    "expand",
    "normalize",
    "parse_number",
    "value_mod",
]

_BLOCK_RE = re.compile(r"(\d)(?:_\((\d+)\))?")


def _check_digit_string(s: str) -> None:
    if not s or not s.isdigit():
        raise ValueError(f"not a digit string: {s!r}")


def normalize(s: str) -> str:
    """Strip leading zeros; value and digit sum are unchanged.

    All-zero strings are rejected: every number here is positive.
    """
    _check_digit_string(s)
    t = s.lstrip("0")
    if not t:
        raise ValueError("all-zero digit string has no value")
    return t


def digit_sum_of(s: str) -> int:
    _check_digit_string(s)
    return sum(map(int, s))


def value_mod(s: str, m: int) -> int:
    """Numeric value of the digit string reduced mod m, by Horner streaming.

    Leading zeros contribute nothing, so no normalization is needed first.
    """
    _check_digit_string(s)
    if m < 1:
        raise ValueError("modulus must be positive")
    r = 0
    for ch in s:
        r = (r * 10 + (ord(ch) - 48)) % m
    return r


# --- rep-block notation -----------------------------------------------------

def expand(blocks: tuple[tuple[int, int], ...]) -> str:
    """Expand ((digit, repeat), ...) to a digit string."""
    if not blocks:
        raise ValueError("empty block form")
    out = []
    for d, n in blocks:
        if not 0 <= d <= 9:
            raise ValueError(f"digit out of range: {d}")
        if n < 1:
            raise ValueError(f"repeat count must be positive: {n}")
        out.append(str(d) * n)
    return "".join(out)


def compress(s: str) -> tuple[tuple[int, int], ...]:
    """Inverse of expand: canonical run-length blocks (adjacent digits differ)."""
    _check_digit_string(s)
    blocks: list[tuple[int, int]] = []
    for ch in s:
        d = int(ch)
        if blocks and blocks[-1][0] == d:
            blocks[-1] = (d, blocks[-1][1] + 1)
        else:
            blocks.append((d, 1))
    return tuple(blocks)


def parse_number(text: str) -> str:
    """Parse plain digits or rep-block notation into a digit string.

    Grammar: block := digit ["_(" count ")"]; string := block+.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty number")
    pos = 0
    blocks: list[tuple[int, int]] = []
    while pos < len(text):
        m = _BLOCK_RE.match(text, pos)
        if not m:
            raise ValueError(f"bad rep-block syntax at {text[pos:]!r}")
        d = int(m.group(1))
        n = int(m.group(2)) if m.group(2) else 1
        if n < 1:
            raise ValueError("zero repeat count")
        blocks.append((d, n))
        pos = m.end()
    return expand(tuple(blocks))


def format_number(s: str, min_run: int = 3) -> str:
    """Render a digit string with runs of min_run or more as d_(n)."""
    parts = []
    for d, n in compress(s):
        parts.append(f"{d}_({n})" if n >= min_run else str(d) * n)
    return "".join(parts)


# --- multisets ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class DigitMultiset:
    """Counts of digits 0..9; at least one nonzero digit must be present."""

    counts: tuple[int, int, int, int, int, int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.counts) != 10 or any(c < 0 for c in self.counts):
            raise ValueError("counts must be 10 non-negative integers")
        if sum(self.counts[1:]) == 0:
            raise ValueError("all-zero multiset rejected")

    @classmethod
    def from_digits(cls, digits) -> DigitMultiset:
        counts = [0] * 10
        for d in digits:
            counts[int(d)] += 1
        return cls(tuple(counts))

    @classmethod
    def from_string(cls, s: str) -> DigitMultiset:
        _check_digit_string(s)
        return cls.from_digits(map(int, s))

    @property
    def k(self) -> int:
        return sum(self.counts)

    @property
    def digit_sum(self) -> int:
        return sum(d * c for d, c in enumerate(self.counts))

    @property
    def canonical(self) -> str:
        """Digits sorted descending: the largest arrangement, never zero-led."""
        return "".join(str(d) * self.counts[d] for d in range(9, -1, -1))

    @property
    def orbit_size(self) -> int:
        n = factorial(self.k)
        for c in self.counts:
            n //= factorial(c)
        return n

    @property
    def present_digits(self) -> tuple[int, ...]:
        return tuple(d for d in range(10) if self.counts[d])

    @property
    def is_repdigit(self) -> bool:
        return sum(1 for c in self.counts if c) == 1

    def with_zeros(self, extra: int) -> DigitMultiset:
        if extra < 0:
            raise ValueError("zero count must be non-negative")
        counts = list(self.counts)
        counts[0] += extra
        return DigitMultiset(tuple(counts))

    def nonzero_part(self) -> DigitMultiset:
        return DigitMultiset((0,) + self.counts[1:])

    def __str__(self) -> str:
        return self.canonical


def digit_sum(m: DigitMultiset) -> int:
    return m.digit_sum


def multiset_count(k: int, allow_zero: bool = True) -> int:
    """Number of k-digit multisets naming a positive number.

    C(k+9,9) minus the all-zero multiset, or C(k+8,8) when zero is
    excluded entirely.
    """
    return comb(k + 9, 9) - 1 if allow_zero else comb(k + 8, 8)
