"""Repdigit Niven machinery.

A repdigit a_(k) is Niven iff 10^k == 1 (mod 9k): writing a_(k) as
a(10^k - 1)/9, divisibility by the digit sum ka reduces to k | R_k, which
is the displayed congruence and does not involve a.  The widely stated
condition with modulus 9ka ("strict" below) is sufficient but not
necessary; both are computed side by side so the gap stays visible
(first divergence: a=3, k=3, where 333 is Niven yet 10^3 mod 81 = 28).

The solution grid: exponent tuples (n, alpha, beta, gamma1, gamma2,
delta1..delta5) build k = 3^n * m0^alpha * ... with each parameter's prime
chosen so its power of 10 has multiplicative order an exact power of 3;
the ladder constraints (n >= 1 when alpha > 0, and so on) are exactly what
makes ord(10, 9k) divide k.  verify_conjecture_grid checks both
directions: ladder-satisfying tuples must pass the exact condition,
minimal ladder violations must fail it.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, fields
from itertools import product
from typing import NamedTuple

from .digits import digit_sum_of, parse_number, value_mod

__all__ = [
    "CONJECTURE_PRIMES",
    "DISTINGUISHED_PRIMES",
    "ConjectureConstraints",
    "FactoredK",
    "GridEntry",
    "GridReport",
    "RepdigitCheck",
    "ZeroInsertionProbe",
    "exact_condition_sweep",
    "modpow10",
    "repdigit_niven_check",
    "verify_conjecture_grid",
    "zero_insertion_probe",
]

# Parameter -> prime.  Each prime p at ladder level j satisfies
# ord_p(10) = 3^j exactly, which is what the minimal-index constraints
# encode.  Note delta2: the order-81 requirement pins 9397 (the frequently
# quoted 9937 is 19 * 523, composite, and its order is not a power of 3).
CONJECTURE_PRIMES: dict[str, int] = {
    "n": 3,
    "alpha": 37,
    "beta": 333667,
    "gamma1": 757,
    "gamma2": 440334654777631,
    "delta1": 163,
    "delta2": 9397,
    "delta3": 2462401,
    "delta4": 676421558270641,
    "delta5": 130654897808007778425046117,
}

# Minimum n required before each parameter may be nonzero.
_LADDER: dict[str, int] = {
    "alpha": 1,
    "beta": 2,
    "gamma1": 3,
    "gamma2": 3,
    "delta1": 4,
    "delta2": 4,
    "delta3": 4,
    "delta4": 4,
    "delta5": 4,
}

_MATERIALIZE_BIT_GUARD = 2**20

# Primes reported among repdigit-PINN divisors, as printed.  The test
# suite runs every entry through probable_prime; composite entries are a
# finding, not a data error, and stay in the list.
DISTINGUISHED_PRIMES: tuple[int, ...] = (
    3, 37, 163, 757, 1999, 8803, 9397, 13627, 15649, 231643, 313471,
    333667, 338293, 1014877, 1056241, 1168711, 2028119, 2064529, 2462401,
    2558791, 4448359, 9438277, 34720813, 86455449, 104620573, 127020961,
    178064569, 247629013, 618846643, 440334654777631, 676421558270641,
    2212394296770203368013, 130654897808007778425046117,
)


@dataclass(frozen=True, slots=True)
class FactoredK:
    """An exponent k held in factored form, usable without materializing."""

    factors: tuple[tuple[int, int], ...]  # (prime, multiplicity)

    def __post_init__(self) -> None:
        for p, e in self.factors:
            if p < 2 or e < 0:
                raise ValueError(f"bad factor ({p}, {e})")

    @property
    def bit_estimate(self) -> int:
        return sum(e * p.bit_length() for p, e in self.factors) + 1

    @property
    def value(self) -> int:
        if self.bit_estimate > _MATERIALIZE_BIT_GUARD:
            raise OverflowError("k too large to materialize; keep it factored")
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v

    def exponents(self) -> ConjectureConstraints:
        """Recover the grid exponent tuple; rejects foreign primes."""
        by_prime = {p: name for name, p in CONJECTURE_PRIMES.items()}
        kwargs: dict[str, int] = {}
        for p, e in self.factors:
            if p not in by_prime:
                raise ValueError(f"{p} is not a grid prime")
            if e:
                kwargs[by_prime[p]] = kwargs.get(by_prime[p], 0) + e
        return ConjectureConstraints(**kwargs)


@dataclass(frozen=True, slots=True)
class ConjectureConstraints:
    """Grid exponent tuple with the minimal-index ladder."""

    n: int = 0
    alpha: int = 0
    beta: int = 0
    gamma1: int = 0
    gamma2: int = 0
    delta1: int = 0
    delta2: int = 0
    delta3: int = 0
    delta4: int = 0
    delta5: int = 0

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ValueError("exponents are non-negative")

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def satisfies_ladder(self) -> bool:
        return all(
            getattr(self, name) == 0 or self.n >= floor_n
            for name, floor_n in _LADDER.items()
        )

    def factored_k(self) -> FactoredK:
        factors = tuple(
            (CONJECTURE_PRIMES[f.name], getattr(self, f.name))
            for f in fields(self)
            if getattr(self, f.name)
        )
        return FactoredK(factors=factors or ((3, 0),))


def modpow10(k: FactoredK | int, m: int) -> int:
    """10^k mod m, applying factored exponents factor by factor."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if isinstance(k, int):
        if k < 0:
            raise ValueError("exponent must be non-negative")
        return pow(10, k, m)
    r = 10 % m
    for p, e in k.factors:
        r = pow(r, p**e, m)
    return r


class RepdigitCheck(NamedTuple):
    strict: bool  # 10^k == 1 (mod 9ka), the commonly quoted form
    exact: bool  # 10^k == 1 (mod 9k), necessary and sufficient


def repdigit_niven_check(a: int, k: FactoredK | int) -> RepdigitCheck:
    """Is the k-digit repdigit of a a Niven number?  Both conditions."""
    if not 1 <= a <= 9:
        raise ValueError("digit a must be 1..9")
    kv = k.value if isinstance(k, FactoredK) else k
    if kv < 1:
        raise ValueError("k must be >= 1")
    return RepdigitCheck(
        strict=modpow10(k, 9 * kv * a) == 1,
        exact=modpow10(k, 9 * kv) == 1,
    )


# --- the solution grid ------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class GridEntry:
    exponents: ConjectureConstraints
    modulus_bits: int  # bit length of 9k
    exact: bool
    expected: bool


@dataclass(frozen=True, slots=True)
class GridReport:
    bounds: ConjectureConstraints
    bit_cap: int
    entries: tuple[GridEntry, ...]
    skipped_over_cap: int
    elapsed: float

    @property
    def all_ok(self) -> bool:
        return all(e.exact == e.expected for e in self.entries)

    def failures(self) -> list[GridEntry]:
        return [e for e in self.entries if e.exact != e.expected]


DEFAULT_GRID_BOUNDS = ConjectureConstraints(
    n=6, alpha=2, beta=2, gamma1=1, gamma2=1,
    delta1=1, delta2=1, delta3=1, delta4=1, delta5=1,
)


def _minimal_violations() -> list[ConjectureConstraints]:
    return [
        ConjectureConstraints(n=floor_n - 1, **{name: 1})
        for name, floor_n in _LADDER.items()
    ]


def verify_conjecture_grid(
    bounds: ConjectureConstraints | None = None, k_bit_cap: int = 4096
) -> GridReport:
    """Sweep the exponent grid within bounds.

    Ladder-satisfying tuples must pass the exact condition; the minimal
    ladder violations (n one below each parameter's floor) must fail it.
    Tuples whose modulus exceeds the bit cap are counted as skipped, never
    passed silently.
    """
    if bounds is None:
        bounds = DEFAULT_GRID_BOUNDS
    t0 = time.monotonic()
    entries = []
    skipped = 0
    ranges = [range(getattr(bounds, f.name) + 1) for f in fields(bounds)]
    names = [f.name for f in fields(bounds)]
    for combo in product(*ranges):
        exp = ConjectureConstraints(**dict(zip(names, combo)))
        if not exp.satisfies_ladder():
            continue
        fk = exp.factored_k()
        if fk.bit_estimate + 4 > k_bit_cap:
            skipped += 1
            continue
        m = 9 * fk.value
        if m.bit_length() > k_bit_cap:
            skipped += 1
            continue
        entries.append(
            GridEntry(
                exponents=exp,
                modulus_bits=m.bit_length(),
                exact=modpow10(fk, m) == 1,
                expected=True,
            )
        )
    for exp in _minimal_violations():
        fk = exp.factored_k()
        m = 9 * fk.value
        entries.append(
            GridEntry(
                exponents=exp,
                modulus_bits=m.bit_length(),
                exact=modpow10(fk, m) == 1,
                expected=False,
            )
        )
    return GridReport(
        bounds=bounds,
        bit_cap=k_bit_cap,
        entries=tuple(entries),
        skipped_over_cap=skipped,
        elapsed=time.monotonic() - t0,
    )


def exact_condition_sweep(limit: int) -> list[int]:
    """All k <= limit with 10^k == 1 (mod 9k), by direct scan."""
    return [k for k in range(1, limit + 1) if pow(10, k, 9 * k) == 1]


# --- zero insertion ---------------------------------------------------------------

class ZeroInsertionProbe(NamedTuple):
    modified: str  # digit string after insertion
    residue: int  # value of the modified string mod the original digit sum
    is_niven: bool


def zero_insertion_probe(base: str, position: int, zeros: int) -> ZeroInsertionProbe:
    """Insert zeros into a number `position` digits before its end.

    The residue is taken modulo the base's digit sum, which the inserted
    zeros leave unchanged, so is_niven is simply residue == 0.
    """
    digits = parse_number(base)
    if not 0 <= position <= len(digits):
        raise ValueError(f"position must be 0..{len(digits)}")
    if zeros < 1:
        raise ValueError("insert at least one zero")
    cut = len(digits) - position
    modified = digits[:cut] + "0" * zeros + digits[cut:]
    residue = value_mod(modified, digit_sum_of(digits))
    return ZeroInsertionProbe(
        modified=modified, residue=residue, is_niven=residue == 0
    )
