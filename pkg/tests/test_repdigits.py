"""Repdigit divisibility conditions, the exponent grid, and zero probes."""
from __future__ import annotations

import random

import pytest

from permniven.numtheory import multiplicative_order, probable_prime
from permniven.repdigits import (
    CONJECTURE_PRIMES,
    DEFAULT_GRID_BOUNDS,
    DISTINGUISHED_PRIMES,
    ConjectureConstraints,
    FactoredK,
    exact_condition_sweep,
    modpow10,
    repdigit_niven_check,
    verify_conjecture_grid,
    zero_insertion_probe,
)

SWEEP_PREFIX = [1, 3, 9, 27, 81, 111, 243, 333, 729, 999, 2187, 2997]


def test_exact_condition_is_divisibility_of_the_repdigit():
    # a * R_k is Niven iff 10^k == 1 (mod 9k); a cancels out
    for a in (1, 3, 7):
        for k in range(1, 60):
            repdigit = int(str(a) * k)
            expected = repdigit % (a * k) == 0
            assert repdigit_niven_check(a, k).exact == expected, (a, k)


def test_strict_condition_first_diverges_at_a3_k3():
    # 333 is Niven, yet 10^3 = 28 (mod 81) breaks the 9ka form
    chk = repdigit_niven_check(3, 3)
    assert chk.exact and not chk.strict
    chk = repdigit_niven_check(1, 3)
    assert chk.exact and chk.strict
    # for a = 1 the two conditions coincide everywhere
    for k in range(1, 200):
        chk = repdigit_niven_check(1, k)
        assert chk.strict == chk.exact


def test_repdigit_check_validates_digit():
    with pytest.raises(ValueError):
        repdigit_niven_check(0, 3)
    with pytest.raises(ValueError):
        repdigit_niven_check(10, 3)


def test_modpow10_factored_matches_plain():
    rng = random.Random(43)
    for _ in range(150):
        exps = {
            name: rng.randrange(3)
            for name in ("n", "alpha", "beta", "gamma1", "delta1")
        }
        cons = ConjectureConstraints(**exps)
        fk = cons.factored_k()
        m = rng.randrange(2, 10**9)
        assert modpow10(fk, m) == pow(10, fk.value, m)


def test_modpow10_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        modpow10(3, 1)


def test_factored_k_value_and_guard():
    cons = ConjectureConstraints(n=2, alpha=1)
    fk = cons.factored_k()
    assert fk.value == 333
    assert fk.exponents() == cons
    huge = ConjectureConstraints(n=1000000)
    with pytest.raises(OverflowError):
        huge.factored_k().value
    assert huge.factored_k().bit_estimate > 10**6


def test_empty_exponents_mean_k_equals_one():
    fk = ConjectureConstraints().factored_k()
    assert fk.value == 1
    assert repdigit_niven_check(5, fk).exact  # 5 is divisible by 5


def test_ladder():
    assert ConjectureConstraints(n=1, alpha=2).satisfies_ladder()
    assert not ConjectureConstraints(alpha=1).satisfies_ladder()
    assert not ConjectureConstraints(n=1, beta=1).satisfies_ladder()
    assert not ConjectureConstraints(n=3, delta2=1).satisfies_ladder()
    assert ConjectureConstraints(n=4, delta2=1, gamma1=1).satisfies_ladder()
    with pytest.raises(ValueError):
        ConjectureConstraints(n=-1)


def test_conjecture_primes_are_prime_with_3_power_orders():
    for name, p in CONJECTURE_PRIMES.items():
        assert probable_prime(p).is_prime, name
        if name == "n":
            continue
        order = multiplicative_order(10, p)
        # the whole parameterization works because each order is a 3-power
        assert order in (1, 3, 9, 27, 81, 243), (name, order)


def test_grid_default_bounds_pass():
    report = verify_conjecture_grid()
    assert report.bounds == DEFAULT_GRID_BOUNDS
    assert report.all_ok
    assert report.skipped_over_cap == 0
    assert not report.failures()
    # both polarities are present
    verdicts = {e.expected for e in report.entries}
    assert verdicts == {True, False}
    negatives = [e for e in report.entries if not e.expected]
    assert len(negatives) == 9  # one minimal violation per non-n parameter
    assert all(not e.exact for e in negatives)


def test_grid_bit_cap_skips_and_reports():
    report = verify_conjecture_grid(
        ConjectureConstraints(n=6, alpha=2, beta=2), k_bit_cap=16
    )
    assert report.skipped_over_cap > 0
    assert all(e.modulus_bits <= 16 for e in report.entries if e.expected)


def test_sweep_prefix_and_completeness():
    assert exact_condition_sweep(3000) == SWEEP_PREFIX
    assert len(exact_condition_sweep(10**5)) == 25
    # brute comparison over a modest window
    brute = [k for k in range(1, 1200) if pow(10, k, 9 * k) == 1]
    assert exact_condition_sweep(1199) == brute


def test_sweep_members_satisfy_the_ladder_parameterization():
    primes = set(CONJECTURE_PRIMES.values())
    for k in exact_condition_sweep(10**4):
        rest = k
        for p in primes:
            while rest % p == 0:
                rest //= p
        assert rest == 1, k  # no factor outside the conjecture's primes


def test_zero_insertion_probe_mechanics():
    probe = zero_insertion_probe("18", 1, 2)
    assert probe.modified == "1008"
    assert probe.residue == 1008 % 9
    probe = zero_insertion_probe("18", 0, 1)
    assert probe.modified == "180"
    assert probe.is_niven
    with pytest.raises(ValueError):
        zero_insertion_probe("18", 3, 1)
    with pytest.raises(ValueError):
        zero_insertion_probe("18", 1, 0)


def test_zero_insertion_known_residues():
    assert zero_insertion_probe("1_(27)", 1, 1).residue == 18
    assert zero_insertion_probe("1_(81)", 1, 1).residue == 72
    assert zero_insertion_probe("1_(111)", 1, 1).residue == 102
    assert zero_insertion_probe("1_(111)", 1, 2).residue == 12


def test_distinguished_list_shape():
    assert len(DISTINGUISHED_PRIMES) == 33
    assert len(set(DISTINGUISHED_PRIMES)) == 33
