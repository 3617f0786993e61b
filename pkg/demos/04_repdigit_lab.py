"""Repdigits: when is a block of equal digits divisible by its digit sum?

The repdigit a repeated k times is Niven exactly when 10^k = 1 (mod 9k);
the repeated digit cancels out.  A stricter variant with modulus 9ka
looks plausible but already fails at a=3, k=3.  The widths satisfying
the exact condition have a striking multiplicative structure, explored
here through a parameterized exponent grid.
"""
from permniven import (
    CONJECTURE_PRIMES,
    ConjectureConstraints,
    exact_condition_sweep,
    multiplicative_order,
    repdigit_niven_check,
    verify_conjecture_grid,
)

print("a=3, k=3: is 333 divisible by 9?", 333 % 9 == 0)
chk = repdigit_niven_check(3, 3)
print(f"exact condition: {chk.exact}, strict 9ka variant: {chk.strict}")

print("\nwidths k <= 10^4 with 10^k = 1 (mod 9k):")
print(" ", exact_condition_sweep(10**4))

print("\nprime building blocks and their orders of 10:")
for name, p in CONJECTURE_PRIMES.items():
    if name == "n":
        print(f"  {name}: 3 (the base of the tower)")
        continue
    print(f"  {name}: {p}, ord(10) = {multiplicative_order(10, p)}")

# Each parameter needs enough powers of three in k before it can appear;
# the grid checks every admissible exponent tuple inside the bounds and
# also confirms that the minimal inadmissible ones genuinely fail.
report = verify_conjecture_grid()
print(
    f"\ngrid: {len(report.entries)} exponent tuples, all consistent: {report.all_ok}, "
    f"{report.skipped_over_cap} skipped over the {report.bit_cap}-bit cap"
)

# Moduli too large to materialize are still checked modularly: k is kept
# in factored form and 10^k mod m costs one pow per prime power.
huge = ConjectureConstraints(n=5, alpha=2, beta=1, gamma1=1, delta3=1)
fk = huge.factored_k()
print(f"\nk with {fk.bit_estimate} bits handled without materializing:",
      repdigit_niven_check(1, fk).exact)
