"""A first walk: what makes 2448 special, and 13 ordinary.

A permutation-invariant Niven number (PINN) stays divisible by its digit
sum no matter how its digits are shuffled (leading zeros drop away).  The
library treats all rearrangements of one digit multiset as a single
object, so checking a number means checking its whole orbit at once.
"""
from permniven import (
    DigitMultiset,
    is_pinn_bruteforce,
    is_pinn_criterion,
    orbit,
    parse_number,
)

m = DigitMultiset.from_string("2448")
print(f"multiset {m.canonical}: digit sum {m.digit_sum}, orbit size {m.orbit_size}")
print("the orbit:", ", ".join(orbit(m)))

ok, proof = is_pinn_bruteforce(m)
print(f"\nbrute force verdict: {ok}")
print(f"quotients by {m.digit_sum}:", proof.quotients)

# The congruence criterion reaches the same verdict without touching a
# single permutation; for wide numbers it is the only affordable route.
ok, proof = is_pinn_criterion(m)
print(f"\ncriterion verdict: {ok}")
print(f"digit pairs checked: {proof.digit_pairs_checked}")
print(f"position gaps checked: {proof.position_gaps_checked}")

bad = DigitMultiset.from_string("13")
ok, witness = is_pinn_bruteforce(bad)
print(f"\n13 is a PINN: {ok}")
print(f"witness: {witness.permutation} leaves remainder {witness.residue} mod 4")

# Rep-block notation abbreviates long runs: 1_(26)01 is 26 ones then 01.
wide = DigitMultiset.from_string(parse_number("1_(26)01"))
print(f"\n1_(26)01 has {wide.k} digits, digit sum {wide.digit_sum},")
print(f"orbit size {wide.orbit_size}, criterion verdict {is_pinn_criterion(wide)[0]}")
