"""Ten families that never run out: zero padding preserves the property.

Each family is a fixed zero-free digit core plus as many zeros as the
target width needs.  Adding a zero multiplies every permutation's value
by a power of ten without touching the digit sum, so membership survives
padding; the families therefore produce PINNs at every width past their
minimum.
"""
from permniven import (
    TEMPLATES,
    instantiate,
    kb_witness_check,
    template,
    verify_family,
    zero_augmentation_property,
)

print("family  min_k  members  sample member at k=14")
for tpl in TEMPLATES:
    inst = instantiate(tpl, 14)
    sample = inst.members[0].canonical
    print(f"{tpl.id:6}  {tpl.min_k:5}  {len(inst.members):7}  {sample}")

# Every member re-proves at an arbitrary width; small orbits are also
# ground through the brute-force oracle.
inst = instantiate(template("ke"), 20)
results = verify_family(inst)
print(f"\nke at k=20: {sum(ok for _, ok, _ in results)}/{len(results)} verified")

# The kb family comes with explicit quotient witnesses: each member is
# its digit sum times a single digit shifted by trailing zeros.
print("kb witness identity holds for k=3..50:",
      all(kb_witness_check(k) for k in range(3, 51)))

# Padding members of one width into a larger width lands inside the
# larger instantiation and re-verifies.
print("padding k=10 members to k=13 stays in-family:",
      zero_augmentation_property(10, 13))
