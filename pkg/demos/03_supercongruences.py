"""
Supercongruences mod p^3
========================

The sum of J2(k)^2 over a full residue system is (-1)^((p-1)/2) modulo p^3.
"""

from aperylike import primes_in
from aperylike.congruences import verify_generalization, verify_main2, verify_morley

for p in primes_in(3, 30):
    r = verify_main2(p)
    v = r.verdicts[0]
    print(f"p={p:2d}  v_p(lhs - rhs) = {v.diff_valuation}  needed {v.exponent}")

# p = 3 by hand: 1 + 9/16 + 1681/4096 = 8081/4096 and 8081/4096 = 26 mod 27
print(verify_main2(3).verdicts[0].lhs)

# Morley's congruence, one of the ingredients
print(verify_morley(7))

# the mod p^(3r) version for r = 2 is only observed, so it is flagged conjectural
r = verify_generalization(5, 2)
print(r.conjectural, r.status, r.verdicts[0].diff_valuation)
