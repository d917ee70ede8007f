"""
Terminating hypergeometric series
=================================

Exact evaluation, and two classical identities checked on concrete parameters.
"""

from fractions import Fraction as F

from aperylike.hypergeom import (
    ParameterPoleError,
    check_pfaff_saalschutz,
    hyp,
    pfaff_saalschutz_sides,
    terminating_pfq,
    transform_357_sides,
)

half = F(1, 2)
print(terminating_pfq(hyp([half, half, -2], [1, 1])))  # 41/64

# a balanced 3F2 summed in closed form
lhs, rhs = pfaff_saalschutz_sides(4, F(2, 3), F(-1, 5), F(7, 2))
print(lhs, rhs, lhs == rhs)

# a transformation between two terminating 3F2s
print(transform_357_sides(2, 3, 3, 1, 1))

# a vanishing lower Pochhammer makes the identity ill-posed, not false
try:
    check_pfaff_saalschutz(2, 1, 1, 0)
except ParameterPoleError as exc:
    print("rejected:", exc)
