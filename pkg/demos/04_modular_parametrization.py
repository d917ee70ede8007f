"""
Eta quotients and the modular parametrization
=============================================

With t = 16 eta(z)^8 eta(4z)^16 / eta(2z)^24 the generating function of J2
is itself an eta quotient in q.
"""

from aperylike.etaseries import (
    J2_QUOTIENT,
    eta_quotient_series,
    parametrization_sides,
    t_series,
    verify_parametrization,
)

# Ramanujan's Delta: q - 24 q^2 + 252 q^3 - ...
print([int(c) for c in eta_quotient_series([(1, 24)], 6).coeffs])

t = t_series(8)
print("t =", [int(c) for c in t.coeffs])
print("net q-power of the left side:", J2_QUOTIENT.net_power())

lhs, rhs = parametrization_sides(12)
print([int(c) for c in lhs.coeffs])
print([int(c) for c in rhs.coeffs])

# both sides are integral power series and agree through q^30
print(verify_parametrization(30))
