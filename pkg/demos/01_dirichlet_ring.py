"""Tour of the exact Dirichlet-polynomial ring.

Run:  python demos/01_dirichlet_ring.py
"""

from pzeta import (
    DirichletPolynomial,
    RationalSeries,
    divide_exact,
    power_shift,
    prime_projection,
    truncated_product,
)

D = DirichletPolynomial

# Indices multiply, so products are Dirichlet convolutions.
p = D({1: 1, 2: -1})          # 1 - 1/2^s
q = D({1: 1, 3: -3})          # 1 - 3/3^s
print("p        =", p)
print("q        =", q)
print("p * q    =", p * q)
print("p + q    =", p + q)

# Division is exact or it refuses: here the quotient recovers q.
print("(p*q)/p  =", divide_exact(p * q, p))

# Deleting all terms with index divisible by 3 is a ring map.
print("drop 3s  :", prime_projection(p * q, {3}), "==", prime_projection(p, {3}) * prime_projection(q, {3}))

# The substitution s -> r*s - r + 1 sends a/m^s to a*m^(r-1)/(m^r)^s.
print("shift r=2:", power_shift(D({1: 1, 6: -6}), 2))

# Products of many factors, windowed: exact for every index <= bound.
factors = [D({1: 1, 5**i: -1}) for i in range(1, 11)]
print("window   :", truncated_product(factors, 125))

# Formal quotients with unit constant denominator expand integrally.
geometric = RationalSeries(D.one(), D({1: 1, 2: -1}))
print("1/(1-2^-s) up to 16:", geometric.expand(16))
