"""
Two independent routes to the squarefree torsion annihilator pi_n
=================================================================

pi_n is the squarefree part of nu_n = prod_{j<=n} (z^j - 1).  One route
multiplies the distinct cyclotomic factors directly; the other never
factors anything and just divides nu_n by gcd(nu_n, nu_n').
"""

import time

from torsionkit import int_gcd, nu_poly, pi_poly_gcd, pi_poly_product, totient

n = 24

t0 = time.perf_counter()
via_product = pi_poly_product(n)
t_product = time.perf_counter() - t0

t0 = time.perf_counter()
via_gcd = pi_poly_gcd(n)
t_gcd = time.perf_counter() - t0

assert via_product == via_gcd
print(f"pi_{n} degree: {via_product.degree}")
print(f"  sum of totients 1..{n}: {sum(totient(j) for j in range(1, n + 1))}")
print(f"  product route: {t_product * 1000:.1f} ms")
print(f"  gcd route:     {t_gcd * 1000:.1f} ms")

# nu_n itself is enormously bigger: degree n(n+1)/2 with huge repeated factors.
nu = nu_poly(n)
print(f"nu_{n} degree: {nu.degree}  (pi_{n} keeps each factor once)")

# Squarefreeness, checked the honest way.
assert int_gcd(via_gcd, via_gcd.derivative()).degree == 0
print(f"gcd(pi_{n}, pi_{n}') is constant: pi_{n} is squarefree")

# The product route stays fast because cyclotomic factors are small and
# cached; the gcd route pays for a remainder sequence on nu_n itself.
# Its value is independence: it never factors, so it cross-checks the
# factor table.
for m in (28, 32):
    t0 = time.perf_counter()
    a = pi_poly_product(m)
    tp = time.perf_counter() - t0
    t0 = time.perf_counter()
    b = pi_poly_gcd(m)
    tg = time.perf_counter() - t0
    assert a == b
    print(f"n={m}: product {tp * 1000:6.1f} ms   gcd {tg * 1000:6.1f} ms   degree {a.degree}")
