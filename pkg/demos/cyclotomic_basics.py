"""
Cyclotomic polynomials with exact integer coefficients
======================================================

"""

from torsionkit import IntPoly, cyclotomic, divisors, totient

# The first few cyclotomic polynomials, printed low degree first.
for n in range(1, 13):
    print(f"gamma_{n} = {cyclotomic(n)!r}")

# Their degrees are Euler totients.
print()
print("degrees:", [cyclotomic(n).degree for n in range(1, 13)])
print("totients:", [totient(n) for n in range(1, 13)])

# The defining identity: the product over divisors of m recovers z^m - 1.
m = 12
product = IntPoly.one()
for j in divisors(m):
    product = product * cyclotomic(j)
print()
print(f"divisors of {m}:", divisors(m))
print(f"product of gamma_j over j | {m}:", product)
print(f"z^{m} - 1:                      ", IntPoly.cyclic(m))
assert product == IntPoly.cyclic(m)

# gamma_105 is the first with a coefficient outside {-1, 0, 1}.
g = cyclotomic(105)
print()
print("largest |coefficient| of gamma_105:", max(abs(c) for c in g.coeffs))
