"""
Torsion as a matrix power problem
=================================

Given M of order d, build the pair

    A = blockdiag(M^d, N)      N = [[0,1],[0,0]]
    B = blockdiag(M^d, 0)

Then A^n = B has a solution n exactly when M is torsion, and any
solution forces n >= 2 because A^0 = I and A^1 still carries N.
"""

from fractions import Fraction

from torsionkit import (
    RatMatrix,
    build_mpp_instance,
    search_matrix_power,
    torsion_certificate,
)

rotation = RatMatrix([[0, -1], [1, 0]])
inst = build_mpp_instance(rotation)
print("A =", inst.a.to_data())
print("B =", inst.b.to_data())

n = search_matrix_power(inst.a, inst.b, 50)
print("least n with A^n = B:", n)
# A^n = B needs n >= 2 to kill N and d(n - 1) = 0 mod period to line up
# the M block: here 2(n - 1) = 0 mod 4, so the least candidate is n = 3.
assert n == 3

# The search is bounded for torsion inputs: 4*period + 4 always suffices.
cert = torsion_certificate(rotation)
assert n <= 4 * cert.period + 4

# A non-torsion input gives an instance with no solution at all.
shrink = rotation.scaled(Fraction(1, 2))
inst = build_mpp_instance(shrink)
print("half rotation, n <= 50:", search_matrix_power(inst.a, inst.b, 50))
