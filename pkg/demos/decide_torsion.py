"""
Deciding whether a rational matrix has two equal powers
=======================================================

M is torsion when M^p = M^q for some p != q.  The decision never
iterates powers: it computes the minimal polynomial and factors out
z and cyclotomic pieces.
"""

from fractions import Fraction

from torsionkit import RatMatrix, mat_pow, torsion_certificate

# A quarter rotation. Its fourth power is the identity.
rotation = RatMatrix([[0, -1], [1, 0]])
cert = torsion_certificate(rotation)
print("rotation:", cert.to_data())
assert mat_pow(rotation, 1) == mat_pow(rotation, 1 + cert.period)

# A nilpotent matrix is torsion too: N^2 = N^3 = 0.
nilpotent = RatMatrix([[0, 1], [0, 0]])
print("nilpotent:", torsion_certificate(nilpotent).to_data())

# Scale the rotation by 1/2 and powers shrink forever: never torsion.
shrinking = rotation.scaled(Fraction(1, 2))
print("half rotation:", torsion_certificate(shrinking).to_data())

# A shear has infinite order even with integer entries.
shear = RatMatrix([[1, 1], [0, 1]])
print("shear:", torsion_certificate(shear).to_data())

# Mixing a torsion block with a nilpotent block gives preperiod 2
# (the nilpotent part needs two steps to die), and the period comes
# from the rotation alone.
mixed = RatMatrix(
    [
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ]
)
cert = torsion_certificate(mixed)
print("rotation + nilpotent:", cert.to_data())
k, P = cert.preperiod, cert.period
assert mat_pow(mixed, k) == mat_pow(mixed, k + P)
assert mat_pow(mixed, k - 1) != mat_pow(mixed, k - 1 + P)  # k is sharp
print(f"first repeat: M^{k} = M^{k + P}, and M^{k - 1} != M^{k - 1 + P}")
