"""
Certificates are checkable without trusting the decider
=======================================================

A torsion certificate names a preperiod k and cyclotomic indices J.
The verifier rebuilds z^k * prod gamma_j from scratch, checks it kills
the matrix, and confirms the claimed period. Any tampering is caught
with a reason.
"""

import dataclasses

from torsionkit import (
    RatMatrix,
    TorsionCertificate,
    torsion_certificate,
    verify_certificate,
)

# Order-6 example: companion matrix of gamma_6 = z^2 - z + 1.
m = RatMatrix([[0, -1], [1, 1]])
cert = torsion_certificate(m)
print("certificate:", cert.to_data())

outcome = verify_certificate(m, cert)
print("honest verify:", bool(outcome), outcome.reason)

# Round trip through the JSON document form.
again = TorsionCertificate.from_data(cert.to_data())
assert again == cert
assert verify_certificate(m, again)

# Now lie about the period.
lied = dataclasses.replace(cert, period=3)
outcome = verify_certificate(m, lied)
print("period 3 instead of 6:", bool(outcome), repr(outcome.reason))

# Lie about which cyclotomic factors appear. J={3} also gives
# degree 2, but gamma_3 does not annihilate this matrix.
wrong_factors = dataclasses.replace(cert, J=frozenset({3}), period=3)
outcome = verify_certificate(m, wrong_factors)
print("J={3} instead of {6}:", bool(outcome), repr(outcome.reason))

# Claim a preperiod that mu's own coefficients contradict.
padded = dataclasses.replace(cert, preperiod=1, k=1)
outcome = verify_certificate(m, padded)
print("preperiod 1 instead of 0:", bool(outcome), repr(outcome.reason))
