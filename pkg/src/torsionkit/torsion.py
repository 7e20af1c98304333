"""Deciding whether some two distinct powers of a rational matrix coincide.

A square rational matrix M is called torsion when M^p = M^q for some p != q.
Three independent routes are implemented:

* an annihilation test: M is torsion iff it annihilates z**d * pi_n(z),
  where d is the order and n is large enough that phi(m) > d for m > n;
* a certificate method (the default): factor the minimal polynomial as
  z**k times distinct cyclotomics; torsion iff the factorization is exact,
  and the factor indices give the preperiod and eventual period directly;
* brute-force cycle detection over successive powers, used as an oracle.

They must always agree; the certificate is independently checkable by
:func:`verify_certificate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalConsistencyError
from .matrices import RatMatrix, horner_matrix_eval, mat_mul, mat_pow, minimal_polynomial
from .numbertheory import cyclotomic, pi_poly_product, torsion_bound, totient
from .polynomials import RatPoly


@dataclass(frozen=True, slots=True)
class TorsionCertificate:
    """Verdict plus the data needed to re-check it from scratch.

    For a torsion matrix, ``mu`` (the minimal polynomial) factors exactly as
    z**k times the cyclotomics with indices in J; then the power sequence
    M, M^2, ... enters its cycle at exponent max(k, 1) and the eventual
    period is lcm(J), with lcm of the empty set taken as 1 (nilpotent
    matrices have a constant tail). ``preperiod`` repeats k under the
    convention that exponents range over 1, 2, ...; when k = 0 the matrix
    satisfies M^period = I outright.

    For a non-torsion matrix, ``J`` and ``period`` are None; ``k`` still
    records the multiplicity of the root 0 in mu.
    """

    torsion: bool
    d: int
    k: int
    J: frozenset[int] | None
    preperiod: int
    period: int | None
    mu: RatPoly

    def to_data(self) -> dict:
        """JSON document with a stable field order."""
        doc: dict = {"torsion": self.torsion, "d": self.d, "k": self.k}
        if self.torsion:
            doc["J"] = sorted(self.J)
        doc["preperiod"] = self.preperiod
        if self.torsion:
            doc["period"] = self.period
        doc["mu"] = self.mu.to_data()
        return doc

    @classmethod
    def from_data(cls, doc: dict) -> TorsionCertificate:
        try:
            torsion = bool(doc["torsion"])
            d = int(doc["d"])
            k = int(doc["k"])
            preperiod = int(doc["preperiod"])
            mu = RatPoly.from_data(doc["mu"])
            J = frozenset(int(j) for j in doc["J"]) if torsion else None
            period = int(doc["period"]) if torsion else None
        except KeyError as missing:
            raise ValueError(f"certificate document lacks field {missing}") from None
        return cls(torsion, d, k, J, preperiod, period, mu)


def decide_torsion_annihilation(m: RatMatrix, faithful: bool = False) -> bool:
    """Torsion test by annihilation: is z**d * pi_n evaluated at M zero?

    With n chosen so that phi(j) > d for every j > n, the matrix is torsion
    exactly when it annihilates z**d * pi_n. The tight choice is
    ``torsion_bound(d)``; ``faithful`` uses the blunt bound 2*d*d instead,
    which is never smaller, so both must return the same verdict.

    >>> decide_torsion_annihilation(RatMatrix([[0, -1], [1, 0]]))
    True
    >>> decide_torsion_annihilation(RatMatrix([[2]]))
    False
    """
    d = m.order
    n = 2 * d * d if faithful else torsion_bound(d)
    test_poly = pi_poly_product(n).to_rational().shifted(d)
    return horner_matrix_eval(test_poly, m).is_zero()


def torsion_certificate(m: RatMatrix) -> TorsionCertificate:
    """Decide torsion by factoring the minimal polynomial.

    mu is split as z**k times a remainder; the remainder is trial-divided by
    the cyclotomics gamma_j in ascending j, each used at most once (the
    target polynomial is squarefree, so repeated factors can never occur).
    The matrix is torsion iff the remainder fully dissolves into such
    factors. Non-torsion is a normal result, not an error.

    >>> torsion_certificate(RatMatrix([[0, 1], [0, 0]])).preperiod
    2
    >>> torsion_certificate(RatMatrix([[1, 1], [0, 1]])).torsion
    False
    """
    d = m.order
    mu = minimal_polynomial(m)
    k = next(i for i, c in enumerate(mu.coeffs) if c)
    rem = RatPoly(mu.coeffs[k:])
    indices = []
    for j in range(1, torsion_bound(d) + 1):
        if rem.degree == 0:
            break
        if totient(j) > rem.degree:
            continue
        quotient, leftover = divmod(rem, cyclotomic(j).to_rational())
        if leftover.is_zero():
            indices.append(j)
            rem = quotient
    if rem != RatPoly.one():
        return TorsionCertificate(False, d, k, None, k, None, mu)
    J = frozenset(indices)
    if k + sum(totient(j) for j in J) != mu.degree:
        raise InternalConsistencyError(
            "cyclotomic factor degrees do not add up to the minimal polynomial degree"
        )
    period = math.lcm(*J) if J else 1
    return TorsionCertificate(True, d, k, J, k, period, mu)


@dataclass(frozen=True, slots=True)
class VerifyOutcome:
    """Result of an independent certificate check; falsy when invalid."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(m: RatMatrix, c: TorsionCertificate) -> VerifyOutcome:
    """Re-check a torsion claim from first principles.

    Rebuilds z**k times the claimed cyclotomics and compares against the
    stated mu, then confirms the degree bound, the preperiod convention,
    the period as lcm(J), that mu annihilates M, and finally the power
    identity M^(preperiod+period) = M^preperiod by direct binary powering.
    Each failure carries a short reason code.

    >>> M = RatMatrix([[0, -1], [1, 1]])
    >>> bool(verify_certificate(M, torsion_certificate(M)))
    True
    """
    if not c.torsion:
        raise ValueError("only certificates claiming torsion can be verified")
    if c.d != m.order:
        return VerifyOutcome(False, "order mismatch")
    if c.mu.degree > m.order:
        return VerifyOutcome(False, "degree exceeds order")
    if c.preperiod != c.k:
        return VerifyOutcome(False, "preperiod mismatch")
    rebuilt = RatPoly.one().shifted(c.k)
    for j in sorted(c.J):
        rebuilt = rebuilt * cyclotomic(j).to_rational()
    if rebuilt != c.mu:
        return VerifyOutcome(False, "mu mismatch")
    if c.period != (math.lcm(*c.J) if c.J else 1):
        return VerifyOutcome(False, "period mismatch")
    if not horner_matrix_eval(rebuilt, m).is_zero():
        return VerifyOutcome(False, "annihilation fails")
    if mat_pow(m, c.preperiod + c.period) != mat_pow(m, c.preperiod):
        return VerifyOutcome(False, "power identity fails")
    return VerifyOutcome(True)


def _canonical_key(m: RatMatrix) -> tuple[str, ...]:
    # Fractions are kept reduced with positive denominators, so their string
    # forms are canonical and safe as table keys.
    return tuple(str(e) for row in m.rows for e in row)


def oracle_cycle_detect(m: RatMatrix, cap: int) -> tuple[int, int] | None:
    """First (p, q) with p < q <= cap and M^p = M^q, by brute force.

    Walks M, M^2, ..., M^cap, storing canonical encodings in a lookup
    table. Finding nothing within cap proves nothing; this exists to check
    the clever methods on small instances, not to decide.

    >>> oracle_cycle_detect(RatMatrix([[0, -1], [1, 0]]), 10)
    (1, 5)
    >>> oracle_cycle_detect(RatMatrix([[2]]), 100) is None
    True
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    seen: dict[tuple[str, ...], int] = {}
    power = RatMatrix.identity(m.order)
    for e in range(1, cap + 1):
        power = mat_mul(power, m)
        key = _canonical_key(power)
        if key in seen:
            return seen[key], e
        seen[key] = e
    return None


#: check_power_equivalence computes M to the power torsion_bound(d)! + d;
#: beyond this order the factorial exponent stops being desk-scale.
POWER_EQUIVALENCE_ORDER_LIMIT = 3


def check_power_equivalence(m: RatMatrix) -> bool:
    """Torsion test in pure power form: M^(n!+d) = M^d with n = torsion_bound(d).

    The factorial exponent makes this practical only at tiny order (the
    guard admits d <= 3, where n! is at most 720); binary powering keeps
    even those exponents cheap.

    >>> check_power_equivalence(RatMatrix([[-1]]))
    True
    >>> check_power_equivalence(RatMatrix([[2]]))
    False
    """
    d = m.order
    if d > POWER_EQUIVALENCE_ORDER_LIMIT:
        raise ValueError(
            f"power equivalence check supports order <= {POWER_EQUIVALENCE_ORDER_LIMIT}, "
            f"got {d}"
        )
    n = torsion_bound(d)
    return mat_pow(m, math.factorial(n) + d) == mat_pow(m, d)
