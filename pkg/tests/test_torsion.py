"""The decision procedures and certificate machinery."""

import json
from random import Random

import pytest

from torsionkit.matrices import RatMatrix, block_diag, companion_matrix, mat_pow
from torsionkit.numbertheory import cyclotomic
from torsionkit.polynomials import RatPoly
from torsionkit.torsion import (
    TorsionCertificate,
    check_power_equivalence,
    decide_torsion_annihilation,
    oracle_cycle_detect,
    torsion_certificate,
    verify_certificate,
)

from _corpus import get_corpus
from _oracles import conjugate, unimodular_pair

ROTATION = RatMatrix([[0, -1], [1, 0]])
NILPOTENT = RatMatrix([[0, 1], [0, 0]])
UNIPOTENT = RatMatrix([[1, 1], [0, 1]])
GAMMA6_COMPANION = RatMatrix([[0, -1], [1, 1]])


def tampered(cert: TorsionCertificate, **changes) -> TorsionCertificate:
    fields = {
        "torsion": cert.torsion,
        "d": cert.d,
        "k": cert.k,
        "J": cert.J,
        "preperiod": cert.preperiod,
        "period": cert.period,
        "mu": cert.mu,
    }
    fields.update(changes)
    return TorsionCertificate(**fields)


class TestAnnihilationDecision:
    def test_identity_is_torsion(self):
        assert decide_torsion_annihilation(RatMatrix.identity(3)) is True

    def test_growing_scalar_is_not(self):
        assert decide_torsion_annihilation(RatMatrix([[2]])) is False

    def test_quarter_turn_is_torsion(self):
        assert decide_torsion_annihilation(ROTATION) is True

    def test_faithful_mode_agrees_on_samples(self):
        for m in (RatMatrix.identity(2), ROTATION, NILPOTENT, UNIPOTENT, RatMatrix([[2]])):
            assert decide_torsion_annihilation(m, faithful=True) == \
                decide_torsion_annihilation(m, faithful=False)


class TestCertificate:
    def test_identity(self):
        c = torsion_certificate(RatMatrix.identity(2))
        assert c.torsion and c.k == 0 and c.J == frozenset({1})
        assert c.preperiod == 0 and c.period == 1
        assert c.mu == RatPoly([-1, 1])

    def test_nilpotent(self):
        c = torsion_certificate(NILPOTENT)
        assert c.torsion and c.k == 2 and c.J == frozenset()
        assert c.preperiod == 2 and c.period == 1

    def test_gamma6_companion(self):
        c = torsion_certificate(GAMMA6_COMPANION)
        assert c.torsion and c.k == 0 and c.J == frozenset({6}) and c.period == 6

    def test_unipotent_not_torsion(self):
        c = torsion_certificate(UNIPOTENT)
        assert not c.torsion
        assert c.J is None and c.period is None
        assert c.mu == RatPoly([1, -2, 1])

    def test_mixed_preperiod_and_period(self):
        m = block_diag(
            companion_matrix(RatPoly([0, 0, 1])),
            companion_matrix(cyclotomic(4).to_rational()),
        )
        c = torsion_certificate(m)
        assert (c.k, c.J, c.preperiod, c.period) == (2, frozenset({4}), 2, 4)

    def test_data_round_trip_torsion(self):
        c = torsion_certificate(GAMMA6_COMPANION)
        doc = c.to_data()
        assert list(doc) == ["torsion", "d", "k", "J", "preperiod", "period", "mu"]
        assert TorsionCertificate.from_data(json.loads(json.dumps(doc))) == c

    def test_data_round_trip_non_torsion(self):
        c = torsion_certificate(UNIPOTENT)
        doc = c.to_data()
        assert list(doc) == ["torsion", "d", "k", "preperiod", "mu"]
        assert TorsionCertificate.from_data(doc) == c

    def test_from_data_missing_field(self):
        with pytest.raises(ValueError):
            TorsionCertificate.from_data({"torsion": True})


class TestVerify:
    def test_genuine_certificates_pass(self):
        for m in (RatMatrix.identity(2), NILPOTENT, GAMMA6_COMPANION, ROTATION):
            outcome = verify_certificate(m, torsion_certificate(m))
            assert outcome and outcome.reason is None

    def test_non_torsion_certificate_rejected(self):
        with pytest.raises(ValueError):
            verify_certificate(UNIPOTENT, torsion_certificate(UNIPOTENT))

    def test_tampered_period_on_identity(self):
        # M^(0+2) = M^0 does hold for the identity, so the power identity
        # cannot catch this; the lcm cross-check does.
        c = torsion_certificate(RatMatrix.identity(2))
        outcome = verify_certificate(RatMatrix.identity(2), tampered(c, period=2))
        assert not outcome and outcome.reason == "period mismatch"

    def test_tampered_index_set(self):
        c = torsion_certificate(GAMMA6_COMPANION)
        outcome = verify_certificate(GAMMA6_COMPANION, tampered(c, J=frozenset({3})))
        assert not outcome and outcome.reason == "mu mismatch"

    def test_certificate_of_different_matrix(self):
        c = torsion_certificate(companion_matrix(cyclotomic(4).to_rational()))
        outcome = verify_certificate(GAMMA6_COMPANION, c)
        assert not outcome and outcome.reason == "annihilation fails"

    def test_order_mismatch(self):
        c = torsion_certificate(RatMatrix.identity(2))
        outcome = verify_certificate(RatMatrix.identity(3), c)
        assert not outcome and outcome.reason == "order mismatch"

    def test_degree_exceeds_order(self):
        c = torsion_certificate(RatMatrix.identity(2))
        oversized = tampered(
            c,
            J=frozenset({1, 2, 3}),
            mu=RatPoly([-1, 1]) * RatPoly([1, 1]) * RatPoly([1, 1, 1]),
        )
        outcome = verify_certificate(RatMatrix.identity(2), oversized)
        assert not outcome and outcome.reason == "degree exceeds order"

    def test_tampered_preperiod(self):
        c = torsion_certificate(NILPOTENT)
        outcome = verify_certificate(NILPOTENT, tampered(c, preperiod=1))
        assert not outcome and outcome.reason == "preperiod mismatch"


class TestOracle:
    def test_quarter_turn_first_repeat(self):
        assert oracle_cycle_detect(ROTATION, 10) == (1, 5)

    def test_nilpotent_first_repeat(self):
        assert oracle_cycle_detect(NILPOTENT, 10) == (2, 3)

    def test_growth_never_repeats(self):
        assert oracle_cycle_detect(RatMatrix([[2]]), 100) is None

    def test_cap_too_small_sees_nothing(self):
        assert oracle_cycle_detect(ROTATION, 4) is None

    def test_cap_validated(self):
        with pytest.raises(ValueError):
            oracle_cycle_detect(ROTATION, 0)

    def test_first_repeat_structure_on_samples(self):
        rng = Random(5)
        sample = rng.sample([e for e in get_corpus() if e.torsion], 15)
        for e in sample:
            p, q = oracle_cycle_detect(e.matrix, max(e.preperiod, 1) + e.period + 1)
            assert p == max(e.preperiod, 1), e.name
            assert q - p == e.period, e.name


class TestPowerEquivalence:
    def test_negative_one(self):
        assert check_power_equivalence(RatMatrix([[-1]])) is True

    def test_quarter_turn(self):
        assert check_power_equivalence(ROTATION) is True
        assert mat_pow(ROTATION, 722) == mat_pow(ROTATION, 2)

    def test_growing_scalar(self):
        assert check_power_equivalence(RatMatrix([[2]])) is False

    def test_guard(self):
        with pytest.raises(ValueError):
            check_power_equivalence(RatMatrix.identity(4))

    def test_one_by_one_torsion_set(self):
        for value in (0, 1, -1):
            m = RatMatrix([[value]])
            assert check_power_equivalence(m) is True
            assert mat_pow(m, 3) == mat_pow(m, 1)


class TestStructuralInvariants:
    def test_block_composition(self):
        a = companion_matrix(cyclotomic(4).to_rational())
        b = block_diag(
            companion_matrix(RatPoly([0, 1])),
            companion_matrix(cyclotomic(3).to_rational()),
        )
        ca, cb = torsion_certificate(a), torsion_certificate(b)
        combined = torsion_certificate(block_diag(a, b))
        assert combined.torsion
        assert combined.period == 12 == ca.period * cb.period
        assert combined.preperiod == max(ca.preperiod, cb.preperiod) == 1

    def test_block_with_non_torsion_part(self):
        m = block_diag(ROTATION, UNIPOTENT)
        assert not torsion_certificate(m).torsion

    def test_similarity_invariance(self):
        rng = Random(11)
        for e in rng.sample(list(get_corpus()), 12):
            fwd, back = unimodular_pair(rng, e.matrix.order)
            twin = torsion_certificate(conjugate(e.matrix, fwd, back))
            base = torsion_certificate(e.matrix)
            assert twin.torsion == base.torsion, e.name
            assert (twin.preperiod, twin.period) == (base.preperiod, base.period), e.name
            assert twin.mu == base.mu, e.name

    def test_rational_entries_supported_throughout(self):
        half_rotation = RatMatrix([["1/2", "-1/2"], ["1/2", "1/2"]])
        m = RatMatrix.from_data(half_rotation.to_data())
        c = torsion_certificate(m)
        # eigenvalues (1 +- i)/2 have modulus sqrt(2)/2 < 1, not roots of unity
        assert not c.torsion
