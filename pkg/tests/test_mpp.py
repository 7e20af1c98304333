"""The block-pair reduction and its bounded power search."""

from random import Random

import pytest

from torsionkit.matrices import RatMatrix, block_diag, mat_pow
from torsionkit.mpp import build_mpp_instance, search_matrix_power

from _corpus import get_corpus

ROTATION = RatMatrix([[0, -1], [1, 0]])
NILPOTENT_BLOCK = RatMatrix([[0, 1], [0, 0]])


class TestBuild:
    def test_scalar_one(self):
        inst = build_mpp_instance(RatMatrix([[1]]))
        assert inst.source_order == 1
        assert inst.a == block_diag(RatMatrix([[1]]), NILPOTENT_BLOCK)
        assert inst.b == block_diag(RatMatrix([[1]]), RatMatrix.zeros(2))

    def test_nilpotent_source_block_dies(self):
        inst = build_mpp_instance(NILPOTENT_BLOCK)
        assert inst.a == block_diag(RatMatrix.zeros(2), NILPOTENT_BLOCK)

    def test_orders_are_source_plus_two(self):
        for d in (1, 2, 3, 4):
            inst = build_mpp_instance(RatMatrix.identity(d))
            assert inst.a.order == d + 2
            assert inst.b.order == d + 2

    def test_blocks_hold_dth_power(self):
        inst = build_mpp_instance(ROTATION)
        assert inst.a == block_diag(mat_pow(ROTATION, 2), NILPOTENT_BLOCK)


class TestSearch:
    def test_identity_pair_at_zero(self):
        eye = RatMatrix.identity(2)
        assert search_matrix_power(eye, eye, 5) == 0

    def test_rotation_instance(self):
        inst = build_mpp_instance(ROTATION)
        n = search_matrix_power(inst.a, inst.b, 100)
        assert n is not None and n >= 2
        assert mat_pow(inst.a, n) == inst.b

    def test_growth_instance_finds_nothing(self):
        inst = build_mpp_instance(RatMatrix([[2]]))
        assert search_matrix_power(inst.a, inst.b, 50) is None

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            search_matrix_power(RatMatrix.identity(2), RatMatrix.identity(3), 5)

    def test_cap_validated(self):
        with pytest.raises(ValueError):
            search_matrix_power(RatMatrix.identity(2), RatMatrix.identity(2), -1)

    def test_zero_and_one_never_match(self):
        # A^0 = I differs from B in the 2x2 zero block; A^1 keeps the
        # nilpotent block alive. Both hold for every source matrix.
        rng = Random(3)
        for e in rng.sample(list(get_corpus()), 10):
            inst = build_mpp_instance(e.matrix)
            assert not RatMatrix.identity(inst.a.order) == inst.b
            assert not inst.a == inst.b

    def test_torsion_sample_found_within_period_cap(self):
        rng = Random(9)
        sample = rng.sample([e for e in get_corpus() if e.torsion], 12)
        for e in sample:
            inst = build_mpp_instance(e.matrix)
            n = search_matrix_power(inst.a, inst.b, 4 * e.period + 4)
            assert n is not None and n >= 2, e.name
            assert mat_pow(inst.a, n) == inst.b, e.name
