from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supertoroidal.lattice import (
    LatticeConfig,
    LatticeVector,
    bilinear,
    cocycle,
    parity,
)

CFG = LatticeConfig(3, 3)


def vec_strategy(M=3, q=3, bound=4, q_only=False):
    coords = st.integers(min_value=-bound, max_value=bound)
    zeros = st.just(0)
    return st.builds(
        LatticeVector,
        st.tuples(*[coords] * M),
        st.tuples(*[coords] * (q - 1)),
        st.tuples(*[(zeros if q_only else coords)] * (q - 1)),
    )


def test_basis_pairings():
    assert bilinear(CFG.e(1), CFG.e(1)) == 1
    assert bilinear(CFG.e(1), CFG.e(2)) == 0
    assert bilinear(CFG.delta(1), CFG.dgen(1)) == 1
    assert bilinear(CFG.delta(1), CFG.delta(1)) == 0
    assert bilinear(CFG.dgen(1), CFG.dgen(2)) == 0
    assert bilinear(CFG.e(2), CFG.delta(1)) == 0
    assert bilinear(CFG.e(1) - CFG.e(2), CFG.e(2) - CFG.e(1)) == -2


def test_parity_examples():
    assert parity(CFG.e(1)) == 1
    assert parity(CFG.e(1) - CFG.e(2)) == 0
    assert parity(CFG.delta_sum((5, -3))) == 0
    assert parity(CFG.dgen(1) + CFG.delta(2)) == 0


def test_cocycle_table():
    assert cocycle(CFG.e(1), CFG.e(2)) == 1
    assert cocycle(CFG.e(1), CFG.e(1)) == 1
    assert cocycle(CFG.e(2), CFG.e(1)) == -1
    assert cocycle(CFG.zero(), CFG.e(1) + CFG.delta(2)) == 1
    assert cocycle(CFG.e(1) + CFG.delta(2), CFG.zero()) == 1
    assert cocycle(CFG.e(1), CFG.delta(1)) == 1
    assert cocycle(CFG.delta(1), CFG.e(3)) == 1
    assert cocycle(CFG.delta(1), CFG.delta(2)) == 1
    assert cocycle(CFG.delta(1), CFG.dgen(2)) == 1
    assert cocycle(CFG.e(1) - CFG.e(2), CFG.e(2) - CFG.e(1)) == -1


def test_cocycle_negated_argument():
    # forced by bimultiplicativity: F(e_i, -e_j) = F(e_i, e_j)
    for i in range(1, 4):
        for j in range(1, 4):
            assert cocycle(CFG.e(i), -CFG.e(j)) == cocycle(CFG.e(i), CFG.e(j))


def test_cocycle_rejects_d_component():
    with pytest.raises(ValueError):
        cocycle(CFG.dgen(1), CFG.e(1))


def test_shape_mismatch_rejected():
    other = LatticeConfig(2, 3)
    with pytest.raises(ValueError):
        bilinear(CFG.e(1), other.e(1))


@given(vec_strategy(), vec_strategy())
def test_bilinear_symmetric(a, b):
    assert bilinear(a, b) == bilinear(b, a)


@given(vec_strategy(), vec_strategy(), vec_strategy(),
       st.integers(-3, 3), st.integers(-3, 3))
def test_bilinear_linear(a, b, c, m, n):
    assert bilinear(m * a + n * b, c) == m * bilinear(a, c) + n * bilinear(b, c)


@given(vec_strategy(), vec_strategy())
def test_parity_additive(a, b):
    assert parity(a + b) == (parity(a) + parity(b)) % 2


@given(vec_strategy())
def test_parity_is_norm_mod_two(a):
    assert parity(a) == bilinear(a, a) % 2


@given(vec_strategy(q_only=True), vec_strategy(q_only=True), vec_strategy())
def test_cocycle_bimultiplicative(a, b, c):
    assert cocycle(a + b, c) == cocycle(a, c) * cocycle(b, c)
    assert cocycle(a, b + c) == cocycle(a, b) * cocycle(a, c)


@settings(max_examples=300)
@given(vec_strategy(q_only=True), vec_strategy(q_only=True), vec_strategy(q_only=True))
def test_cocycle_identity_random(a, b, c):
    assert cocycle(a, b) * cocycle(a + b, c) == cocycle(b, c) * cocycle(a, b + c)


def test_sign_law_exhaustive_small_box():
    # M = 2 box [-1, 1]: 81 pairs, fully enumerated
    cfg = LatticeConfig(2, 1)
    space = [LatticeVector(e) for e in product((-1, 0, 1), repeat=2)]
    for a in space:
        for b in space:
            lhs = cocycle(a, b) * cocycle(b, a)
            assert lhs == (-1) ** (bilinear(a, b) + parity(a) * parity(b))


def test_basis_vector_flat_indexing():
    names = [CFG.e(1), CFG.e(2), CFG.e(3), CFG.delta(1), CFG.delta(2), CFG.dgen(1), CFG.dgen(2)]
    for idx, v in enumerate(names):
        assert CFG.basis_vector(idx) == v
    with pytest.raises(ValueError):
        CFG.basis_vector(7)


def test_membership_predicates():
    assert CFG.e(1).in_gamma() and CFG.e(1).in_q()
    assert not CFG.delta(1).in_gamma() and CFG.delta(1).in_q()
    assert not CFG.dgen(1).in_q()
    assert CFG.zero().in_gamma()


def test_q1_degenerates_to_gamma():
    cfg = LatticeConfig(4, 1)
    assert cfg.rank == 4
    assert cfg.zero().delta == ()
    assert cfg.delta_sum(()) == cfg.zero()
