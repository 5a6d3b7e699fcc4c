"""Tensor-power calculus: products, leg actions, permutations, embeddings."""
import random
from fractions import Fraction

import pytest

from rbraid import (
    GF,
    QQ,
    TensorElement,
    build_matrix_algebra,
    build_quaternion,
    matrix_closed_form,
    tensor_mul,
    unit_tensor,
)
from rbraid.errors import (
    ArityMismatch,
    BadPermutation,
    BadSlots,
    LegOutOfRange,
)


@pytest.fixture(scope="module")
def m2():
    return build_matrix_algebra(2, QQ)


@pytest.fixture(scope="module")
def r_m2(m2):
    return matrix_closed_form(2, QQ)


def random_tensor(A, arity, rng):
    coeffs = [A.field.from_int(rng.randrange(-3, 4)) for _ in range(A.dim ** arity)]
    return TensorElement(A, arity, coeffs)


def test_unit_tensor_is_identity(m2):
    rng = random.Random(7)
    unit = unit_tensor(m2, 3)
    for _ in range(5):
        t = random_tensor(m2, 3, rng)
        assert tensor_mul(unit, t) == t
        assert tensor_mul(t, unit) == t


def test_unit_tensor_contracts_to_unit(m2):
    assert unit_tensor(m2, 3).contract_legs(1) == unit_tensor(m2, 2)


def test_unit_tensor_scalar_algebra():
    k = build_matrix_algebra(1, QQ)
    u = unit_tensor(k, 3)
    assert u.coeffs == [Fraction(1)]


def test_tensor_mul_associative_spot(m2):
    rng = random.Random(11)
    for A in (m2, build_quaternion(-1, -1, QQ)):
        for arity in (1, 2, 3):
            x = random_tensor(A, arity, rng)
            y = random_tensor(A, arity, rng)
            z = random_tensor(A, arity, rng)
            assert tensor_mul(tensor_mul(x, y), z) == tensor_mul(x, tensor_mul(y, z))


def test_simple_leg_product(m2):
    # (a (x) 1 (x) 1) * (1 (x) b (x) 1) = a (x) b (x) 1
    F = QQ
    a = m2.basis_element(1)
    b = m2.basis_element(2)
    ta = unit_tensor(m2, 3).act_leg(1, a, "left")
    tb = unit_tensor(m2, 3).act_leg(2, b, "left")
    expected = unit_tensor(m2, 3).act_leg(1, a, "left").act_leg(2, b, "left")
    assert tensor_mul(ta, tb) == expected


def test_closed_form_times_swapped_is_unit(m2, r_m2):
    # the leg-swapped tensor is a two-sided inverse of the matrix R
    s = r_m2.permute_legs((2, 1, 3))
    assert tensor_mul(r_m2, s) == unit_tensor(m2, 3)
    assert tensor_mul(s, r_m2) == unit_tensor(m2, 3)


def test_contract_legs_examples(m2, r_m2):
    unit2 = unit_tensor(m2, 2)
    assert r_m2.contract_legs(1) == unit2  # legs 1*2 (x) 3
    assert r_m2.contract_legs(2) == unit2  # leg 1 (x) 2*3
    # generic: contract (a (x) b (x) c) at leg 1 gives ab (x) c
    a, b, c = m2.basis_element(1), m2.basis_element(2), m2.basis_element(3)
    t = (
        unit_tensor(m2, 3)
        .act_leg(1, a, "left")
        .act_leg(2, b, "left")
        .act_leg(3, c, "left")
    )
    ab = a * b
    expected = unit_tensor(m2, 2).act_leg(1, ab, "left").act_leg(2, c, "left")
    assert t.contract_legs(1) == expected


def test_contract_leg_out_of_range(m2, r_m2):
    with pytest.raises(LegOutOfRange):
        r_m2.contract_legs(3)
    with pytest.raises(LegOutOfRange):
        r_m2.contract_legs(0)


def test_permute_identity_and_involution(m2, r_m2):
    assert r_m2.permute_legs((1, 2, 3)) == r_m2
    swapped = r_m2.permute_legs((2, 1, 3))
    assert swapped.permute_legs((2, 1, 3)) == r_m2


def test_permute_cyclic_invariance(m2, r_m2):
    # both cyclic rotations fix the matrix-algebra tensor
    assert r_m2.permute_legs((3, 1, 2)) == r_m2
    assert r_m2.permute_legs((2, 3, 1)) == r_m2


def test_permute_is_an_action(m2):
    rng = random.Random(3)
    t = random_tensor(m2, 3, rng)
    perms = [(2, 1, 3), (3, 1, 2), (1, 3, 2), (2, 3, 1)]
    for sigma in perms:
        for tau in perms:
            composed = tuple(tau[sigma[p] - 1] for p in range(3))
            assert t.permute_legs(sigma).permute_legs(tau) == t.permute_legs(composed)


def test_permute_rejects_non_permutation(m2, r_m2):
    with pytest.raises(BadPermutation):
        r_m2.permute_legs((1, 1, 3))


def test_embed_identity_slots(m2, r_m2):
    assert r_m2.embed_legs(3, (1, 2, 3)) == r_m2


def test_embed_unit(m2):
    u2 = unit_tensor(m2, 2)
    assert u2.embed_legs(3, (1, 3)) == unit_tensor(m2, 3)


def test_embed_product_identity(m2, r_m2):
    # R(124) = R(123) R(134) for the solved matrix tensor
    lhs = r_m2.embed_legs(4, (1, 2, 4))
    rhs = tensor_mul(r_m2.embed_legs(4, (1, 2, 3)), r_m2.embed_legs(4, (1, 3, 4)))
    assert lhs == rhs


def test_embed_bad_slots(m2, r_m2):
    with pytest.raises(BadSlots):
        r_m2.embed_legs(4, (1, 2))
    with pytest.raises(BadSlots):
        r_m2.embed_legs(4, (2, 1, 3))
    with pytest.raises(BadSlots):
        r_m2.embed_legs(4, (1, 2, 5))


def test_act_leg_centralizing_example(m2, r_m2):
    # left action on leg 2 equals right action on leg 3 for the solved
    # tensor, here probed with the matrix unit e_12 (basis index 1)
    a = m2.basis_element(1)
    assert r_m2.act_leg(2, a, "left") == r_m2.act_leg(3, a, "right")


def test_act_leg_unit_and_simple(m2):
    rng = random.Random(5)
    t = random_tensor(m2, 3, rng)
    assert t.act_leg(1, m2.unit_element(), "left") == t
    a = m2.basis_element(2)
    u2 = unit_tensor(m2, 2)
    acted = u2.act_leg(1, a, "left")
    expected = TensorElement.from_terms(
        m2, 2, [((2, 0), QQ.one), ((2, 3), QQ.one)]
    )  # e_21 (x) (e_11 + e_22)
    assert acted == expected


def test_act_leg_out_of_range(m2, r_m2):
    with pytest.raises(LegOutOfRange):
        r_m2.act_leg(4, m2.basis_element(0), "left")


def test_contract_commutes_with_distant_act(m2):
    rng = random.Random(13)
    t = random_tensor(m2, 3, rng)
    a = m2.basis_element(1)
    # acting on leg 3 commutes with contracting legs 1,2
    lhs = t.act_leg(3, a, "right").contract_legs(1)
    rhs = t.contract_legs(1).act_leg(2, a, "right")
    assert lhs == rhs


def test_arity_mismatch(m2, r_m2):
    with pytest.raises(ArityMismatch):
        tensor_mul(r_m2, unit_tensor(m2, 2))


def test_index_round_trip(m2):
    t = unit_tensor(m2, 3)
    for idx in range(0, 64, 7):
        assert t.index_of(t.digits_of(idx)) == idx


def test_serialization_round_trip(m2, r_m2):
    obj = r_m2.to_json()
    assert obj["arity"] == 3
    assert len(obj["coeffs"]) == r_m2.nnz() == 8
    back = TensorElement.from_json(m2, obj)
    assert back == r_m2
    # entries are sorted by index
    indices = [r_m2.index_of(tuple(e["monomial"])) for e in obj["coeffs"]]
    assert indices == sorted(indices)


def test_serialization_gf(m2):
    F = GF(5)
    A5 = build_matrix_algebra(2, F)
    r5 = matrix_closed_form(2, F)
    back = TensorElement.from_json(A5, r5.to_json())
    assert back == r5
