import itertools
import random

import pytest

from superinv.scalars import MINUS_ONE, ONE, Scalar
from superinv.signs import Permutation, symmetric_group
from superinv.spaces import SuperSpace
from superinv.tensors import (
    Tensor,
    apply,
    basis_vector,
    compose,
    identity_tensor,
    matrix_unit,
    partial_supertrace,
    permute_word,
    supertrace,
    supertranspose,
)

GL11 = SuperSpace("gl", 1, 1)


def tensor_word(space, pairs, coeff=ONE):
    return Tensor(space, len(pairs), {tuple(pairs): coeff})


def rand_tensor(space, k, rng, terms=3):
    entries = {}
    for _ in range(terms):
        key = tuple(
            (rng.choice(space.indices), rng.choice(space.indices)) for _ in range(k)
        )
        entries[key] = Scalar(rng.randint(-3, 3))
    return Tensor(space, k, entries)


def test_k1_matrix_units():
    e11, e12 = matrix_unit(GL11, 1, 1), matrix_unit(GL11, 1, 2)
    assert compose(e11, e12) == e12
    assert compose(e12, e11).is_zero()
    ident = identity_tensor(GL11, 1)
    assert compose(ident, e12) == e12 and compose(e12, ident) == e12


def test_compose_odd_sign_example():
    # (e12 x e21) o (e21 x e12) = -(e11 x e22) in gl(1|1)
    a = tensor_word(GL11, [(1, 2), (2, 1)])
    b = tensor_word(GL11, [(2, 1), (1, 2)])
    expected = tensor_word(GL11, [(1, 1), (2, 2)], MINUS_ONE)
    assert compose(a, b) == expected
    # oracle: compare entrywise application on all four basis words
    for word in itertools.product(GL11.indices, repeat=2):
        v = basis_vector(GL11, word)
        assert apply(compose(a, b), v) == apply(a, apply(b, v))


def test_apply_examples():
    ident = identity_tensor(GL11, 2)
    v = basis_vector(GL11, (1, 2))
    assert apply(ident, v) == v
    # (1 x e12)(e1 x e2) = e1 x e1, no sign since |e1| = 0
    t = Tensor(GL11, 2, {((1, 1), (1, 2)): ONE, ((2, 2), (1, 2)): ONE})
    assert apply(t, v) == basis_vector(GL11, (1, 1))
    assert apply(Tensor(GL11, 2, {}), v).is_zero()


def test_apply_compose_exhaustive_small():
    # all matrix-unit words, all pairs, all basis vectors
    for space in (GL11, SuperSpace("osp", 1, 1)):
        for k in (1, 2):
            words = list(itertools.product(space.indices, repeat=k))
            units = [
                Tensor(space, k, {tuple(zip(r, c)): ONE})
                for r in words
                for c in words
            ]
            vecs = [basis_vector(space, w) for w in words]
            for a in units:
                for b in units:
                    ab = compose(a, b)
                    for v in vecs:
                        assert apply(ab, v) == apply(a, apply(b, v))


def test_compose_associative_random():
    rng = random.Random(3)
    for k in (1, 2, 3):
        for _ in range(15):
            a, b, c = (rand_tensor(GL11, k, rng) for _ in range(3))
            assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_supertrace():
    assert supertrace(matrix_unit(GL11, 1, 1)) == ONE
    assert supertrace(matrix_unit(GL11, 2, 2)) == MINUS_ONE
    assert supertrace(matrix_unit(GL11, 1, 2)).is_zero()
    for m, n in [(1, 1), (2, 1), (3, 2)]:
        space = SuperSpace("gl", m, n)
        assert supertrace(identity_tensor(space, 1)) == Scalar(m - n)
    with pytest.raises(ValueError):
        supertrace(identity_tensor(GL11, 2))


def test_partial_supertrace():
    t = tensor_word(GL11, [(1, 1), (1, 1)])
    assert partial_supertrace(t, 2) == matrix_unit(GL11, 1, 1)
    t2 = tensor_word(GL11, [(2, 2), (1, 2)])
    assert partial_supertrace(t2, 1) == matrix_unit(GL11, 1, 2).scale(MINUS_ONE)
    # Str_1(id x A) = (m - n) A
    rng = random.Random(5)
    a = rand_tensor(GL11, 1, rng)
    idA = Tensor(
        GL11,
        2,
        {
            ((d, d),) + key: coeff
            for d in GL11.indices
            for key, coeff in a.entries.items()
        },
    )
    assert partial_supertrace(idA, 1) == a.scale(Scalar(0))
    sp21 = SuperSpace("gl", 2, 1)
    b = rand_tensor(sp21, 1, rng)
    idB = Tensor(
        sp21,
        2,
        {
            ((d, d),) + key: coeff
            for d in sp21.indices
            for key, coeff in b.entries.items()
        },
    )
    assert partial_supertrace(idB, 1) == b.scale(Scalar(2 - 1))
    with pytest.raises(ValueError):
        partial_supertrace(t, 3)


def test_iterated_partial_supertrace_is_full():
    rng = random.Random(9)
    t = rand_tensor(GL11, 3, rng, terms=6)
    full = partial_supertrace(partial_supertrace(partial_supertrace(t, 1), 1), 1)
    other = partial_supertrace(partial_supertrace(partial_supertrace(t, 3), 2), 1)
    assert full == other


def test_supertranspose():
    assert supertranspose(matrix_unit(GL11, 1, 2)) == matrix_unit(GL11, 2, 1)
    assert supertranspose(matrix_unit(GL11, 2, 1)) == matrix_unit(GL11, 1, 2).scale(
        MINUS_ONE
    )
    ident = identity_tensor(GL11, 2)
    assert supertranspose(ident) == ident


def test_supertranspose_anti_automorphism():
    # (AB)^st = (-1)^{|A||B|} B^st A^st on homogeneous tensors
    rng = random.Random(13)
    space = SuperSpace("gl", 2, 1)
    words = list(itertools.product(space.indices, repeat=2))
    pool = [
        Tensor(space, 2, {tuple(zip(r, c)): Scalar(rng.randint(1, 3))})
        for r in words
        for c in words
    ]
    pairs = 0
    while pairs < 100:
        a = rng.choice(pool)
        b = rng.choice(pool)
        pa, pb = a.parity(), b.parity()
        ab_st = supertranspose(compose(a, b))
        rhs = compose(supertranspose(b), supertranspose(a))
        if pa and pb:
            rhs = rhs.scale(MINUS_ONE)
        assert ab_st == rhs
        pairs += 1


def test_permute_word_action():
    v = basis_vector(GL11, (1, 2))
    s = Permutation((2, 1))
    assert permute_word(s, v) == basis_vector(GL11, (2, 1))
    v22 = basis_vector(GL11, (2, 2))
    assert permute_word(s, v22) == v22.scale(MINUS_ONE)
    assert permute_word(Permutation.identity(2), v) == v


def test_permute_word_group_action_exhaustive():
    for word in itertools.product(GL11.indices, repeat=3):
        v = basis_vector(GL11, word)
        for s in symmetric_group(3):
            for t in symmetric_group(3):
                assert permute_word(s * t, v) == permute_word(s, permute_word(t, v))


def test_degree_zero_tensor_is_scalar():
    t = Tensor(GL11, 0, {(): Scalar(5)})
    assert t.coefficient(()) == Scalar(5)
    assert (t + t).coefficient(()) == Scalar(10)


def test_json_shapes():
    t = tensor_word(GL11, [(1, 2), (2, 1)], Scalar(2))
    data = t.to_json()
    assert data["k"] == 2
    assert data["space"] == {"family": "gl", "m": 1, "n": 1}
    assert data["entries"][0]["key"] == [[1, 2], [2, 1]]
    v = basis_vector(GL11, (1, 2))
    assert v.to_json()["entries"][0]["key"] == [1, 2]
