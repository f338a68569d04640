import random

import pytest

from braidmf import Perm, klein_group, quotient_s4_to_s3, symmetric_group


def test_identity_and_validation():
    e = Perm.identity(5)
    assert e.is_identity()
    assert e.degree == 5
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_immutable():
    p = Perm.identity(3)
    with pytest.raises(AttributeError):
        p.images = (0, 1, 2)


def test_transposition():
    t = Perm.transposition(2, 4, 5)
    assert t(2) == 4 and t(4) == 2 and t(1) == 1
    assert t.is_transposition()
    assert t * t == Perm.identity(5)
    with pytest.raises(ValueError):
        Perm.transposition(1, 1, 5)
    with pytest.raises(ValueError):
        Perm.transposition(0, 2, 5)


def test_left_to_right_composition():
    # (1 2) then (2 3): 1 -> 2 -> 3
    p = Perm.transposition(1, 2, 3)
    q = Perm.transposition(2, 3, 3)
    assert (p * q)(1) == 3
    assert (q * p)(1) == 2


def test_from_cycles_and_cycles_roundtrip():
    p = Perm.from_cycles([(1, 4), (2, 3)], 4)
    assert p.cycles() == ((1, 4), (2, 3))
    assert p.cycle_type() == (2, 2)
    q = Perm.from_cycles([(1, 2, 3)], 5)
    assert q(1) == 2 and q(3) == 1 and q(5) == 5


def test_inverse_and_conjugate():
    rng = random.Random(7)
    group = symmetric_group(5)
    for _ in range(200):
        p, g = rng.choice(group), rng.choice(group)
        assert p * p.inverse() == Perm.identity(5)
        # conjugation preserves the cycle type
        assert p.conjugate(g).cycle_type() == p.cycle_type()
        assert p.conjugate(g) == g.inverse() * p * g


def test_symmetric_group_sizes():
    assert len(symmetric_group(4)) == 24
    assert len(set(symmetric_group(4))) == 24
    assert len(symmetric_group(3)) == 6


def test_klein_group_is_closed_and_normal():
    K = klein_group()
    assert len(set(K)) == 4
    for x in K:
        for y in K:
            assert x * y in K
    for g in symmetric_group(4):
        for x in K:
            assert x.conjugate(g) in K


def test_quotient_is_a_homomorphism_with_klein_kernel():
    kernel = set()
    for p in symmetric_group(4):
        for q in symmetric_group(4):
            assert quotient_s4_to_s3(p * q) == quotient_s4_to_s3(
                p
            ) * quotient_s4_to_s3(q)
        if quotient_s4_to_s3(p).is_identity():
            kernel.add(p)
    assert kernel == set(klein_group())


def test_quotient_transposition_images():
    assert quotient_s4_to_s3(Perm.transposition(1, 2, 4)) == Perm.transposition(1, 2, 3)
    assert quotient_s4_to_s3(Perm.transposition(3, 4, 4)) == Perm.transposition(1, 2, 3)
    assert quotient_s4_to_s3(Perm.transposition(1, 3, 4)) == Perm.transposition(1, 3, 3)
    assert quotient_s4_to_s3(Perm.transposition(2, 3, 4)) == Perm.transposition(2, 3, 3)


def test_json_roundtrip():
    p = Perm.from_cycles([(1, 3, 2)], 4)
    assert Perm.from_json(p.to_json()) == p
    assert p.to_json() == [3, 1, 2, 4]
