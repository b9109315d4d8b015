import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from girthforge.errors import SizeLimitError
from girthforge.gf import Field, is_prime, make_field

PRIME_POWERS_81 = [
    (p, m)
    for p in range(2, 82)
    if is_prime(p)
    for m in range(1, 8)
    if p**m <= 81
]


def test_make_field_prime_placeholder_modulus():
    f = make_field(5, 1)
    assert f.q == 5
    assert f.modulus == (0, 1)


def test_make_field_gf4():
    f = make_field(2, 2)
    assert f.q == 4
    assert f.modulus == (1, 1, 1)


def test_make_field_gf9_matches_scan_oracle():
    # Independent oracle: a monic quadratic over GF(3) is irreducible iff
    # it has no root; scan (c0, c1) lexicographically.
    expected = None
    for c0, c1 in itertools.product(range(3), repeat=2):
        if all((x * x + c1 * x + c0) % 3 for x in range(3)):
            expected = (c0, c1, 1)
            break
    assert expected == (1, 0, 1)
    assert make_field(3, 2).modulus == expected


def test_make_field_deterministic():
    assert make_field(3, 2) == make_field(3, 2)
    assert make_field(2, 8).modulus == make_field(2, 8).modulus


def test_modulus_monic_and_root_free():
    for p, m in ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (7, 3)):
        mod = make_field(p, m).modulus
        assert len(mod) == m + 1 and mod[-1] == 1
        for x in range(p):
            assert sum(c * x**i for i, c in enumerate(mod)) % p != 0


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(6)
    with pytest.raises(ValueError):
        make_field(1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(SizeLimitError):
        make_field(2, 21)


def test_add_examples():
    f5 = make_field(5)
    assert f5.add(3, 4) == 2
    f4 = make_field(2, 2)
    assert f4.add(2, 3) == 1
    for pm in ((3, 1), (2, 3), (3, 2)):
        f = make_field(*pm)
        assert all(f.add(a, 0) == a for a in f.elements())


def test_mul_examples():
    f5 = make_field(5)
    assert f5.mul(3, 4) == 2
    f4 = make_field(2, 2)
    assert f4.mul(2, 3) == 1
    f7 = make_field(7)
    assert f7.pow(3, 6) == 1
    assert f7.pow(0, 0) == 1
    assert f4.pow(3, 0) == 1


def test_inv_examples():
    f7 = make_field(7)
    assert f7.inv(2) == 4
    f4 = make_field(2, 2)
    assert f4.inv(2) == 3
    f9 = make_field(3, 2)
    for a in range(1, 9):
        assert f9.mul(a, f9.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        f9.inv(0)


def _tables(f: Field) -> tuple[np.ndarray, np.ndarray]:
    q = f.q
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add[a, b] = f.add(a, b)
            mul[a, b] = f.mul(a, b)
    return add, mul


@pytest.mark.parametrize("p,m", PRIME_POWERS_81)
def test_field_axioms_exhaustive(p, m):
    f = make_field(p, m)
    q = f.q
    add, mul = _tables(f)
    idx = np.arange(q)
    # commutativity
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)
    # identities
    assert np.array_equal(add[0], idx)
    assert np.array_equal(mul[1], idx)
    assert np.array_equal(mul[0], np.zeros(q, dtype=np.int64))
    # associativity over all triples
    assert np.array_equal(add[add], add[:, add])
    assert np.array_equal(mul[mul], mul[:, mul])
    # distributivity over all triples
    assert np.array_equal(mul[:, add], add[mul[:, :, None], mul[:, None, :]])
    # additive inverses exist, multiplicative for nonzero
    assert all((add[a] == 0).any() for a in range(q))
    assert all((mul[a] == 1).any() for a in range(1, q))


@pytest.mark.parametrize("p,m", PRIME_POWERS_81)
def test_fermat_exhaustive(p, m):
    f = make_field(p, m)
    for a in range(1, f.q):
        assert f.pow(a, f.q - 1) == 1


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_axioms_sampled_large_fields(data):
    f = data.draw(
        st.sampled_from(
            [make_field(101), make_field(2, 8), make_field(3, 4), make_field(5, 3)]
        )
    )
    a = data.draw(st.integers(0, f.q - 1))
    b = data.draw(st.integers(0, f.q - 1))
    c = data.draw(st.integers(0, f.q - 1))
    assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.sub(f.add(a, b), b) == a
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, f.q - 1) == 1
