"""Field arithmetic checked against a schoolbook carry-less oracle."""

import random

import pytest

from constacode.errors import DivisionByZero, NotFound
from constacode.gf2m import (
    MODULI,
    coords,
    field_inv,
    field_mul,
    field_text,
    find_tob,
    from_coords,
    trace,
)

ALL_M = list(range(1, 9))


def clmul_mod(x, y, m):
    """Shift-and-xor product reduced by the modulus, no tables."""
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
    mod = MODULI[m]
    for i in reversed(range(m, acc.bit_length())):
        if (acc >> i) & 1:
            acc ^= mod << (i - m)
    return acc


@pytest.mark.parametrize("m", ALL_M)
def test_mul_matches_schoolbook(m):
    q = 1 << m
    rng = random.Random(m)
    pairs = ((x, y) for x in range(q) for y in range(q)) if m <= 4 else \
        ((rng.randrange(q), rng.randrange(q)) for _ in range(2000))
    for x, y in pairs:
        assert field_mul(x, y, m) == clmul_mod(x, y, m)


@pytest.mark.parametrize("m", ALL_M[1:])
def test_generator_order(m):
    # the moduli are primitive, so x=2 must enumerate all nonzero elements
    seen = set()
    x = 1
    for _ in range((1 << m) - 1):
        seen.add(x)
        x = field_mul(x, 2, m)
    assert x == 1
    assert len(seen) == (1 << m) - 1


@pytest.mark.parametrize("m", ALL_M)
def test_inverse(m):
    for x in range(1, 1 << m):
        assert field_mul(x, field_inv(x, m), m) == 1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field_inv(0, 4)


def test_unsupported_degree():
    with pytest.raises(NotFound):
        field_mul(1, 1, 9)
    with pytest.raises(NotFound):
        field_mul(1, 1, 0)


@pytest.mark.parametrize("m", ALL_M)
def test_trace_properties(m):
    q = 1 << m
    values = [trace(x, m) for x in range(q)]
    assert set(values) <= {0, 1}
    assert any(values), "trace cannot vanish identically"
    for x in range(q):
        # Frobenius invariance and additivity
        assert trace(field_mul(x, x, m), m) == values[x]
        for y in (1, q - 1, x):
            assert trace(x ^ y, m) == values[x] ^ values[y]


@pytest.mark.parametrize("m", ALL_M)
def test_tob_gram_identity(m):
    tob = find_tob(m)
    assert len(tob.elements) == m
    for i, a in enumerate(tob.elements):
        for j, b in enumerate(tob.elements):
            assert trace(field_mul(a, b, m), m) == (1 if i == j else 0)


def test_tob_is_deterministic_and_lex_first():
    assert find_tob(1).elements == (1,)
    assert find_tob(2).elements == (2, 3)
    assert find_tob(3) == find_tob(3)


@pytest.mark.parametrize("m", ALL_M)
def test_coords_roundtrip_and_linearity(m):
    tob = find_tob(m)
    q = 1 << m
    for x in range(q):
        assert from_coords(coords(x, tob), tob) == x
    rng = random.Random(17 * m)
    for _ in range(200):
        x, y = rng.randrange(q), rng.randrange(q)
        cx, cy = coords(x, tob), coords(y, tob)
        assert coords(x ^ y, tob) == tuple(p ^ q_ for p, q_ in zip(cx, cy))


def test_field_text():
    assert field_text(0) == "0"
    assert field_text(1) == "1"
    assert field_text(2) == "w"
    assert field_text(3) == "w+1"
    assert field_text(6) == "w^2+w"
