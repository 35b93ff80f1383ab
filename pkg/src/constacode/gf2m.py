"""Arithmetic in GF(2^m) for 1 <= m <= 8.

Field elements are plain ints in [0, 2^m): bit i is the coefficient of
alpha^i in the polynomial basis, where alpha is a root of the fixed
irreducible modulus for degree m.  Addition is bitwise XOR.
Multiplication goes through log/exp tables built once per degree.

Also provides the absolute trace down to F_2 and the canonical
trace-orthogonal basis used to expand field elements into bit
coordinates.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, NotFound

# Fixed irreducible modulus per extension degree, as a bit mask.
# All of them are primitive, so x generates the multiplicative group.
MODULI = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1000011,     # x^6 + x + 1
    7: 0b10001001,    # x^7 + x^3 + 1
    8: 0b100011101,   # x^8 + x^4 + x^3 + x^2 + 1
}


@lru_cache(maxsize=None)
def _tables(m):
    """Build (exp, log) tables for GF(2^m) by iterating x -> x*alpha."""
    q = 1 << m
    mod = MODULI.get(m)
    if mod is None:
        raise NotFound(f"no modulus for m={m}; supported range is 1..8")
    exp = [0] * (2 * (q - 1))
    log = [0] * q
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & q:
            x ^= mod
    if x != 1:
        raise NotFound(f"modulus for m={m} is not primitive")
    for i in range(q - 1, 2 * (q - 1)):
        exp[i] = exp[i - (q - 1)]
    return exp, log


def field_mul(x, y, m):
    """Product of two elements of GF(2^m)."""
    if x == 0 or y == 0:
        return 0
    if m == 1:
        return x & y
    exp, log = _tables(m)
    return exp[log[x] + log[y]]


def field_inv(x, m):
    """Multiplicative inverse in GF(2^m); raises DivisionByZero on 0."""
    if x == 0:
        raise DivisionByZero("0 has no multiplicative inverse")
    if m == 1:
        return 1
    exp, log = _tables(m)
    return exp[(1 << m) - 1 - log[x]]


def trace(x, m):
    """Absolute trace x + x^2 + x^4 + ... + x^(2^(m-1)), always 0 or 1."""
    t = 0
    y = x
    for _ in range(m):
        t ^= y
        y = field_mul(y, y, m)
    assert t in (0, 1)
    return t


@dataclass(frozen=True)
class TraceOrthogonalBasis:
    """Ordered F_2-basis of GF(2^m) whose trace Gram matrix is the identity.

    Tr(elements[i] * elements[j]) is 1 when i = j and 0 otherwise, which
    makes trace act as a coordinate extractor (see coords).
    """

    m: int
    elements: tuple


@lru_cache(maxsize=None)
def find_tob(m):
    """Canonical trace-orthogonal basis of GF(2^m) over F_2.

    Depth-first search over elements in increasing bit order; returns the
    lexicographically first basis satisfying the Gram identity, so the
    result is the same on every run.  The Gram identity already forces
    linear independence, so no separate rank check is needed.
    """
    q = 1 << m
    picked = []

    def fits(c):
        if trace(field_mul(c, c, m), m) != 1:
            return False
        return all(trace(field_mul(c, b, m), m) == 0 for b in picked)

    def dfs(start):
        if len(picked) == m:
            return True
        for c in range(start, q):
            if fits(c):
                picked.append(c)
                if dfs(c + 1):
                    return True
                picked.pop()
        return False

    if not dfs(1):
        raise NotFound(f"no trace-orthogonal basis for m={m}")
    return TraceOrthogonalBasis(m, tuple(picked))


@lru_cache(maxsize=None)
def _coords_table(tob):
    """coords(x) for every x, precomputed since m <= 8 keeps this tiny."""
    m = tob.m
    table = []
    for x in range(1 << m):
        table.append(tuple(trace(field_mul(x, a, m), m) for a in tob.elements))
    return tuple(table)


def coords(x, tob):
    """Coordinates of x over the basis: x = sum coords[i] * elements[i].

    For a trace-orthogonal basis the i-th coordinate is Tr(x * elements[i]).
    """
    return _coords_table(tob)[x]


def from_coords(bits, tob):
    """Inverse of coords: rebuild the field element from its bit vector."""
    x = 0
    for bit, a in zip(bits, tob.elements):
        if bit:
            x ^= a
    return x


def field_text(x):
    """Pretty form as a polynomial in w, e.g. 0, 1, w, w^2, w+1."""
    if x == 0:
        return "0"
    parts = []
    for i in reversed(range(x.bit_length())):
        if (x >> i) & 1:
            parts.append("1" if i == 0 else ("w" if i == 1 else f"w^{i}"))
    return "+".join(parts)
