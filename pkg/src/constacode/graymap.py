"""The Gray map, Lee weights, and the shift/permutation operators.

Words over R are lists of (a, b) pairs of length n.  The Gray image is
a 0/1 numpy vector of length 2mn viewed as 2n blocks of m bits: writing
a coordinate as r + u*q, blocks 0..n-1 hold the basis coordinates of q
and blocks n..2n-1 hold those of r + q.  With Lee weight
w(a + ub) = wt(q) + wt(r + q) the map is a weight-preserving bijection
onto (F_2^(2mn), Hamming).
"""

from functools import lru_cache

import numpy as np

from .errors import BadBlocking, EvenLengthUnsupported, LengthMismatch
from .gf2m import _coords_table


@lru_cache(maxsize=None)
def _gray_table(tob):
    """Per-element Gray blocks: element (a, b) -> (coords(b), coords(a^b))."""
    ct = _coords_table(tob)
    q = 1 << tob.m
    return tuple(tuple((ct[b], ct[a ^ b]) for b in range(q)) for a in range(q))


def phi(w, tob):
    """Gray image of a word over R as a 0/1 vector of length 2mn."""
    table = _gray_table(tob)
    qpart = []
    rpart = []
    for a, b in w:
        qc, rc = table[a][b]
        qpart.extend(qc)
        rpart.extend(rc)
    return np.array(qpart + rpart, dtype=np.uint8)


@lru_cache(maxsize=None)
def _lee_table(tob):
    table = _gray_table(tob)
    q = 1 << tob.m
    return tuple(tuple(sum(table[a][b][0]) + sum(table[a][b][1]) for b in range(q))
                 for a in range(q))


def lee_weight(x, tob):
    """Lee weight of one ring element: wt(coords(b)) + wt(coords(a+b))."""
    return _lee_table(tob)[x[0]][x[1]]


def word_lee_weight(w, tob):
    """Lee weight of a word, the sum over its coordinates."""
    table = _lee_table(tob)
    return sum(table[a][b] for a, b in w)


def lee_distance(x, y, tob):
    """Lee distance, the Lee weight of the difference."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    table = _lee_table(tob)
    return sum(table[a ^ c][b ^ d] for (a, b), (c, d) in zip(x, y))


def nu_shift(w):
    """Constacyclic shift: (c0,...,c_{n-1}) -> ((1+u)c_{n-1}, c0,...)."""
    a, b = w[-1]
    # (1+u)(a+ub) = a + u(a+b)
    return [(a, a ^ b)] + list(w[:-1])


def sigma_shift(w):
    """Plain cyclic shift by one coordinate."""
    return [w[-1]] + list(w[:-1])


def sigma_m_shift(v, m):
    """Rotate the Gray image right by one m-bit block."""
    if len(v) % (2 * m):
        raise BadBlocking(f"length {len(v)} does not split into 2n blocks of {m}")
    return np.concatenate((v[-m:], v[:-m]))


def mu_bar(w):
    """Scale coordinate i by (1+u)^i; an involution since (1+u)^2 = 1."""
    return [(a, a ^ b) if i % 2 else (a, b) for i, (a, b) in enumerate(w)]


def nechaev_permutation(v, n, m):
    """Swap Gray block 2i+1 with block n+2i+1 for 0 <= i <= (n-3)/2.

    Conjugates the Gray image of the plain cyclic shift into that of the
    constacyclic one; defined for odd n only.
    """
    if n % 2 == 0:
        raise EvenLengthUnsupported(f"block permutation needs odd n, got {n}")
    if len(v) != 2 * m * n:
        raise BadBlocking(f"length {len(v)} is not 2*{m}*{n}")
    out = np.array(v, copy=True)
    for i in range((n - 1) // 2):
        lo = (2 * i + 1) * m
        hi = (n + 2 * i + 1) * m
        tmp = out[lo: lo + m].copy()
        out[lo: lo + m] = out[hi: hi + m]
        out[hi: hi + m] = tmp
    return out


def check_commuting_nu(w, tob):
    """Gray image of the constacyclic shift equals the block rotation."""
    return np.array_equal(phi(nu_shift(w), tob), sigma_m_shift(phi(w, tob), tob.m))


def check_commuting_mu(w, tob):
    """Gray image of the (1+u)^i scaling equals the block swap."""
    n = len(w)
    if n % 2 == 0:
        raise EvenLengthUnsupported(f"check needs odd length, got {n}")
    return np.array_equal(phi(mu_bar(w), tob),
                          nechaev_permutation(phi(w, tob), n, tob.m))
