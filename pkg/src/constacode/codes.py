"""Constacyclic codes over R from factor triples, and binary codes.

A code is stored intensionally by monic pairwise coprime f, g, h with
f*g*h = x^n - (1+u); the code itself is the ideal generated by f*h and
u*f*g in R[x]/(x^n - (1+u)).  Codewords are never enumerated here, the
binary Gray image carries all membership questions instead.
"""

import numpy as np

from . import _bits
from .errors import (
    BadFactorization,
    LengthMismatch,
    NotCoprime,
    NotMonic,
    RankMismatch,
)
from .graymap import nu_shift, phi
from .poly import (
    coprime_mod_u,
    degree,
    divides,
    is_monic,
    poly_divmod,
    reciprocal,
    rp_mul,
    rp_trim,
    xn_minus_lambda,
)
from .ring import r_mul


class BinaryCode:
    """Binary linear code as a generator matrix with cached reduced form.

    Attributes:
        length: number of bit positions.
        rows: the generator rows as given, shape (r, length) uint8.
        dimension: rank of the rows.
    """

    def __init__(self, rows, length):
        rows = np.asarray(rows, dtype=np.uint8)
        if rows.ndim != 2:
            rows = rows.reshape(-1, length)
        if rows.shape[0] and rows.shape[1] != length:
            raise LengthMismatch(f"rows have {rows.shape[1]} columns, length is {length}")
        self.length = length
        self.rows = rows
        self.words = _bits.pack_rows(rows) if rows.shape[0] else \
            np.zeros((0, _bits.words_for(length)), dtype=np.uint64)
        self.basis_words, self.pivots = _bits.rref(self.words, length)
        self.dimension = len(self.pivots)

    def basis_bits(self):
        """The rref basis rows as a 0/1 matrix."""
        return np.array([_bits.unpack_words(r, self.length) for r in self.basis_words],
                        dtype=np.uint8).reshape(self.dimension, self.length)

    def contains_bits(self, bits):
        """Row space membership test for one 0/1 vector."""
        if len(bits) != self.length:
            raise LengthMismatch(f"word length {len(bits)}, code length {self.length}")
        residue = _bits.reduce_row(_bits.pack_bits(bits), self.basis_words, self.pivots)
        return not residue.any()

    def to_json(self):
        """Length, dimension, and the rref basis rows as hex strings."""
        return {
            "length": self.length,
            "dimension": self.dimension,
            "rows": [_bits.bits_to_hex(_bits.unpack_words(r, self.length))
                     for r in self.basis_words],
        }


class ConstaCode:
    """A (1+u)-constacyclic code, held as its factor triple.

    Built through build_code, which validates the triple.  k1 and k2 are
    the degrees of g and h; the number of codewords is 2^(m*(2*k1+k2)).
    """

    def __init__(self, n, m, f, g, h):
        self.n = n
        self.m = m
        self.f = f
        self.g = g
        self.h = h
        self.k1 = degree(g)
        self.k2 = degree(h)
        self._gray = {}

    def __eq__(self, other):
        return (isinstance(other, ConstaCode)
                and (self.n, self.m, self.f, self.g, self.h)
                == (other.n, other.m, other.f, other.g, other.h))

    def __repr__(self):
        return f"ConstaCode(n={self.n}, m={self.m}, k1={self.k1}, k2={self.k2})"


def build_code(f, g, h, n, m):
    """Validate a factor triple and return the code it generates.

    Checks that each part is monic, that f*g*h = x^n - (1+u), and that
    the parts are pairwise coprime.  For a correct product over the
    squarefree x^n - 1 the coprimality is automatic; the check stays as
    a guard against inconsistent inputs.
    """
    f, g, h = rp_trim(list(f)), rp_trim(list(g)), rp_trim(list(h))
    for name, p in (("f", f), ("g", g), ("h", h)):
        if not is_monic(p):
            raise NotMonic(f"{name} is not monic")
    if rp_mul(rp_mul(f, g, m), h, m) != xn_minus_lambda(n):
        raise BadFactorization(f"f*g*h is not x^{n} - (1+u)")
    for an, a, bn, b in (("f", f, "g", g), ("f", f, "h", h), ("g", g, "h", h)):
        if not coprime_mod_u(a, b, m):
            raise NotCoprime(f"{an} and {bn} share a factor")
    return ConstaCode(n, m, f, g, h)


def cardinality(code):
    """Number of codewords, 2^(m*(2*deg g + deg h))."""
    return 1 << (code.m * (2 * code.k1 + code.k2))


def dual(code):
    """The dual code, generated by the reciprocal triple (g*, f*, h*)."""
    m = code.m
    return build_code(reciprocal(code.g, m), reciprocal(code.f, m),
                      reciprocal(code.h, m), code.n, m)


def is_dual_containing(code):
    """True when the dual lies inside the code: f divides g*."""
    return divides(code.f, reciprocal(code.g, code.m), code.m)


def _word_of(p, code):
    """Coefficient word of a polynomial reduced mod x^n - (1+u)."""
    rem = poly_divmod(p, xn_minus_lambda(code.n), code.m)[1]
    w = [(0, 0)] * code.n
    for i, c in enumerate(rem):
        w[i] = c
    return w


def _scale_word(w, s, m):
    return [r_mul(s, c, m) for c in w]


def r_basis_words(code):
    """An F_2-basis of the code as words over R.

    The module structure gives codewords a(x)*f*h + u*b(x)*f*g with a
    over R of degree below deg g and b over the field of degree below
    deg h, hence the basis {a_t x^i fh}, {u a_t x^i fh} (i < deg g) and
    {u a_t x^i fg} (i < deg h) with a_t running over the bit basis of
    the field.  Multiplying by x mod x^n - (1+u) is the nu shift.
    """
    m = code.m
    out = []
    fh = _word_of(rp_mul(code.f, code.h, m), code)
    cur = fh
    for _ in range(code.k1):
        for t in range(m):
            out.append(_scale_word(cur, (1 << t, 0), m))
            out.append(_scale_word(cur, (0, 1 << t), m))
        cur = nu_shift(cur)
    fg = _word_of(rp_mul(code.f, code.g, m), code)
    cur = [(0, a) for a, _ in fg]
    for _ in range(code.k2):
        for t in range(m):
            out.append(_scale_word(cur, (1 << t, 0), m))
        cur = nu_shift(cur)
    return out


def generator_matrix_gray(code, tob):
    """Gray image of the code as a BinaryCode of length 2mn.

    Rows are Gray images of the spanning words x^i*f*h for
    i < deg g + deg h and u*x^i*f*g for i < deg h, each also scaled by
    every field basis element and by u times it.  The rank must come
    out as m*(2*deg g + deg h), anything else signals a broken triple.
    """
    key = tob.elements
    if key in code._gray:
        return code._gray[key]
    m = code.m
    rows = []
    fh = _word_of(rp_mul(code.f, code.h, m), code)
    cur = fh
    for _ in range(code.k1 + code.k2):
        for t in range(m):
            rows.append(phi(_scale_word(cur, (1 << t, 0), m), tob))
            rows.append(phi(_scale_word(cur, (0, 1 << t), m), tob))
        cur = nu_shift(cur)
    fg = _word_of(rp_mul(code.f, code.g, m), code)
    cur = [(0, a) for a, _ in fg]
    for _ in range(code.k2):
        for t in range(m):
            rows.append(phi(_scale_word(cur, (1 << t, 0), m), tob))
        cur = nu_shift(cur)
    length = 2 * m * code.n
    bc = BinaryCode(np.array(rows, dtype=np.uint8) if rows else
                    np.zeros((0, length), dtype=np.uint8), length)
    want = m * (2 * code.k1 + code.k2)
    if bc.dimension != want:
        raise RankMismatch(f"rank {bc.dimension}, cardinality wants {want}")
    code._gray[key] = bc
    return bc


def contains(code, w, tob):
    """Membership of a word over R, decided on the Gray image."""
    if len(w) != code.n:
        raise LengthMismatch(f"word length {len(w)}, code length {code.n}")
    return generator_matrix_gray(code, tob).contains_bits(phi(w, tob))


def to_descriptor(code):
    """JSON-ready descriptor {n, m, f, g, h} with coefficient pair lists."""
    return {
        "n": code.n,
        "m": code.m,
        "f": [list(c) for c in code.f],
        "g": [list(c) for c in code.g],
        "h": [list(c) for c in code.h],
    }


def from_descriptor(desc):
    """Rebuild and revalidate a code from its descriptor."""
    f = [tuple(c) for c in desc["f"]]
    g = [tuple(c) for c in desc["g"]]
    h = [tuple(c) for c in desc["h"]]
    return build_code(f, g, h, int(desc["n"]), int(desc["m"]))
