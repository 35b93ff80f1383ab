"""Packed binary linear algebra on uint64 words.

Rows of a binary matrix are stored as little-endian uint64 words: bit i
of word j is column 64*j + i.  Hex serialization of a bit vector packs
most significant bit first within each byte, padded to whole bytes.
"""

import numpy as np

if hasattr(np, "bitwise_count"):
    _bit_count = np.bitwise_count
else:  # numpy < 2.0
    _BYTE_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _bit_count(arr):
        by = arr.reshape(-1, 1).view(np.uint8)
        return _BYTE_POP[by].sum(axis=1, dtype=np.int64).reshape(arr.shape)


def words_for(nbits):
    """Number of uint64 words needed for nbits columns."""
    return max(1, (nbits + 63) // 64)


def pack_bits(bits):
    """Pack a 0/1 vector into little-endian uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    nw = words_for(bits.size)
    by = np.packbits(bits, bitorder="little")
    buf = np.zeros(nw * 8, dtype=np.uint8)
    buf[: by.size] = by
    return buf.view(np.uint64)


def pack_rows(mat):
    """Pack each row of a 0/1 matrix; returns shape (rows, words)."""
    mat = np.asarray(mat, dtype=np.uint8)
    if mat.size == 0:
        return np.zeros((mat.shape[0], words_for(mat.shape[1] if mat.ndim == 2 else 0)),
                        dtype=np.uint64)
    return np.vstack([pack_bits(row) for row in mat])


def unpack_words(words, nbits):
    """Inverse of pack_bits, keeping exactly nbits columns."""
    by = np.asarray(words, dtype=np.uint64).view(np.uint8)
    return np.unpackbits(by, bitorder="little")[:nbits].astype(np.uint8)


def popcount(words):
    """Total number of set bits in a word array."""
    return int(_bit_count(np.asarray(words, dtype=np.uint64)).sum())


def row_weights(mat):
    """Hamming weight of every row of a packed matrix."""
    return _bit_count(mat).sum(axis=1, dtype=np.int64)


def rref(mat, ncols):
    """Reduced row echelon form of a packed binary matrix.

    Args:
        mat: uint64 array of shape (rows, words).
        ncols: number of valid columns.

    Returns:
        (basis, pivots) where basis holds the nonzero reduced rows and
        pivots lists the pivot column of each basis row, increasing.
    """
    M = np.array(mat, dtype=np.uint64, copy=True)
    nrows = M.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        w, b = divmod(c, 64)
        col = (M[r:, w] >> np.uint64(b)) & np.uint64(1)
        hits = np.nonzero(col)[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        sel = ((M[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
        sel[r] = False
        if sel.any():
            M[sel] ^= M[r]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def reduce_row(row, basis, pivots):
    """Reduce one packed row against an rref basis; zero means membership."""
    out = np.array(row, dtype=np.uint64, copy=True)
    for i, c in enumerate(pivots):
        w, b = divmod(c, 64)
        if (int(out[w]) >> b) & 1:
            out ^= basis[i]
    return out


def span(basis):
    """All 2^k combinations of k packed rows, by doubling; row 0 is zero."""
    k, nw = basis.shape
    out = np.zeros((1 << k, nw), dtype=np.uint64)
    size = 1
    for i in range(k):
        out[size: 2 * size] = out[:size] ^ basis[i]
        size *= 2
    return out


def bits_to_hex(bits):
    """Hex string of a 0/1 vector, MSB first within each byte."""
    return np.packbits(np.asarray(bits, dtype=np.uint8)).tobytes().hex()


def hex_to_bits(s, nbits):
    """Inverse of bits_to_hex for a vector of known length."""
    by = np.frombuffer(bytes.fromhex(s), dtype=np.uint8)
    return np.unpackbits(by)[:nbits].astype(np.uint8)
