"""The chain ring R = GF(2^m) + u*GF(2^m) with u^2 = 0.

Elements are pairs (a, b) standing for a + u*b.  The non-units are
exactly the pairs with a = 0, and the constacyclic constant is
lambda = 1 + u = (1, 1), an involution since (1+u)^2 = 1.
"""

from .errors import NotAUnit
from .gf2m import field_inv, field_mul, field_text

# 1 + u, the shift constant.  The pair encoding does not depend on m.
LAMBDA = (1, 1)


def r_add(x, y):
    """Sum in R, componentwise XOR."""
    return (x[0] ^ y[0], x[1] ^ y[1])


def r_mul(x, y, m):
    """Product in R: (a+ub)(c+ud) = ac + u(ad+bc) because u^2 = 0."""
    a, b = x
    c, d = y
    return (field_mul(a, c, m), field_mul(a, d, m) ^ field_mul(b, c, m))


def is_unit(x):
    """a + ub is invertible exactly when a is nonzero."""
    return x[0] != 0


def r_inv(x, m):
    """Inverse of a unit: (a+ub)^-1 = a^-1 + u*(a^-2)*b."""
    a, b = x
    if a == 0:
        raise NotAUnit(f"{x} is not a unit (free part is 0)")
    ia = field_inv(a, m)
    return (ia, field_mul(field_mul(ia, ia, m), b, m))


def lambda_unit(m):
    """The constant 1 + u; the same pair for every degree m."""
    return LAMBDA


def r_text(x):
    """Pretty form, e.g. 0, w, u, 1+u, w*(1+u), w + u*w^2."""
    a, b = x
    if b == 0:
        return field_text(a)
    bt = field_text(b)
    if "+" in bt:
        bt = f"({bt})"
    if a == 0:
        return "u" if b == 1 else f"u*{bt}"
    if a == b:
        if a == 1:
            return "1+u"
        at = field_text(a)
        if "+" in at:
            at = f"({at})"
        return f"{at}*(1+u)"
    if b == 1:
        return f"{field_text(a)} + u"
    return f"{field_text(a)} + u*{bt}"
