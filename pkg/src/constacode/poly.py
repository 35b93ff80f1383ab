"""Polynomial arithmetic over GF(2^m) and over R, plus factorization.

Polynomials are dense coefficient lists indexed by power, with no
trailing zeros; the zero polynomial is the empty list.  Field
polynomials (fp_*) hold ints, ring polynomials hold (a, b) pairs.
"Monic" over R means the leading coefficient is exactly (1, 0), not
merely a unit.
"""

import random

from .errors import (
    DivisionByZeroPoly,
    EvenLength,
    NonUnitConstantTerm,
    NonUnitLeadingCoeff,
    NotAFactor,
    NotMonic,
)
from .gf2m import field_inv, field_mul
from .ring import LAMBDA, is_unit, r_inv, r_mul, r_text

_RZERO = (0, 0)
_RONE = (1, 0)

# fixed seed for the equal-degree splitting; output order is canonical
# anyway, this only pins the intermediate random walk
_SPLIT_SEED = 0xFAC7


# ---------------------------------------------------------------------------
# polynomials over GF(2^m)

def fp_trim(p):
    """Drop trailing zero coefficients in place and return the list."""
    while p and p[-1] == 0:
        p.pop()
    return p


def fp_add(p, q):
    """Sum over GF(2^m); characteristic 2, so also the difference."""
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) ^ (q[i] if i < len(q) else 0) for i in range(n)]
    return fp_trim(out)


def fp_mul(p, q, m):
    """Product over GF(2^m)."""
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] ^= field_mul(a, b, m)
    return fp_trim(out)


def fp_divmod(num, den, m):
    """Quotient and remainder over GF(2^m)."""
    if not den:
        raise DivisionByZeroPoly("division by the zero polynomial")
    num = fp_trim(list(num))
    dd = len(den) - 1
    il = field_inv(den[-1], m)
    if len(num) - 1 < dd:
        return [], num
    quo = [0] * (len(num) - dd)
    while num and len(num) - 1 >= dd:
        k = len(num) - 1 - dd
        c = field_mul(num[-1], il, m)
        quo[k] = c
        for j, b in enumerate(den):
            if b:
                num[k + j] ^= field_mul(c, b, m)
        fp_trim(num)
    return fp_trim(quo), num


def fp_mulmod(p, q, mod, m):
    """p*q reduced mod another polynomial."""
    return fp_divmod(fp_mul(p, q, m), mod, m)[1]


def fp_gcd(p, q, m):
    """Monic greatest common divisor over GF(2^m)."""
    a, b = list(p), list(q)
    while b:
        a, b = b, fp_divmod(a, b, m)[1]
    if a and a[-1] != 1:
        il = field_inv(a[-1], m)
        a = [field_mul(c, il, m) for c in a]
    return a


# ---------------------------------------------------------------------------
# polynomials over R

def rp_trim(p):
    """Drop trailing (0, 0) coefficients in place and return the list."""
    while p and p[-1] == _RZERO:
        p.pop()
    return p


def embed(p):
    """Lift a field polynomial into R[x] with zero u-part."""
    return [(c, 0) for c in p]


def mod_u(p):
    """Image in GF(2^m)[x] under u -> 0."""
    return fp_trim([a for a, _ in p])


def degree(p):
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def is_monic(p):
    """Leading coefficient is exactly 1."""
    return bool(p) and p[-1] == _RONE


def rp_add(p, q):
    """Sum over R, componentwise XOR on pairs."""
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else _RZERO
        b = q[i] if i < len(q) else _RZERO
        out.append((a[0] ^ b[0], a[1] ^ b[1]))
    return rp_trim(out)


def rp_mul(p, q, m):
    """Product over R."""
    if not p or not q:
        return []
    out = [_RZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a != _RZERO:
            for j, b in enumerate(q):
                if b != _RZERO:
                    z = r_mul(a, b, m)
                    cur = out[i + j]
                    out[i + j] = (cur[0] ^ z[0], cur[1] ^ z[1])
    return rp_trim(out)


def rp_scale(p, s, m):
    """Multiply every coefficient by the ring element s."""
    return rp_trim([r_mul(s, c, m) for c in p])


def poly_divmod(num, den, m):
    """Quotient and remainder over R; the divisor needs a unit lead."""
    if not den:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if not is_unit(den[-1]):
        raise NonUnitLeadingCoeff(f"leading coefficient {r_text(den[-1])} is not a unit")
    num = rp_trim(list(num))
    dd = len(den) - 1
    il = r_inv(den[-1], m)
    if len(num) - 1 < dd:
        return [], num
    quo = [_RZERO] * (len(num) - dd)
    while num and len(num) - 1 >= dd:
        k = len(num) - 1 - dd
        c = r_mul(num[-1], il, m)
        quo[k] = c
        for j, b in enumerate(den):
            if b != _RZERO:
                z = r_mul(c, b, m)
                cur = num[k + j]
                num[k + j] = (cur[0] ^ z[0], cur[1] ^ z[1])
        rp_trim(num)
    return rp_trim(quo), num


def divides(d, p, m):
    """True when d divides p over R."""
    return not poly_divmod(p, d, m)[1]


def reciprocal(p, m):
    """Monic reciprocal a0^-1 * x^deg(p) * p(1/x); an involution."""
    if not p or not is_unit(p[0]):
        raise NonUnitConstantTerm("constant term must be a unit")
    ia = r_inv(p[0], m)
    return rp_trim([r_mul(ia, c, m) for c in reversed(p)])


def xn_minus_lambda(n):
    """x^n - (1+u), which in characteristic 2 is x^n + (1+u)."""
    return [LAMBDA] + [_RZERO] * (n - 1) + [_RONE]


def coprime_mod_u(p, q, m):
    """Coprimality over R, decided on the images mod u.

    For divisors of x^n - (1+u) this is equivalent to coprimality over
    R itself: a common unit-lead divisor survives mod u, and a Bezout
    identity mod u lifts back because the obstruction is killed by u^2 = 0.
    """
    g = fp_gcd(mod_u(p), mod_u(q), m)
    return len(g) == 1


def mu_lift(p, n, m):
    """Map a monic factor of x^n - 1 to a monic factor of x^n - (1+u).

    Applies x -> (1+u)x and normalizes monic, which sends coefficient
    c_i to c_i * (1+u)^(deg p + i).  Lifting every factor of x^n - 1 and
    multiplying gives back x^n - (1+u) exactly.
    """
    if not p or p[-1] != 1:
        raise NotMonic("mu lift expects a monic polynomial")
    xn1 = [1] + [0] * (n - 1) + [1]
    if fp_divmod(xn1, p, m)[1]:
        raise NotAFactor(f"polynomial does not divide x^{n} - 1")
    k = len(p) - 1
    return [(c, 0) if (k + i) % 2 == 0 else (c, c) for i, c in enumerate(p)]


# ---------------------------------------------------------------------------
# factorization of x^n - 1, odd n (squarefree, so distinct monic factors)

def factor_xn_minus_1(n, m):
    """Monic irreducible factors of x^n - 1 over GF(2^m), sorted.

    Distinct-degree splitting via gcd with x^(q^k) - x, then equal-degree
    splitting with the additive trace map (characteristic 2).  Sorted by
    (degree, coefficient tuple), so the output is canonical.
    """
    if n % 2 == 0:
        raise EvenLength(f"length {n} is even; only odd lengths split squarefree")
    xn1 = [1] + [0] * (n - 1) + [1]
    if n == 1:
        return [[1, 1]]
    rng = random.Random(_SPLIT_SEED)

    stages = []
    rest = xn1
    h = [0, 1]
    k = 1
    while 2 * k <= len(rest) - 1:
        for _ in range(m):
            h = fp_mulmod(h, h, rest, m)
        hx = list(h) + [0] * (2 - len(h))
        hx[1] ^= 1
        fp_trim(hx)
        part = fp_gcd(rest, hx, m) if hx else rest
        if len(part) > 1:
            stages.append((k, part))
            rest = fp_divmod(rest, part, m)[0]
            if len(rest) > 1:
                h = fp_divmod(h, rest, m)[1]
        k += 1
    if len(rest) > 1:
        stages.append((len(rest) - 1, rest))

    def split(g, k):
        if len(g) - 1 == k:
            return [g]
        while True:
            t = [rng.randrange(1 << m) for _ in range(len(g) - 1)]
            fp_trim(t)
            # additive trace T + T^2 + ... + T^(2^(mk-1)) splits in char 2
            s = []
            cur = t
            for _ in range(m * k):
                s = fp_add(s, cur)
                cur = fp_mulmod(cur, cur, g, m)
            d = fp_gcd(g, s, m)
            if 1 < len(d) < len(g):
                co = fp_divmod(g, d, m)[0]
                return split(d, k) + split(co, k)

    factors = []
    for k, g in stages:
        factors.extend(split(g, k))
    factors.sort(key=lambda f: (len(f), tuple(f)))

    check = [1]
    for f in factors:
        check = fp_mul(check, f, m)
    assert check == xn1, "factor product mismatch"
    return factors


# ---------------------------------------------------------------------------
# text grammar: terms joined by +, factors joined by *, powers with ^,
# atoms are x, w, u, decimal field elements, and parenthesized groups

def _paren_if_sum(s):
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            return f"({s})"
    return s


def poly_to_text(p):
    """Canonical text form, highest power first.

    Accepts coefficients in R (pairs) or plain field elements.
    """
    p = [tuple(c) if isinstance(c, (tuple, list)) else (c, 0) for c in p]
    if not rp_trim(list(p)):
        return "0"
    terms = []
    for i in reversed(range(len(p))):
        c = p[i]
        if c == _RZERO:
            continue
        if i == 0:
            terms.append(r_text(c))
            continue
        xpart = "x" if i == 1 else f"x^{i}"
        if c == _RONE:
            terms.append(xpart)
        else:
            terms.append(f"{_paren_if_sum(r_text(c))}*{xpart}")
    return " + ".join(terms)


def _tokenize(s):
    tokens = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            tokens.append(("int", int(s[i:j])))
            i = j
        elif ch in "xwu+-*^()":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} in polynomial text")
    tokens.append(("end", None))
    return tokens


class _Parser:
    """Recursive descent over R[x]; '-' is accepted as '+' (char 2)."""

    def __init__(self, tokens, m):
        self.tokens = tokens
        self.pos = 0
        self.m = m

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in "+-":
            self.take()
            acc = rp_add(acc, self.term())
        return acc

    def term(self):
        acc = self.power()
        while self.peek() == "*":
            self.take()
            acc = rp_mul(acc, self.power(), self.m)
        return acc

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be a decimal integer")
            out = [_RONE]
            for _ in range(val):
                out = rp_mul(out, base, self.m)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            if val >= (1 << self.m):
                raise ValueError(f"field element {val} out of range for m={self.m}")
            return [(val, 0)] if val else []
        if kind == "x":
            return [_RZERO, _RONE]
        if kind == "w":
            if self.m < 2:
                raise ValueError("w needs m >= 2")
            return [(2, 0)]
        if kind == "u":
            return [(0, 1)]
        if kind == "(":
            inner = self.expr()
            kind, _ = self.take()
            if kind != ")":
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {kind!r}")


def poly_from_text(s, m):
    """Parse the text grammar into a polynomial over R."""
    parser = _Parser(_tokenize(s), m)
    out = parser.expr()
    if parser.peek() != "end":
        raise ValueError("trailing input after polynomial")
    return out
