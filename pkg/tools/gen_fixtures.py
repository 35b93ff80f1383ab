"""Regenerate the worked-example descriptors shipped with the package.

Each fixture pins one published code: the exact base-field factors
that form f, g and h are written out so reproduction never depends on
factor ordering.  Run from the repository root:

    python3 tools/gen_fixtures.py
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from constacode.codes import build_code, to_descriptor
from constacode.poly import fp_divmod, fp_mul, mu_lift, rp_mul

OUT = Path(__file__).resolve().parents[1] / "src" / "constacode" / "fixtures"


def lift_product(bases, n, m):
    out = [(1, 0)]
    for p in bases:
        out = rp_mul(out, mu_lift(p, n, m), m)
    return out


def complement(bases, n, m):
    """The cofactor of prod(bases) in x^n - 1, as a base-field polynomial."""
    xn1 = [1] + [0] * (n - 1) + [1]
    prod = [1]
    for p in bases:
        prod = fp_mul(prod, p, m)
    quot, rem = fp_divmod(xn1, prod, m)
    assert not rem
    return quot


def main():
    m = 2
    fixtures = {}

    # n = 3: x^3 - 1 = (x+1)(x+w)(x+w^2)
    # first code <u f g>, second <f g, u f h> with f = x+1, g = x+w, h = x+w^2
    n = 3
    fixtures["5_5_c1"] = build_code(
        lift_product([[1, 1], [2, 1]], n, m), [(1, 0)],
        mu_lift([3, 1], n, m), n, m)
    fixtures["5_5_c2"] = build_code(
        mu_lift([1, 1], n, m), mu_lift([3, 1], n, m),
        mu_lift([2, 1], n, m), n, m)

    # n = 5: <f g, u f h> with f = x+1, g = x^2+wx+1, h = x^2+w^2x+1
    n = 5
    fixtures["5_5_n5"] = build_code(
        mu_lift([1, 1], n, m), mu_lift([1, 3, 1], n, m),
        mu_lift([1, 2, 1], n, m), n, m)

    # n = 85: f is the product of two chosen quartics, h = 1
    n = 85
    q1 = [1, 3, 2, 2, 1]
    q2 = [1, 3, 3, 2, 1]
    fixtures["6_6_85"] = build_code(
        lift_product([q1, q2], n, m),
        mu_lift(complement([q1, q2], n, m), n, m), [(1, 0)], n, m)

    # n = 93: f is a quintic times a linear, h a chosen quintic
    n = 93
    a = [2, 3, 0, 2, 3, 1]
    b = [2, 1]
    h = [1, 0, 1, 1, 1, 1]
    fixtures["6_6_93"] = build_code(
        lift_product([a, b], n, m),
        mu_lift(complement([a, b, h], n, m), n, m),
        mu_lift(h, n, m), n, m)

    OUT.mkdir(exist_ok=True)
    for name, code in fixtures.items():
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(to_descriptor(code)) + "\n")
        print(f"wrote {path} (n={code.n}, deg f={len(code.f) - 1}, "
              f"deg g={code.k1}, deg h={code.k2})")


if __name__ == "__main__":
    main()
