"""Command-line front end.

Subcommands
-----------
factor      list the monic irreducible factors of x^n - 1 over F_2^m,
            optionally with their lifts to factors of x^n - (1+u)
build       assemble a code from f/g/h given in polynomial text form,
            print its report and a descriptor other commands accept
verify      re-run the report for a descriptor (file, "-" for stdin,
            or the name of a shipped example)
gray        binary generator matrix of the Gray image, rows in hex
distance    minimum distance of the Gray image (exact or searched)
quantum     CSS parameters of a dual-containing code
reproduce   check the shipped examples against their published values

Examples
--------
  constacode factor -n 85 -m 2
  constacode factor -n 5 -m 2 --lift --paper-form
  constacode build -n 3 -m 2 --f "x + 1+u" --g "x + w*(1+u)" \
      --h "x + (w+1)*(1+u)" --output json
  constacode quantum 6.6-85 --budget 100000
  constacode reproduce all --output json

Exit codes: 0 success, 1 reproduction mismatch, 2 invalid input.
"""

import argparse
import json
import sys
from importlib import resources

from .analysis import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    css_params,
    min_distance_exact,
    min_distance_upper_bound,
    warm_search_kernel,
    _max_enum,
)
from .codes import (
    build_code,
    cardinality,
    dual,
    from_descriptor,
    generator_matrix_gray,
    is_dual_containing,
    to_descriptor,
)
from .errors import ConstacodeError
from .gf2m import find_tob
from .poly import (
    degree,
    factor_xn_minus_1,
    mu_lift,
    poly_from_text,
    poly_to_text,
    rp_scale,
)
from .ring import LAMBDA

FIXTURES = {
    "5.5-c1": "5_5_c1.json",
    "5.5-c2": "5_5_c2.json",
    "5.5-n5": "5_5_n5.json",
    "6.6-85": "6_6_85.json",
    "6.6-93": "6_6_93.json",
}

# published parameters the reproduce command checks against
EXPECTED_GRAY = {
    "5.5-c1": (12, 2, 8),
    "5.5-c2": (12, 6, 4),
    "5.5-n5": (20, 12, 4),
}
EXPECTED_QUANTUM = {
    "6.6-85": {"log2_card": 308, "n": 340, "k": 276, "d_max": 5},
    "6.6-93": {"log2_card": 338, "n": 372, "k": 304, "d_max": 5},
}

REPRODUCE_SETS = {
    "5.5": ["5.5-c1", "5.5-c2", "5.5-n5"],
    "6.6-85": ["6.6-85"],
    "6.6-93": ["6.6-93"],
    "all": ["5.5-c1", "5.5-c2", "5.5-n5", "6.6-85", "6.6-93"],
}


def _load_descriptor(source):
    """Descriptor from a shipped example name, "-" for stdin, or a path."""
    if source in FIXTURES:
        ref = resources.files("constacode") / "fixtures" / FIXTURES[source]
        return json.loads(ref.read_text())
    if source == "-":
        return json.load(sys.stdin)
    with open(source) as fh:
        return json.load(fh)


def paper_form(p, m):
    """Unit-scaled display of a lifted factor.

    A monic lift of even degree appears in print scaled by 1+u, which
    is the same polynomial up to a unit; odd degrees print as-is.
    """
    return rp_scale(p, LAMBDA, m) if degree(p) % 2 == 0 else p


def _emit(payload, lines, output):
    if output == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommand bodies

def cmd_factor(n, m, lift=False, use_paper_form=False, output="table"):
    """List factors of x^n - 1, optionally lifted to x^n - (1+u)."""
    factors = factor_xn_minus_1(n, m)
    items = []
    lines = [f"x^{n} - 1 over GF(2^{m}): {len(factors)} irreducible factors"]
    for p in factors:
        entry = {"degree": len(p) - 1, "coeffs": list(p),
                 "text": poly_to_text(p)}
        line = f"  {entry['text']}"
        if lift:
            q = mu_lift(p, n, m)
            shown = paper_form(q, m) if use_paper_form else q
            entry["lift_coeffs"] = [list(c) for c in shown]
            entry["lift_text"] = poly_to_text(shown)
            line += f"   ->   {entry['lift_text']}"
        items.append(entry)
        lines.append(line)
    _emit({"n": n, "m": m, "count": len(factors), "factors": items},
          lines, output)
    return 0


def _report(code, tob):
    """Descriptor of the code with report fields merged in, so the
    JSON emitted by build/verify is itself accepted as a descriptor."""
    bc = generator_matrix_gray(code, tob)
    exp = code.m * (2 * code.k1 + code.k2)
    return {
        **to_descriptor(code),
        "cardinality_log2": exp,
        "dual": to_descriptor(dual(code)),
        "dual_containing": is_dual_containing(code),
        "gray": [bc.length, bc.dimension],
    }


def cmd_build_verify(descriptor, output="table"):
    """Validate a triple and print the code's report."""
    code = from_descriptor(descriptor)
    tob = find_tob(code.m)
    rep = _report(code, tob)
    assert cardinality(code) == 1 << rep["cardinality_log2"]
    lines = [
        f"n = {code.n}, m = {code.m}",
        f"f = {poly_to_text(code.f)}",
        f"g = {poly_to_text(code.g)}",
        f"h = {poly_to_text(code.h)}",
        f"|C| = 2^{rep['cardinality_log2']}",
        f"dual: f = {poly_to_text(rep['dual']['f'])}",
        f"      g = {poly_to_text(rep['dual']['g'])}",
        f"      h = {poly_to_text(rep['dual']['h'])}",
        f"dual-containing: {'yes' if rep['dual_containing'] else 'no'}",
        f"Gray image: [{rep['gray'][0]}, {rep['gray'][1]}]",
    ]
    _emit(rep, lines, output)
    return 0


def cmd_gray(descriptor, output="table"):
    code = from_descriptor(descriptor)
    bc = generator_matrix_gray(code, find_tob(code.m))
    payload = bc.to_json()
    lines = [f"[{bc.length}, {bc.dimension}] binary code, rref basis:"]
    lines += [f"  {row}" for row in payload["rows"]]
    _emit(payload, lines, output)
    return 0


def cmd_distance(descriptor, mode="auto", budget=DEFAULT_BUDGET,
                 seed=DEFAULT_SEED, output="table"):
    code = from_descriptor(descriptor)
    bc = generator_matrix_gray(code, find_tob(code.m))
    if mode == "auto":
        mode = "exact" if (1 << bc.dimension) <= _max_enum() else "upper_bound"
    if mode == "exact":
        report = min_distance_exact(bc)
    else:
        warm_search_kernel()
        report = min_distance_upper_bound(bc, budget=budget, seed=seed)
    payload = report.to_json()
    rel = "=" if report.mode == "exact" else "<="
    lines = [
        f"d {rel} {report.value}  ({report.mode}, effort {report.effort})",
        f"witness: {payload['witness_hex']}",
    ]
    _emit(payload, lines, output)
    return 0


def cmd_quantum(descriptor, mode="auto", budget=DEFAULT_BUDGET,
                seed=DEFAULT_SEED, output="table"):
    code = from_descriptor(descriptor)
    if mode != "exact":
        warm_search_kernel()
    params = css_params(code, find_tob(code.m), distance_mode=mode,
                        budget=budget, seed=seed)
    _emit(params.to_json(), [params.pretty()], output)
    return 0


def _check(rows, example, name, expected, got):
    rows.append({"example": example, "check": name,
                 "expected": expected, "got": got,
                 "pass": expected == got})


def cmd_reproduce(example, budget=DEFAULT_BUDGET, seed=DEFAULT_SEED,
                  output="table"):
    """Rebuild shipped examples and compare with their published values."""
    if any(name in EXPECTED_QUANTUM for name in REPRODUCE_SETS[example]):
        warm_search_kernel()
    rows = []
    for name in REPRODUCE_SETS[example]:
        code = from_descriptor(_load_descriptor(name))
        tob = find_tob(code.m)
        bc = generator_matrix_gray(code, tob)
        if name in EXPECTED_GRAY:
            n, k, d = EXPECTED_GRAY[name]
            got = [bc.length, bc.dimension, min_distance_exact(bc).value]
            _check(rows, name, "gray [n, k, d]", [n, k, d], got)
        else:
            exp = EXPECTED_QUANTUM[name]
            _check(rows, name, "dual-containing", True,
                   is_dual_containing(code))
            _check(rows, name, "cardinality log2", exp["log2_card"],
                   code.m * (2 * code.k1 + code.k2))
            if rows[-2]["pass"]:
                params = css_params(code, tob, distance_mode="upper_bound",
                                    budget=budget, seed=seed)
                _check(rows, name, "quantum [n, k]", [exp["n"], exp["k"]],
                       [params.length, params.logical_dim_exponent])
                _check(rows, name, f"found d <= {exp['d_max']}", True,
                       params.distance.value <= exp["d_max"])
    ok = all(r["pass"] for r in rows)
    lines = []
    for r in rows:
        mark = "PASS" if r["pass"] else "FAIL"
        lines.append(f"{mark}  {r['example']:<8} {r['check']:<18} "
                     f"expected {r['expected']}  got {r['got']}")
    lines.append("all checks passed" if ok else "MISMATCH")
    _emit({"results": rows, "pass": ok}, lines, output)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument wiring

def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"),
                        default="table", help="output format")
    common.add_argument("--seed", type=lambda s: int(s, 0),
                        default=DEFAULT_SEED,
                        help="search seed (default 0x%(default)X)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search iterations (default %(default)s)")
    common.add_argument("--paper-form", action="store_true",
                        help="print lifted factors unit-scaled as published")

    parser = argparse.ArgumentParser(
        prog="constacode",
        description="(1+u)-constacyclic codes over F_2^m + uF_2^m, their "
                    "binary Gray images, and CSS quantum codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common],
                       help="factor x^n - 1 over GF(2^m)")
    p.add_argument("-n", type=int, required=True, help="length (odd)")
    p.add_argument("-m", type=int, required=True, help="field degree 1..8")
    p.add_argument("--lift", action="store_true",
                   help="also print lifts to factors of x^n - (1+u)")

    p = sub.add_parser("build", parents=[common],
                       help="build a code from f/g/h in text form")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--f", required=True, metavar="POLY")
    p.add_argument("--g", required=True, metavar="POLY")
    p.add_argument("--h", required=True, metavar="POLY")

    for name, extra in (("verify", ()), ("gray", ()),
                        ("distance", ("mode",)), ("quantum", ("mode",))):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("descriptor",
                       help="descriptor path, '-' for stdin, or one of "
                            + ", ".join(sorted(FIXTURES)))
        if extra:
            p.add_argument("--mode", choices=("auto", "exact", "upper_bound"),
                           default="auto")

    p = sub.add_parser("reproduce", parents=[common],
                       help="check shipped examples against published values")
    p.add_argument("example", choices=sorted(REPRODUCE_SETS))
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "factor":
            return cmd_factor(args.n, args.m, lift=args.lift,
                              use_paper_form=args.paper_form,
                              output=args.output)
        if args.command == "build":
            desc = to_descriptor(build_code(
                poly_from_text(args.f, args.m),
                poly_from_text(args.g, args.m),
                poly_from_text(args.h, args.m), args.n, args.m))
            return cmd_build_verify(desc, output=args.output)
        if args.command == "verify":
            return cmd_build_verify(_load_descriptor(args.descriptor),
                                    output=args.output)
        if args.command == "gray":
            return cmd_gray(_load_descriptor(args.descriptor),
                            output=args.output)
        if args.command == "distance":
            return cmd_distance(_load_descriptor(args.descriptor),
                                mode=args.mode, budget=args.budget,
                                seed=args.seed, output=args.output)
        if args.command == "quantum":
            return cmd_quantum(_load_descriptor(args.descriptor),
                               mode=args.mode, budget=args.budget,
                               seed=args.seed, output=args.output)
        if args.command == "reproduce":
            return cmd_reproduce(args.example, budget=args.budget,
                                 seed=args.seed, output=args.output)
        raise AssertionError(args.command)
    except ConstacodeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: descriptor is missing key {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
