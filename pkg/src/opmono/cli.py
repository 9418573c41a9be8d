"""Command-line interface.

Subcommands: count, sequence, table, enumerate, series, growth, paths,
trees, verify, bfile.  Exit codes: 0 success, 1 verification mismatch,
2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics, bijections, counting, fixtures, oracle, series
from .monomial import Regime, encode_word, format_monomial, word_to_text

REGIME_CODES = [r.value for r in Regime]


def _svec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad multiplicity vector {text!r}; expected e.g. 2,1") from None


def _add_regime(sp, default=None):
    kwargs = {"required": True} if default is None else {"default": default}
    sp.add_argument("--regime", choices=REGIME_CODES, **kwargs)


def cmd_count(args) -> int:
    s = _svec(args.s)
    regime = Regime.from_code(args.regime)
    if args.oracle:
        value = len(oracle.enumerate_monomials(args.d, args.r, s, regime, cap=args.cap))
    else:
        value = counting.count(regime, args.d, args.r, s)
    print(value)
    return 0


def _sequence_terms(args) -> list[int]:
    regime = Regime.from_code(args.regime)
    step = 2 if args.ell % 2 == 0 else 1
    seq = counting.length_sequence(regime, args.d, args.ell, step * args.terms)
    return seq.table_terms(args.terms)


def cmd_sequence(args) -> int:
    terms = _sequence_terms(args)
    if args.format == "plain":
        print(" ".join(str(t) for t in terms))
    elif args.format == "csv":
        print("n,value")
        for n, t in enumerate(terms, start=1):
            print(f"{n},{t}")
    else:
        print(json.dumps({"regime": args.regime, "d": args.d, "ell": args.ell,
                          "terms": terms}))
    return 0


def cmd_table(args) -> int:
    regime = Regime.from_code(args.regime)
    rows = []
    for r in range(1, args.rmax + 1):
        for k in range(args.smax + 1):
            for s in oracle.compositions(k, args.d):
                rows.append((r, s, counting.count(regime, args.d, r, s)))
    if args.format == "json":
        print(json.dumps([{"r": r, "s": list(s), "value": v} for r, s, v in rows]))
        return 0
    sep = "," if args.format == "csv" else "\t"
    print(sep.join(["r", "s", "value"]))
    for r, s, v in rows:
        print(sep.join([str(r), ";".join(str(x) for x in s), str(v)]))
    return 0


def cmd_enumerate(args) -> int:
    regime = Regime.from_code(args.regime)
    s = _svec(args.s)
    monomials = oracle.enumerate_monomials(args.d, args.r, s, regime, cap=args.cap)
    if args.count_only:
        print(len(monomials))
        return 0
    for m in monomials:
        print(word_to_text(encode_word(m)) if args.words else format_monomial(m))
    return 0


def cmd_series(args) -> int:
    regime = Regime.from_code(args.regime)
    if args.method == "auto":
        ser = series.series_for(regime, args.d, args.ell, args.order)
    elif args.method == "fe":
        ser = series.solve_quadratic_fe(regime, args.d, args.ell, args.order)
    elif args.method == "newton":
        if regime is not Regime.FREE:
            raise ValueError("the Newton closed form applies to the free regime only")
        ser = series.closed_form_free(args.d, args.ell, args.order)
    else:  # euler
        ser = series.euler_series(regime, args.d, args.ell, args.order)
    for n in range(args.order + 1):
        c = ser.coeff(n)
        print(f"{n}\t{c.numerator if c.denominator == 1 else c}")
    return 0


def cmd_growth(args) -> int:
    regime = Regime.from_code(args.regime)
    if regime in (Regime.FREE, Regime.COMM_UNARY):
        res = asymptotics.growth(regime, args.d, args.ell, tol=args.tol)
        print(f"g = {float(res.g):.6f}  rho = {float(res.rho):.6f}")
    else:
        res = asymptotics.growth_estimate(regime, args.d, args.ell, args.n)
        print(f"g_hat = {float(res.g):.6f}  (n={args.n})")
    return 0


def cmd_paths(args) -> int:
    items = bijections.all_lattice_paths(args.d, args.ell, args.span)
    if args.check:
        items = [p for p in items if bijections.matched_ascent_monotone(p)]
    if args.count_only:
        print(len(items))
        return 0
    for text in sorted(p.to_text() for p in items):
        print(text)
    return 0


def cmd_trees(args) -> int:
    items = bijections.all_binary_trees(args.vertices, args.d)
    if args.check:
        items = [t for t in items if bijections.right_chain_monotone(t)]
    if args.count_only:
        print(len(items))
        return 0
    for text in sorted(bijections.binary_tree_text(t) for t in items):
        print(text)
    return 0


def cmd_verify(args) -> int:
    if args.fixture_file:
        entries = fixtures.load_fixture_file(args.fixture_file)
    else:
        entries = fixtures.bundled_fixtures()
    mismatches = 0
    for e in entries:
        label = f"{e.kind} {e.sequence_id} {e.regime.value} d={e.d}"
        detail = fixtures.check_entry(e)
        if detail is None:
            print(f"ok       {label} ({len(e.terms)} terms)")
        else:
            mismatches += 1
            print(f"MISMATCH {label}: {detail}")
    print(f"verified {len(entries)} entries, {mismatches} mismatches")
    return 1 if mismatches else 0


def cmd_bfile(args) -> int:
    regime = Regime.from_code(args.regime)
    step = 2 if args.ell % 2 == 0 else 1
    if args.raw_length:
        n_max = max(args.terms, 1)
        seq = counting.length_sequence(regime, args.d, args.ell, n_max)
        values = {n: seq.value(n) for n in range(1, n_max + 1)}
        indices = range(args.offset, args.terms + args.offset)
        for i in indices:
            print(f"{i} {1 if i == 0 else values[i]}")
        return 0
    last_pos = args.terms + args.offset - 1
    table = []
    if last_pos >= 1:
        seq = counting.length_sequence(regime, args.d, args.ell, step * last_pos)
        table = seq.table_terms()
    for pos in range(args.offset, last_pos + 1):
        print(f"{pos} {1 if pos == 0 else table[pos - 1]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opmono",
        description="Enumeration of multi-operator monomials in four "
                    "commutativity regimes (free, commuting unary operators, "
                    "commutative product, both).")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("count", help="one multigraded count")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", required=True, help="multiplicities, e.g. 2,1")
    sp.add_argument("--oracle", action="store_true",
                    help="count by brute-force enumeration instead of formulas")
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("sequence", help="length-graded sequence prefix")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    sp.set_defaults(func=cmd_sequence)

    sp = sub.add_parser("table", help="multigraded grid")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--rmax", type=int, required=True)
    sp.add_argument("--smax", type=int, required=True,
                    help="bound on the total operator count |s|")
    sp.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate", help="list all monomials at (r, s)")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--words", action="store_true",
                    help="print token words instead of the P-grammar")
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("series", help="generating-series coefficients")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--method", choices=["auto", "fe", "newton", "euler"],
                    default="auto")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("growth", help="exponential growth rate")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--n", type=int, default=100,
                    help="estimator index for the commutative-product regimes")
    sp.set_defaults(func=cmd_growth)

    sp = sub.add_parser("paths", help="peakless lattice paths of a given span")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--span", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="keep only matched-ascent-monotone paths")
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_paths)

    sp = sub.add_parser("trees", help="binary trees with labeled right edges")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--vertices", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="keep only right-chain-monotone trees")
    sp.add_argument("--count-only", action="store_true")
    sp.set_defaults(func=cmd_trees)

    sp = sub.add_parser("verify", help="recompute the published sequence fixtures")
    sp.add_argument("fixture_file", nargs="?", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bfile", help="OEIS b-file style index/value lines")
    _add_regime(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--offset", type=int, choices=[0, 1], default=1)
    sp.add_argument("--raw-length", action="store_true",
                    help="index by raw word length (zeros included)")
    sp.set_defaults(func=cmd_bfile)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except oracle.EnumerationCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
