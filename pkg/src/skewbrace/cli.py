"""Command-line front end.

Exit codes: 0 success / predicate true, 1 predicate false, 2 input or
validation error, 3 bound exceeded.  Randomized commands take --seed and
default to the documented constant 1729 for reproducibility.  The
BRACE_MAX_ORDER environment variable overrides the default order bound of
search-heavy operations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .braces import SkewBrace
from .enumeration import are_isomorphic, enumerate_all, enumerate_on_additive
from .errors import BoundExceededError, BraceError
from .families import FAMILY_TAGS, build_family, odd_p_nonabelian_labels
from .groups import catalog_group, catalog_names
from .rational import (
    LocalizedDomain,
    RationalBraceSpec,
    axiom_sample_check,
    dedekind_witness,
)
from .series import analyze, is_dedekind
from .storage import (
    load_brace,
    load_group,
    load_solution,
    save_brace,
    save_solution,
    sniff_kind,
)
from .ybe import from_brace, multipermutation_level, predicates, retract

DEFAULT_SEED = 1729


def _check_out_path(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent):
        raise BraceError(f"output directory does not exist: {parent}")


def _cmd_verify(args) -> int:
    kind = sniff_kind(args.file)
    if kind == "brace":
        B = load_brace(args.file)
        print(f"valid skew brace of order {B.order}")
    elif kind == "group":
        G = load_group(args.file)
        print(f"valid group of order {G.order}")
    else:
        load_solution(args.file)
        print("valid solution")
    return 0


def _cmd_analyze(args) -> int:
    B = load_brace(args.file)
    report = analyze(B)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return 0


def _cmd_dedekind(args) -> int:
    B = load_brace(args.file)
    ok, witness = is_dedekind(B)
    if ok:
        print(f"dedekind: every sub-skew brace of this order-{B.order} brace is an ideal")
        return 0
    print(f"not dedekind: sub-skew brace {list(witness.elements)} is not an ideal")
    return 1


def _cmd_construct(args) -> int:
    group = load_group(args.group) if args.group else None
    B = build_family(args.family, p=args.p, n=args.n, group=group)
    _check_out_path(args.out)
    labels = None
    if args.family == "odd_p_nonabelian":
        labels = odd_p_nonabelian_labels(args.p, args.n)
    save_brace(B, args.out, labels=labels)
    print(f"wrote {args.family} brace of order {B.order} to {args.out}")
    return 0


def _cmd_enumerate(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    if args.additive is not None:
        if args.additive == "cyclic":
            G = catalog_group(args.order, 0)
        elif args.additive == "elab":
            G = None
            for i in range(len(catalog_names(args.order))):
                cand = catalog_group(args.order, i)
                orders = set(cand.element_orders) - {1}
                if cand.is_abelian() and len(orders) == 1 and min(orders) in cand.primes:
                    G = cand
                    break
            if G is None:
                raise BraceError(
                    f"no elementary abelian group of order {args.order} in the catalog"
                )
        else:
            G = catalog_group(args.order, int(args.additive))
        braces = enumerate_on_additive(G)
        counts = {"order": args.order, "found": len(braces)}
        if args.up_to_iso:
            reps: list[SkewBrace] = []
            for b in braces:
                if not any(are_isomorphic(b, r).isomorphic for r in reps):
                    reps.append(b)
            braces = reps
            counts["classes"] = len(reps)
    else:
        result = enumerate_all(args.order)
        braces = list(result.classes)
        counts = {
            "order": args.order,
            "classes": len(braces),
            "by_type": {f"{a}|{m}": v for (a, m), v in sorted(result.counts.items())},
            "labeled_per_additive": result.labeled_counts,
        }
    for i, b in enumerate(braces):
        save_brace(b, os.path.join(args.out, f"brace_{i:03d}.json"))
    summary_path = os.path.join(args.out, "counts." + ("json" if args.format == "json" else "csv" if args.format == "csv" else "txt"))
    with open(summary_path, "w") as fh:
        if args.format == "json":
            json.dump(counts, fh, indent=2)
            fh.write("\n")
        elif args.format == "csv":
            fh.write("key,value\n")
            for k, v in _flatten(counts):
                fh.write(f"{k},{v}\n")
        else:
            for k, v in _flatten(counts):
                fh.write(f"{k:<30} {v}\n")
    print(f"wrote {len(braces)} braces and {summary_path}")
    return 0


def _flatten(doc, prefix=""):
    out = []
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.extend(_flatten(v, key + "."))
        else:
            out.append((key, v))
    return out


def _cmd_iso(args) -> int:
    B1, B2 = load_brace(args.file1), load_brace(args.file2)
    cert = are_isomorphic(B1, B2)
    if cert.isomorphic:
        print(f"isomorphic via {list(cert.bijection)}")
        return 0
    print(f"not isomorphic (refuted by: {cert.refuted_by})")
    return 1


def _cmd_ybe(args) -> int:
    if args.ybe_command == "from-brace":
        B = load_brace(args.file)
        sol = from_brace(B)
        if args.out:
            _check_out_path(args.out)
            save_solution(sol, args.out)
        p = predicates(sol)
        print(f"solution of size {sol.size}; involutive={p.involutive} diagonal_fixing={p.diagonal_fixing}")
        return 0
    if args.ybe_command == "check":
        sol = load_solution(args.file)
        p = predicates(sol)
        print(f"valid solution of size {sol.size}; involutive={p.involutive} diagonal_fixing={p.diagonal_fixing}")
        return 0
    if args.ybe_command == "retract":
        sol = load_solution(args.file)
        sizes = [sol.size]
        for _ in range(args.steps):
            sol, _cls = retract(sol)
            sizes.append(sol.size)
        if args.out:
            _check_out_path(args.out)
            save_solution(sol, args.out)
        print("sizes: " + " -> ".join(str(s) for s in sizes))
        return 0
    if args.ybe_command == "level":
        sol = load_solution(args.file)
        level = multipermutation_level(sol)
        print(f"multipermutation level: {'none' if level is None else level}")
        return 0
    raise BraceError(f"unknown ybe subcommand {args.ybe_command!r}")


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _cmd_rational(args) -> int:
    forbidden = tuple(int(p) for p in args.forbidden.split(",") if p)
    spec = RationalBraceSpec(
        variant=args.variant,
        domain=LocalizedDomain(forbidden),
        m1=args.m1,
        m2=args.m2,
        x=_parse_fraction(args.x) if args.x else None,
    )
    report = axiom_sample_check(spec, seed=args.seed, count=args.sample)
    print(report.describe())
    if args.witness_prime is not None:
        w = dedekind_witness(spec, args.witness_prime, seed=args.seed)
        print(w.describe())
        if w.violating_in_y or not w.subgroup_samples_ok:
            return 1
    return 0 if report.passed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewbrace",
        description="Construct, verify, classify and analyze skew braces and"
        " their Yang-Baxter solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a group/brace/solution JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="full structural report for a brace")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("dedekind", help="test whether every sub-skew brace is an ideal")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("construct", help="build a brace from a named family")
    p.add_argument("--family", choices=FAMILY_TAGS, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--group", help="base group JSON (trivial/almost_trivial)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="enumerate braces of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--additive", help="cyclic, elab, or a catalog index")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("iso", help="test two braces for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("ybe", help="Yang-Baxter solution commands")
    ysub = p.add_subparsers(dest="ybe_command", required=True)
    y = ysub.add_parser("from-brace", help="solution attached to a brace")
    y.add_argument("file")
    y.add_argument("--out")
    y.set_defaults(func=_cmd_ybe)
    y = ysub.add_parser("check", help="validate a solution file")
    y.add_argument("file")
    y.set_defaults(func=_cmd_ybe)
    y = ysub.add_parser("retract", help="apply k retraction steps")
    y.add_argument("file")
    y.add_argument("--steps", type=int, default=1)
    y.add_argument("--out")
    y.set_defaults(func=_cmd_ybe)
    y = ysub.add_parser("level", help="multipermutation level of a solution")
    y.add_argument("file")
    y.set_defaults(func=_cmd_ybe)

    p = sub.add_parser("rational", help="exact-rational brace checks")
    p.add_argument("--variant", choices=("a2a", "a2b", "c1", "c2"), required=True)
    p.add_argument("--forbidden", default="", help="comma-separated forbidden primes")
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--x", help="distinguished element, e.g. 1 or 3/5")
    p.add_argument("--sample", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--witness-prime", type=int)
    p.set_defaults(func=_cmd_rational)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceededError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 3
    except BraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno} column {exc.colno}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
