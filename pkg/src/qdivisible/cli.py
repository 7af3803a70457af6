"""Command-line surface for the library.

Subcommands: bounds, spectrum, construct, verify, feasible, tau.  Every
reporting subcommand takes --json for a machine-readable document carrying
the same numbers as the text output (integers exact, rationals as "p/q").
Exit codes: 0 success/feasible/verified, 1 excluded/infeasible/failed,
2 usage error, 4 integer search stopped by the node limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions, criteria, fileio, lp, spectrum, subspaces

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 4


def _frac(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x)) if isinstance(x, Fraction) else str(x)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else _frac(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _emit_json(doc) -> None:
    print(json.dumps(_jsonable(doc), indent=2))


def _recipe_doc(recipe: constructions.ConstructionRecipe):
    if recipe is None:
        return None
    doc = {"kind": recipe.kind, "describe": recipe.describe()}
    if recipe.kind == "spread":
        doc.update(q=recipe.q, k=recipe.k, s=recipe.s)
    elif recipe.kind == "lifted_mrd":
        doc.update(q=recipe.q, k=recipe.k, r=recipe.r)
    else:
        doc["parts"] = [_recipe_doc(p) for p in recipe.parts]
    return doc


def _witness_text(witness: dict) -> str:
    return " ".join(f"{key}={_frac(val)}" for key, val in witness.items())


# ---------------------------------------------------------------------------
# subcommands

def _cmd_bounds(args) -> int:
    rep = criteria.heden_tail_bound(args.q, args.d1, args.d2, args.multiple)
    if args.json:
        _emit_json({
            "command": "bounds",
            "q": rep.q, "d1": rep.d1, "d2": rep.d2, "multiple": rep.multiple,
            "case": rep.case,
            "heden_bound": rep.heden_bound,
            "heden_strict": rep.heden_strict,
            "improved_bound": rep.improved_bound,
            "b_free_bound": rep.b_free_bound,
            "notes": list(rep.notes),
        })
        return EXIT_OK
    kind = "multiple of q^(d2-d1)" if rep.multiple else "unconstrained"
    print(f"tail bound for q={rep.q} d1={rep.d1} d2={rep.d2} ({kind}), case {rep.case}")
    rel = ">" if rep.heden_strict else ">="
    print(f"classical bound:  u1 {rel} {rep.heden_bound}")
    print(f"divisibility bound: u1 >= {rep.improved_bound}")
    if rep.b_free_bound is not None:
        print(f"b-free bound:     u1 >= {rep.b_free_bound}")
    for note in rep.notes:
        print(f"note: {note}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    v_range = None
    if args.lp:
        vmin = args.vmin if args.vmin is not None else 2 * args.k
        vmax = args.vmax if args.vmax is not None else 2 * args.k + 2 * args.r
        if vmin > vmax:
            raise ValueError(f"empty dimension range [{vmin}, {vmax}]")
        v_range = range(vmin, vmax + 1)
    rep = spectrum.report(
        args.q, args.k, args.r, args.nmax,
        use_lp=args.lp, v_range=v_range,
        include_triples=args.triples, integer=args.ilp,
        node_limit=args.node_limit,
    )
    if args.json:
        _emit_json({
            "command": "spectrum",
            "q": rep.q, "k": rep.k, "r": rep.r, "nmax": rep.n_max,
            "generators": list(rep.generators),
            "admissible": rep.admissible,
            "largest_excluded": rep.largest_excluded,
            "entries": [
                {
                    "n": e.n, "status": e.status, "reason": e.reason,
                    "witness": e.witness, "recipe": _recipe_doc(e.recipe),
                }
                for e in rep.entries
            ],
        })
        return EXIT_OK
    print(f"spectrum for q={rep.q} k={rep.k} r={rep.r} up to n={rep.n_max}")
    c1, c2 = rep.generators
    print(f"construction generators: {c1} and {c2}")
    print("admissible: {" + ", ".join(str(n) for n in rep.admissible) + "}")
    if rep.largest_excluded is not None:
        print(f"largest excluded: {rep.largest_excluded}")
    for e in rep.entries:
        extra = ""
        if e.status == spectrum.EXCLUDED:
            extra = f"  {e.reason} {_witness_text(e.witness)}"
        elif e.status == spectrum.CONSTRUCTIBLE:
            extra = f"  {e.recipe.describe()}"
        print(f"{e.n:4d}  {e.status:<12}{extra}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.recipe == "spread":
        built = constructions.spread(args.q, args.k, args.s)
    elif args.recipe == "mrd":
        built = constructions.lifted_mrd(args.q, args.k, args.r)
    else:
        left = fileio.load(args.files[0])
        right = fileio.load(args.files[1])
        built = constructions.direct_sum(left, right)
    text = fileio.dumps(built)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
        print(f"wrote {built.n} subspaces of GF({built.ctx.q})^{built.v} to {args.out}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    s = fileio.load(args.file)
    q, v, k, n = s.ctx.q, s.v, s.k, s.n
    overlap = subspaces.first_overlap(s)
    restricted, span = subspaces.span_and_restrict(s)
    inc = subspaces.hyperplane_spectrum(s)
    tri = subspaces.triple_spectrum(s)
    identities = subspaces.counting_identity_report(inc, tri, q, v, k, n)
    ids_ok = all(identities.values())
    exponent = None
    if overlap is None:
        exponent = subspaces.divisibility_exponent(s)
    inc_restricted = inc if span == v else subspaces.hyperplane_spectrum(restricted)
    try:
        cls = subspaces.classify_spectrum(inc_restricted, q, span, k)
        kind, detail = cls.kind, cls.as_dict()
    except ValueError as err:
        kind, detail = "Inconsistent", {"error": str(err)}
    verified = overlap is None and ids_ok and exponent is not None and exponent >= args.r
    if args.json:
        _emit_json({
            "command": "verify",
            "file": str(args.file),
            "q": q, "v": v, "k": k, "n": n,
            "pairwise_disjoint": overlap is None,
            "first_overlap": list(overlap) if overlap else None,
            "span": span,
            "hyperplane_spectrum": [list(c) for c in inc.counts],
            "triple_spectrum": [list(c) for c in tri.counts],
            "identities": identities,
            "exponent": exponent,
            "required_exponent": args.r,
            "classification": {"kind": kind, "detail": detail},
            "verified": verified,
        })
        return EXIT_OK if verified else EXIT_NEGATIVE
    print(f"{args.file}: {n} subspaces of dimension {k} in GF({q})^{v}")
    if overlap is None:
        print("pairwise disjoint: yes")
    else:
        print(f"pairwise disjoint: NO (members {overlap[0]} and {overlap[1]} intersect)")
    print(f"span: {span} of {v}")
    print("hyperplane spectrum: {" + ", ".join(f"{i}: {a}" for i, a in inc.counts) + "}")
    print("triple spectrum: {" + ", ".join(f"{j}: {b}" for j, b in tri.counts) + "}")
    checks = " ".join(f"{name}={'ok' if good else 'FAIL'}" for name, good in identities.items())
    print(f"identities: {checks}")
    if exponent is None:
        print(f"divisibility exponent: undefined (required >= {args.r})")
    else:
        print(f"divisibility exponent: {exponent} (required >= {args.r})")
    detail_text = " ".join(f"{key}={val}" for key, val in detail.items())
    print(f"classification: {kind}" + (f" ({detail_text})" if detail_text else ""))
    print(f"verified: {'yes' if verified else 'no'}")
    return EXIT_OK if verified else EXIT_NEGATIVE


def _cmd_feasible(args) -> int:
    system = lp.build_system(
        args.q, args.k, args.r, args.n, args.v, include_triples=args.triples
    )
    if args.ilp:
        result = lp.ilp_feasible(system, node_limit=args.node_limit)
    else:
        result = lp.lp_feasible(system)
    if args.json:
        cert = None
        if result.certificate is not None:
            cert = {label: result.certificate[label] for label in system.labels}
        _emit_json({
            "command": "feasible",
            "q": args.q, "k": args.k, "r": args.r, "n": args.n, "v": args.v,
            "integer": args.ilp, "triples": args.triples,
            "variables": system.labels,
            "status": result.status,
            "certificate": cert,
            "infeasibility": result.infeasibility,
            "nodes": result.nodes,
        })
    else:
        mode = "integer" if args.ilp else "rational"
        print(f"counting system for q={args.q} k={args.k} r={args.r} n={args.n} v={args.v} ({mode})")
        print(f"variables: {' '.join(system.labels)}")
        print(f"status: {result.status}")
        if result.certificate is not None:
            pairs = " ".join(f"{lab}={_frac(result.certificate[lab])}" for lab in system.labels)
            print(f"certificate: {pairs}")
        if result.infeasibility is not None:
            print(f"phase-one optimum: {_frac(result.infeasibility)}")
        if result.status == "node_limit":
            print(f"search stopped after {result.nodes} nodes")
    if result.status == "feasible":
        return EXIT_OK
    if result.status == "node_limit":
        return EXIT_UNDECIDED
    return EXIT_NEGATIVE


def _cmd_tau(args) -> int:
    delta, u = args.q**args.r, args.q**args.k
    if args.m is not None:
        rows = [(args.m, criteria.tau(args.n, delta, u, args.m))]
    else:
        rows = criteria.tau_window(args.q, args.k, args.r, args.n)
    verdict = criteria.quadratic_excludes(args.q, args.k, args.r, args.n)
    if args.json:
        _emit_json({
            "command": "tau",
            "q": args.q, "k": args.k, "r": args.r, "n": args.n,
            "delta": delta, "u": u,
            "table": [{"m": m, "tau": t} for m, t in rows],
            "excluded": verdict.excluded,
            "witness": verdict.witness,
        })
        return EXIT_NEGATIVE if verdict.excluded else EXIT_OK
    print(f"tau for n={args.n} with delta=q^r={delta}, u=q^k={u}")
    width = max(len(str(t)) for _m, t in rows)
    for m, t in rows:
        fires = t < 0 or (t == 0 and m not in (0, 1))
        print(f"  m={m:<4d} tau={t:>{width}d}{'  <- excludes' if fires else ''}")
    if verdict.excluded:
        print(f"excluded: yes ({_witness_text(verdict.witness)})")
    else:
        print("excluded: no")
    return EXIT_NEGATIVE if verdict.excluded else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


_POSITIVE = _int_at_least(1)
_FIELD = _int_at_least(2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdivisible",
        description="Exact analysis of divisible sets of subspaces over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("bounds", help="classical versus divisibility tail bounds")
    p.add_argument("--q", type=_FIELD, required=True, help="field size (prime power)")
    p.add_argument("--d1", type=_POSITIVE, required=True, help="smaller hole dimension")
    p.add_argument("--d2", type=_POSITIVE, required=True, help="larger hole dimension")
    p.add_argument("--multiple", action="store_true",
                   help="the count is known to be a multiple of q^(d2-d1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("spectrum", help="per-cardinality verdicts up to nmax")
    p.add_argument("--q", type=_FIELD, required=True)
    p.add_argument("--k", type=_POSITIVE, required=True)
    p.add_argument("--r", type=_POSITIVE, required=True)
    p.add_argument("--nmax", type=_POSITIVE, required=True)
    p.add_argument("--lp", action="store_true",
                   help="also scan exact LP feasibility over a dimension range")
    p.add_argument("--vmin", type=_POSITIVE, help="smallest ambient dimension to scan")
    p.add_argument("--vmax", type=_POSITIVE, help="largest ambient dimension to scan")
    p.add_argument("--ilp", action="store_true", help="require integer certificates")
    p.add_argument("--triples", action="store_true", help="include triple counting rows")
    p.add_argument("--node-limit", type=_POSITIVE, default=lp.DEFAULT_NODE_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("construct", help="build a set and write it as a file")
    rec = p.add_subparsers(dest="recipe", required=True, metavar="recipe")
    ps = rec.add_parser("spread", help="spread of GF(q)^(s*k)")
    ps.add_argument("--q", type=_FIELD, required=True)
    ps.add_argument("--k", type=_POSITIVE, required=True)
    ps.add_argument("--s", type=_int_at_least(2), required=True, help="number of blocks")
    pm = rec.add_parser("mrd", help="lifted maximum-rank-distance set in GF(q)^(2k+r)")
    pm.add_argument("--q", type=_FIELD, required=True)
    pm.add_argument("--k", type=_POSITIVE, required=True)
    pm.add_argument("--r", type=_POSITIVE, required=True)
    pd = rec.add_parser("sum", help="direct sum of two stored sets")
    pd.add_argument("files", nargs=2, metavar="FILE")
    for sp in (ps, pm, pd):
        sp.add_argument("-o", "--out", default="-", help="output path (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a stored set against an exponent")
    p.add_argument("--r", type=_POSITIVE, required=True, help="required divisibility exponent")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("feasible", help="exact feasibility of the counting identities")
    p.add_argument("--q", type=_FIELD, required=True)
    p.add_argument("--k", type=_POSITIVE, required=True)
    p.add_argument("--r", type=_POSITIVE, required=True)
    p.add_argument("--n", type=_POSITIVE, required=True)
    p.add_argument("--v", type=_POSITIVE, required=True)
    p.add_argument("--ilp", action="store_true", help="require an integer certificate")
    p.add_argument("--triples", action="store_true", help="include triple counting rows")
    p.add_argument("--node-limit", type=_POSITIVE, default=lp.DEFAULT_NODE_LIMIT)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_feasible)

    p = sub.add_parser("tau", help="quadratic exclusion table for one cardinality")
    p.add_argument("--q", type=_FIELD, required=True)
    p.add_argument("--k", type=_POSITIVE, required=True)
    p.add_argument("--r", type=_POSITIVE, required=True)
    p.add_argument("--n", type=_POSITIVE, required=True)
    p.add_argument("--m", type=int, help="evaluate a single convexity parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tau)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
