"""``pbvariant``: command-line access to PB_n, its variants and the oracles.

Every subcommand prints records in one of three formats: aligned ``text``,
``csv`` with a header row, or ``json`` (one JSON object per line).
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks
from .classify import decide_isomorphism, rank_zero_report
from .enumeration import HARD_MAX_N, BoundError, EnumerationBounds, elements, index_of, partitions_filtered
from .mu_numbers import MuTable, PreconditionError, mu, mu_bruteforce
from .pb_core import DimensionError, PartitionError, format_partition, parse_partition, product
from .pb_pairs import UndefinedPairError, format_pb_pair, join, parse_pb_pair
from .semigroup_analysis import build_table, find_isomorphism, table_csv
from .variant import KINDS, Variant, p_sets, variant_green_class, variant_green_partition


class UsageError(Exception):
    pass


def _bounds(args) -> EnumerationBounds:
    m = args.max_n
    if not 1 <= m <= HARD_MAX_N:
        raise UsageError(f"--max-n {m} outside 1..{HARD_MAX_N}")
    return EnumerationBounds(max_n_full_monoid=m, max_n_pb_pairs=max(9, m), max_n_cayley=m)


def _partition(text, flag):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise UsageError(f"{flag} {text!r}: {exc}") from None


def _pair(text, flag):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_pb_pair(text)
    except (PartitionError, UndefinedPairError) as exc:
        raise UsageError(f"{flag} {text!r}: {exc}") from None


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _indices(v: Variant, idx) -> list:
    els = elements(v.n)
    return [format_partition(els[i]) for i in sorted(idx)]


# -- output ---------------------------------------------------------------------

def emit(records, fmt, out=None):
    out = out or sys.stdout
    records = list(records)
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r, sort_keys=False) + "\n")
        return
    if not records:
        return
    cols = list(records[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in records:
            w.writerow([_cell(r[c]) for c in cols])
        return
    if len(cols) == 1:
        for r in records:
            out.write(_cell(r[cols[0]]) + "\n")
        return
    rows = [[_cell(r[c]) for c in cols] for r in records]
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
    out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _cell(x):
    if isinstance(x, (list, tuple, dict)):
        return json.dumps(x, separators=(",", ":"))
    if isinstance(x, bool):
        return "true" if x else "false"
    return "" if x is None else str(x)


# -- subcommands ----------------------------------------------------------------

def cmd_enumerate(args, bounds):
    _require(args, "n")
    it = partitions_filtered(args.n, args.rank, args.ker_singletons, args.coker_singletons, bounds)
    if args.count_only:
        emit([{"count": sum(1 for _ in it)}], args.format)
        return 0
    emit(({"partition": format_partition(p), "rank": p.rank,
           "ker_singletons": p.stats.ker_singletons,
           "coker_singletons": p.stats.coker_singletons} for p in it), args.format)
    return 0


def cmd_product(args, bounds):
    a, b = _partition(args.alpha, "--alpha"), _partition(args.beta, "--beta")
    c = product(a, b)
    emit([{"product": format_partition(c), "rank": c.rank}], args.format)
    return 0


def cmd_stats(args, bounds):
    st = _partition(args.alpha, "--alpha").stats
    rec = {"rank": st.rank, "ker_singletons": st.ker_singletons,
           "coker_singletons": st.coker_singletons,
           "dom": sorted(st.dom), "codom": sorted(st.codom),
           "upper_nontransversals": [list(b) for b in st.upper_nontransversals],
           "lower_nontransversals": [list(b) for b in st.lower_nontransversals]}
    emit([rec], args.format)
    return 0


def cmd_mu(args, bounds):
    _require(args, "n", "k", "r", "q")
    value = mu(args.n, args.k, args.r, args.q)
    if not args.oracle:
        emit([{"mu": value}], args.format)
        return 0
    brute = mu_bruteforce(args.n, args.k, args.r, args.q, bounds)
    emit([{"mu": value, "bruteforce": brute, "match": value == brute}], args.format)
    return 0 if value == brute else 1


def _mu_row(key, bounds):
    n, k, r, q = key
    return mu_bruteforce(n, k, r, q, bounds)


def cmd_mu_table(args, bounds):
    _require(args, "n")
    rows = list(MuTable().rows(args.n))
    if not args.oracle:
        emit(({"n": n, "k": k, "r": r, "q": q, "mu": m} for n, k, r, q, m in rows), args.format)
        return 0
    keys = [row[:4] for row in rows]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            brute = list(pool.map(_mu_row, keys, itertools.repeat(bounds), chunksize=8))
    else:
        brute = [_mu_row(k, bounds) for k in keys]
    ok = all(m == b for (*_, m), b in zip(rows, brute))
    emit(({"n": n, "k": k, "r": r, "q": q, "mu": m, "bruteforce": b, "match": m == b}
          for (n, k, r, q, m), b in zip(rows, brute)), args.format)
    return 0 if ok else 1


def cmd_join(args, bounds):
    left, right = _pair(args.left, "--left"), _pair(args.right, "--right")
    res = join(left, right)
    emit([{"left": format_pb_pair(left), "right": format_pb_pair(right),
           "rank": res.rank, "joined_eq": [list(c) for c in res.joined_eq],
           "domain_pairs": [list(z) for z in res.domain_pairs],
           "paths": [list(p) for p in res.paths]}], args.format)
    return 0


def cmd_green(args, bounds):
    alpha = _partition(args.alpha, "--alpha")
    v = Variant(alpha)
    kinds = [args.kind] if args.kind else list(KINDS)
    if args.class_of is not None:
        x = _partition(args.class_of, "--class-of")
        if x.n != v.n:
            raise UsageError(f"--class-of {args.class_of!r} lives in PB_{x.n}, not PB_{v.n}")
        recs = []
        for kind in kinds:
            cls = variant_green_class(v, x, kind, bounds)
            rec = {"kind": kind, "size": len(cls), "members": _indices(v, cls)}
            if args.oracle:
                g = build_table(v, bounds).green
                rec["table_agrees"] = g.class_of(kind, index_of(v.n)[x]) == cls
            recs.append(rec)
        emit(recs, args.format)
        return 0 if all(r.get("table_agrees", True) for r in recs) else 1
    recs = []
    for kind in kinds:
        classes = variant_green_partition(v, kind, bounds)
        rec = {"kind": kind, "classes": len(classes),
               "sizes": sorted((len(c) for c in classes), reverse=True)}
        if args.oracle:
            g = build_table(v, bounds).green
            rec["table_agrees"] = sorted(g.classes(kind), key=min) == classes
        recs.append(rec)
    emit(recs, args.format)
    return 0 if all(r.get("table_agrees", True) for r in recs) else 1


def cmd_psets(args, bounds):
    v = Variant(_partition(args.alpha, "--alpha"))
    ps = p_sets(v, bounds)
    emit(({"set": name, "size": len(s), "members": _indices(v, s)}
          for name, s in (("P1", ps.p1), ("P2", ps.p2), ("P3", ps.p3), ("P", ps.p))), args.format)
    return 0


def cmd_table(args, bounds):
    v = Variant(_partition(args.alpha, "--alpha"))
    t = build_table(v, bounds)
    if args.format == "json":
        emit([{"labels": list(t.labels), "table": t.table.tolist()}], "json")
    else:
        sys.stdout.write(table_csv(t))
    return 0


def cmd_iso(args, bounds):
    a, b = _partition(args.alpha, "--alpha"), _partition(args.beta, "--beta")
    if a.n != b.n:
        emit([{"verdict": "not_isomorphic", "reason": "different orders"}], args.format)
        return 0
    phi = find_isomorphism(build_table(Variant(a), bounds), build_table(Variant(b), bounds))
    rec = {"verdict": "isomorphic" if phi is not None else "not_isomorphic"}
    if phi is not None and args.format != "text":
        rec["witness"] = list(map(int, phi))
    emit([rec], args.format)
    return 0


def _classify_pair(a, b, oracle, bounds):
    v = decide_isomorphism(a, b, oracle=oracle, bounds=bounds)
    rec = {"alpha": format_partition(a), "beta": format_partition(b)}
    rec.update(v.as_record())
    rec["answer"] = v.definitive or v.verdict
    if a.rank == 0 and b.rank == 0 and a.n == b.n and oracle:
        rec["rank_zero"] = rank_zero_report(a, b, oracle=False, bounds=bounds).as_record()
    return rec


def _classify_task(task):
    a, b, oracle, bounds = task
    rec = _classify_pair(a, b, oracle, bounds)
    rec.pop("witness", None)
    rec.pop("rank_zero", None)
    return rec


def cmd_classify(args, bounds):
    if args.all_pairs:
        _require(args, "n")
        els = [x for x in elements(args.n) if x.rank >= (args.rank or 0)]
        if args.n > bounds.max_n_full_monoid:
            raise BoundError(f"classify sweep at n={args.n} exceeds the bound; raise --max-n to allow it")
        tasks = [(a, b, args.oracle, bounds) for a, b in itertools.combinations_with_replacement(els, 2)]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                recs = list(pool.map(_classify_task, tasks, chunksize=16))
        else:
            recs = [_classify_task(t) for t in tasks]
        cols = ["alpha", "beta", "verdict", "answer", "oracle"]
        emit(({c: r.get(c) for c in cols} for r in recs), args.format)
        bad = [r for r in recs if r.get("oracle") and r["verdict"] != "conjectural"
               and r["oracle"] != r["verdict"]]
        return 1 if bad else 0
    a, b = _partition(args.alpha, "--alpha"), _partition(args.beta, "--beta")
    rec = _classify_pair(a, b, args.oracle, bounds)
    if args.format == "text":
        print(rec["answer"])
        for key in ("verdict", "detail", "reason", "oracle"):
            if rec.get(key):
                print(f"  {key}: {rec[key]}")
        print(f"  invariants: {rec['invariants']}")
        if "conjugators" in rec:
            print(f"  conjugators: {rec['conjugators']}")
        if "witness" in rec:
            print(f"  witness: verified bijection on {len(rec['witness'])} elements")
        if "rank_zero" in rec:
            rz = rec["rank_zero"]
            print(f"  preimages: {rz['preimages']}")
            print(f"  R fingerprints equal: {rz['r_fingerprints_equal']}; "
                  f"L fingerprints equal: {rz['l_fingerprints_equal']}")
            for note in rz["notes"]:
                print(f"  note: {note}")
    else:
        emit([rec], args.format)
    return 0


def cmd_verify(args, bounds):
    names = list(checks.CHECKS)
    if args.only:
        unknown = [x for x in args.only if x not in checks.CHECKS]
        if unknown:
            raise UsageError(f"unknown check {unknown[0]!r}; choose from {', '.join(names)}")
        names = [x for x in names if x in args.only]
    opts = {"seed": args.seed, "max_n": min(3, bounds.max_n_full_monoid),
            "card_max_n": bounds.max_n_full_monoid}
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_named, names, itertools.repeat(opts)))
    else:
        results = [_run_named(n, opts) for n in names]
    emit(({"check": name, "status": "PASS" if ok else "FAIL", "detail": detail}
          for name, ok, detail in results), args.format)
    return 0 if all(ok for _, ok, _ in results) else 1


def _run_named(name, opts):
    return checks.run_check(name, **opts)


COMMANDS = {
    "enumerate": cmd_enumerate, "product": cmd_product, "stats": cmd_stats,
    "mu": cmd_mu, "mu-table": cmd_mu_table, "join": cmd_join, "green": cmd_green,
    "psets": cmd_psets, "table": cmd_table, "iso": cmd_iso, "classify": cmd_classify,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--max-n", type=int, default=4, help="largest n for exhaustive work (cap %d)" % HARD_MAX_N)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="pbvariant", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    s = add("enumerate", "list or count elements of PB_n")
    s.add_argument("--n", type=int)
    s.add_argument("--rank", type=int)
    s.add_argument("--ker-singletons", type=int)
    s.add_argument("--coker-singletons", type=int)
    s.add_argument("--count-only", action="store_true")

    s = add("product", "multiply two partitions")
    s.add_argument("--alpha")
    s.add_argument("--beta")

    s = add("stats", "rank, singleton counts and (co)domain of a partition")
    s.add_argument("--alpha")

    s = add("mu", "evaluate mu(n,k,r,q)")
    for flag in ("--n", "--k", "--r", "--q"):
        s.add_argument(flag, type=int)
    s.add_argument("--oracle", action="store_true", help="also count by brute force")

    s = add("mu-table", "all mu(n,k,r,q) up to a given n")
    s.add_argument("--n", type=int)
    s.add_argument("--oracle", action="store_true")

    s = add("join", "join two PB-pairs, e.g. '9; eq=[[3,8]]; X=[1,2,9]'")
    s.add_argument("--left")
    s.add_argument("--right")

    s = add("green", "Green's classes of a variant")
    s.add_argument("--alpha")
    s.add_argument("--class-of")
    s.add_argument("--kind", choices=KINDS)
    s.add_argument("--oracle", action="store_true", help="compare with the Cayley table")

    s = add("psets", "the sets P1, P2, P3, P of a sandwich element")
    s.add_argument("--alpha")

    s = add("table", "Cayley table of a variant (CSV)")
    s.add_argument("--alpha")

    s = add("iso", "isomorphism test by table search")
    s.add_argument("--alpha")
    s.add_argument("--beta")

    s = add("classify", "decide whether two variants are isomorphic")
    s.add_argument("--alpha")
    s.add_argument("--beta")
    s.add_argument("--oracle", action="store_true", help="also run the table search")
    s.add_argument("--all-pairs", action="store_true", help="sweep all sandwich pairs at --n")
    s.add_argument("--n", type=int)
    s.add_argument("--rank", type=int, help="with --all-pairs: minimum sandwich rank")

    s = add("verify", "run the property checks")
    s.add_argument("--only", nargs="+", metavar="CHECK")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError(f"--jobs {args.jobs} must be at least 1")
        return COMMANDS[args.command](args, _bounds(args))
    except UsageError as exc:
        parser.error(str(exc))
    except BoundError as exc:
        print(f"pbvariant: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, DimensionError, ValueError) as exc:
        print(f"pbvariant: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
