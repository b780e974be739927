"""Command line entry point: ``flagcx <subcommand> ...``.

Exit codes: 0 success, 1 domain error or theorem failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

from .canon import canonical_rep, iterate_shadow_down, iterate_shadow_up
from .checks import resolve_checks
from .colored import build_sigma, revlex_complex_fvec, revlex_complex_top
from .complex import h_vector
from .corpus import Corpus
from .graph import clique_complex, from_graph6, read_graph6_file
from .harness import run_suite
from .homology import betti_vector, is_prime
from .serialize import plain, read_complex, to_dict
from .turan import turan_coeff, turan_row, turan_row_pascal

LEDGER_ENV = "FLAGCX_LEDGER_DIR"


def _table(rows: list[list]) -> str:
    cells = [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(max(map(len, cells)))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def emit(args, data, rows: list[list] | None = None, default: str = "table") -> None:
    """Print ``data`` as JSON, or ``rows`` as a table / CSV."""
    fmt = args.format or default
    if fmt == "json" or rows is None:
        print(json.dumps(data))
    elif fmt == "csv":
        print(_csv(rows))
    else:
        print(_table(rows))


def _primes(text: str) -> list[int]:
    ps = [int(x) for x in text.split(",") if x.strip()]
    bad = [p for p in ps if not is_prime(p)]
    if bad or not ps:
        raise argparse.ArgumentTypeError(f"not prime: {bad or text}")
    return ps


def _prime(text: str) -> int:
    return _primes(text)[0]


# -- subcommands --------------------------------------------------------


def cmd_turan(args) -> int:
    value = turan_coeff(args.n, args.k, args.d)
    emit(args, value, [[value]])
    return 0


def cmd_turan_row(args) -> int:
    row = list(turan_row_pascal(args.n, args.d) if args.pascal else turan_row(args.n, args.d))
    emit(args, row, [list(range(len(row))), row], default="csv")
    return 0


def cmd_canon(args) -> int:
    rep = canonical_rep(args.N, args.k, args.r)
    terms = [list(t) for t in rep.terms]
    emit(args, terms, [["N_i", "k", "r"]] + terms, default="json")
    return 0


def cmd_shadow(args) -> int:
    if args.times < 1:
        raise ValueError("--times must be at least 1")
    # the iterate functions take the number of extra applications
    if args.direction == "down":
        value = iterate_shadow_down(args.N, args.k, args.r, args.times - 1)
    else:
        value = iterate_shadow_up(args.N, args.k, args.r, args.times - 1)
    emit(args, value, [[value]])
    return 0


def cmd_betti(args) -> int:
    c = plain(read_complex(args.complex))
    betti = betti_vector(c, args.p).reduced()
    emit(args, {"betti": betti}, [list(range(len(betti))), betti], default="json")
    return 0


def cmd_fvec(args) -> int:
    f = list(plain(read_complex(args.complex)).f_vector())
    emit(args, {"f": f}, [list(range(-1, len(f) - 1)), f], default="json")
    return 0


def cmd_hvec(args) -> int:
    h = list(h_vector(plain(read_complex(args.complex)).f_vector()))
    emit(args, {"h": h}, [list(range(len(h))), h], default="json")
    return 0


def cmd_clique(args) -> int:
    src = Path(args.graph)
    graphs = read_graph6_file(src) if src.exists() else [from_graph6(args.graph)]
    for g in graphs:
        print(json.dumps(to_dict(clique_complex(g))))
    return 0


def cmd_revlex(args) -> int:
    if args.fvec:
        cc = revlex_complex_fvec([int(x) for x in args.fvec.split(",")], args.d)
    else:
        cc = revlex_complex_top(args.top, args.d)
    print(json.dumps(to_dict(cc)))
    return 0


def cmd_sigma(args) -> int:
    res = build_sigma(plain(read_complex(args.complex)))
    print(json.dumps({"v0": res.v0, "order": res.order, "a": res.a, "sigma": to_dict(res.sigma)}))
    return 0


def _ledger_path(args, label: str):
    if args.ledger:
        return args.ledger
    base = os.environ.get(LEDGER_ENV)
    return str(Path(base) / f"{label}.jsonl") if base else None


def _corpus(args) -> tuple[Corpus, str]:
    if args.g6:
        return Corpus.g6(args.g6), Path(args.g6).stem
    if args.balanced:
        return Corpus.balanced(args.balanced, args.seed), f"balanced-{args.seed}-{args.balanced}"
    return Corpus.graphs(args.n), f"n{args.n}"


def _print_summary(args, summary, extra: dict | None = None) -> None:
    data = summary.to_dict()
    data.update(extra or {})
    if (args.format or "table") == "json":
        print(json.dumps(data))
        return
    rows = summary.rows()
    print(_csv(rows) if args.format == "csv" else _table(rows))
    print(f"instances: {summary.instances}")
    for check, insts in sorted(summary.equality.items()):
        if check in ("THM_1_5", "COR_5_4"):
            print(f"{check} equality: {' '.join(insts)}")
    for r in summary.failures:
        print(f"FAIL {r.to_json()}")
    for r in summary.certificates:
        print(f"CERTIFICATE {r.to_json()}")


def cmd_verify(args) -> int:
    corpus, label = _corpus(args)
    summary = run_suite(
        corpus, resolve_checks(args.checks), args.p,
        ledger=_ledger_path(args, f"verify-{label}"), resume=args.resume, workers=args.workers,
        timestamps=not args.no_timestamps, fail_fast=args.fail_fast, limit=args.limit,
    )
    _print_summary(args, summary)
    return 0 if summary.ok else 1


def cmd_scan(args) -> int:
    corpus, label = _corpus(args)
    opts = {"k": args.k} if args.k is not None else {}
    summary = run_suite(
        corpus, "conjectures", args.p, ledger=_ledger_path(args, f"scan-{label}"),
        resume=args.resume, workers=args.workers, timestamps=not args.no_timestamps, opts=opts,
    )
    _print_summary(args, summary, {"certificate_count": len(summary.certificates)})
    # certificates are findings, never failures
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="flagcx", description="Face numbers and homology of flag and balanced complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("turan", cmd_turan, "number of k-cliques of the Turan graph T_d(n)")
    for name in ("n", "k", "d"):
        sp.add_argument(name, type=int)

    sp = add("turan-row", cmd_turan_row, "all clique counts of T_d(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--pascal", action="store_true", help="use the Pascal-triangle recurrence")

    sp = add("canon", cmd_canon, "(k,r)-canonical representation of N as (N_i, k_i, r_i) terms")
    for name in ("N", "k", "r"):
        sp.add_argument(name, type=int)

    sp = add("shadow", cmd_shadow, "lower or upper shadow of N")
    sp.add_argument("direction", choices=["down", "up"])
    for name in ("N", "k", "r"):
        sp.add_argument(name, type=int)
    sp.add_argument("--times", type=int, default=1, help="iterate the shadow this many times")

    for name, func, help_ in [
        ("betti", cmd_betti, "reduced Betti numbers of a complex"),
        ("fvec", cmd_fvec, "f-vector of a complex"),
        ("hvec", cmd_hvec, "h-vector of a complex"),
        ("sigma", cmd_sigma, "colored replacement complex of a flag complex"),
    ]:
        sp = add(name, func, help_)
        sp.add_argument("complex", help="complex JSON file")
        if name == "betti":
            sp.add_argument("--p", type=_prime, default=2)

    sp = add("clique", cmd_clique, "clique complex of a graph6 string or file")
    sp.add_argument("graph")

    sp = add("revlex", cmd_revlex, "revlex colored complex")
    sp.add_argument("--d", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--top", type=int, help="number of top faces")
    group.add_argument("--fvec", help="comma-separated f-vector starting with f_{-1}")

    for name, func in (("verify", cmd_verify), ("scan-conjecture", cmd_scan)):
        sp = add(name, func, "run theorem checks" if name == "verify" else "scan the conjectures for counterexamples")
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--n", type=int, default=6, help="all graphs on at most n vertices")
        src.add_argument("--g6", help="graph6 file")
        src.add_argument("--balanced", type=int, help="this many seeded color-shifted complexes")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--p", type=_primes, default=[2], help="comma-separated primes")
        sp.add_argument("--ledger")
        sp.add_argument("--resume", action="store_true")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--no-timestamps", action="store_true")
        if name == "verify":
            sp.add_argument("--checks", default="all")
            sp.add_argument("--fail-fast", action="store_true")
            sp.add_argument("--limit", type=int)
        else:
            sp.add_argument("--k", type=int, help="only the Betti number beta_{k-1}")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, KeyError) as err:
        print(json.dumps({"error": type(err).__name__, "message": str(err)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
