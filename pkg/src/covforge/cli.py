"""Command-line front end.

Polynomial input: integer or fraction coefficients, variables ``t``,
``x1..xd``, ``Y1``, ``Y2``, ``^`` for powers, ``*`` optional
(``3/2 x1^2 t - x2*t``).  An argument naming an existing file is read from
that file.  Output uses the canonical serializer, which parses back to the
same polynomial.

Exit codes: 0 success, 1 engine or input error, 2 verification difference.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .counting import cs_dim
from .poly import parse as parse_poly
from .poly import to_text
from .sl2 import SemiInvariant, context, kappa, kappa_inverse
from .transvect import semitransvectant, transvectant

EXIT_OK, EXIT_ERROR, EXIT_DIFF = 0, 1, 2
REGISTRY_ENV = "COVFORGE_REGISTRY"


class UsageError(ValueError):
    pass


def _read_poly(arg: str, d: int):
    text = Path(arg).read_text() if os.path.isfile(arg) else arg
    return parse_poly(text.strip(), context(d).R)


def _emit(args, records: list[dict], text: str) -> None:
    if getattr(args, "format", "text") == "records":
        for rec in records:
            print(json.dumps(rec, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _registry_path(args, required: bool = True):
    path = getattr(args, "registry", None) or os.environ.get(REGISTRY_ENV)
    if required and not path:
        raise UsageError(f"no registry given (use --registry or set {REGISTRY_ENV})")
    return path


def _load_registry(args):
    from .discover import Registry

    return Registry.load(_registry_path(args))


# verbs ------------------------------------------------------------------------

def cmd_dim(args) -> int:
    n = cs_dim(args.d, args.i, args.j)
    _emit(args, [{"d": args.d, "degree": args.i, "order": args.j, "dim": n}], str(n))
    return EXIT_OK


def cmd_transvect(args) -> int:
    F, G = _read_poly(args.F, args.d), _read_poly(args.G, args.d)
    out = transvectant(F, G, args.r)
    _emit(args, [{"result": to_text(out)}], to_text(out))
    return EXIT_OK


def cmd_semitransvect(args) -> int:
    ctx = context(args.d)
    f = SemiInvariant.from_poly(ctx, _read_poly(args.f, args.d))
    g = SemiInvariant.from_poly(ctx, _read_poly(args.g, args.d))
    out = semitransvectant(ctx, f, g, args.r)
    if out is None:
        _emit(args, [{"result": "0", "order": None}], "0")
        return EXIT_OK
    _emit(args, [{"result": to_text(out.poly), "degree": out.degree, "order": out.order}], to_text(out.poly))
    return EXIT_OK


def cmd_kappa(args) -> int:
    s = kappa(context(args.d), _read_poly(args.F, args.d))
    _emit(args, [{"result": to_text(s.poly), "degree": s.degree, "order": s.order}], to_text(s.poly))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    out = kappa_inverse(context(args.d), _read_poly(args.f, args.d))
    _emit(args, [{"result": to_text(out)}], to_text(out))
    return EXIT_OK


def _progress(args):
    if args.quiet:
        return None

    def show(rep):
        if rep.found or not rep.closed:
            names = ", ".join(rep.found)
            print(f"  ({rep.degree},{rep.order}) cs={rep.cs} sigma={rep.sigma} delta={rep.delta} [{rep.proof}] {names}",
                  file=sys.stderr)
    return show


def cmd_discover(args) -> int:
    from .discover import Registry, run_pipeline

    path = _registry_path(args)
    registry = None
    if os.path.exists(path):
        registry = Registry.load(path)
        if registry.d != args.d:
            raise UsageError(f"{path} holds a d={registry.d} registry, not d={args.d}")
    method = "modular" if args.modular else "exact"
    reg, table = run_pipeline(args.d, args.max_degree, registry=registry, path=path, seed=args.seed,
                              method=method, budget=args.budget, jobs=args.jobs, progress=_progress(args))
    top = reg.complete_through()
    if args.format == "records":
        _emit(args, table.records(), "")
    else:
        print(table.render(), end="")
        print(f"generators: {len(reg)}  complete through degree {top}  registry: {path}")
    return EXIT_OK if top >= args.max_degree else EXIT_ERROR


def cmd_replay(args) -> int:
    from .discover import replay_paper_constructions

    sections = tuple(int(s) for s in args.sections.split(","))
    rows = []

    def show(entry):
        rows.append(entry)
        if args.format != "records":
            flag = "" if not entry["notes"] else "  ! " + "; ".join(entry["notes"])
            same = "ok" if entry["order"] == entry["printed_order"] else "MISMATCH"
            print(f"{entry['name']:>7} = {entry['used']:<22} ord {entry['order']:>3} printed {entry['printed_order']:>3} {same}{flag}")

    reg, _ = replay_paper_constructions(sections=sections, seed=args.seed, check=not args.no_check, progress=show)
    if args.format == "records":
        _emit(args, rows, "")
    path = _registry_path(args, required=False)
    if path:
        reg.save(path)
    flagged = [r["name"] for r in rows if any(not n.startswith("printed label") for n in r["notes"])]
    if args.format != "records":
        print(f"{len(reg)} records; constructions repaired or substituted: {', '.join(flagged) or 'none'}")
    return EXIT_OK


def _table_from_args(args):
    from .discover import DistributionTable, expected_table, paperdata

    if args.printed:
        return DistributionTable.from_rows(paperdata.D, paperdata.APPENDIX_AS_PRINTED)
    if args.expected:
        return expected_table()
    return DistributionTable.from_registry(_load_registry(args))


def cmd_table(args) -> int:
    table = _table_from_args(args)
    _emit(args, [{"degree": r["degree"], "order": r["order"], "delta": r["count"]} for r in table.records()], table.render())
    return EXIT_OK


def cmd_verify(args) -> int:
    from .discover import DistributionTable, paperdata, recompute_distribution, verify_distribution

    reg = _load_registry(args)
    top = args.max_degree or reg.complete_through()
    table = DistributionTable.from_registry(reg, max_degree=top)
    if reg.d == paperdata.D:
        diff = verify_distribution(table, max_degree=top)
    elif reg.d in paperdata.SMALL_TOTALS:
        # only the total c_d is printed for small d
        bound = paperdata.DEGREE_BOUNDS[reg.d]
        if top < bound:
            raise UsageError(f"registry is complete through degree {top}; c_{reg.d} needs degree {bound}")
        found, want = table.truncated(bound).total(), paperdata.SMALL_TOTALS[reg.d]
        diff = [] if found == want else [(("total", "all"), found, want)]
    else:
        raise UsageError(f"no expected data is bundled for d={reg.d}")
    recomputed = []
    if args.recompute:
        # verdicts are always exact: --modular only speeds up cells that are not closed by evaluation
        method = "modular" if args.modular else "exact"
        fresh, reports = recompute_distribution(reg, max_degree=top, seed=args.seed, method=method)
        if method == "modular":
            flagged = [(r.degree, r.order) for r in reports if r.proof == "modular"]
            if flagged:
                fresh2, _ = recompute_distribution(reg, seed=args.seed, method="exact", cells=flagged)
                for c in flagged:
                    fresh[c] = fresh2[c]
        recomputed = fresh.diff(table)
    rows = [{"degree": c[0], "order": c[1], "found": a, "expected": b, "source": "expected"} for c, a, b in diff]
    rows += [{"degree": c[0], "order": c[1], "found": b, "expected": a, "source": "recomputed"} for c, a, b in recomputed]
    if args.format == "records":
        _emit(args, rows, "")
    else:
        for r in rows:
            print(f"({r['degree']},{r['order']}): registry {r['found']} vs {r['source']} {r['expected']}")
        print(f"verified degrees 1..{top}: {'OK' if not rows else f'{len(rows)} differing cells'}")
    return EXIT_DIFF if rows else EXIT_OK


def cmd_audit(args) -> int:
    from .discover import audit_registry

    reg = _load_registry(args)
    problems = audit_registry(reg, seed=args.seed, deep=args.deep)
    if args.format == "records":
        _emit(args, [{"problem": p} for p in problems], "")
    else:
        for p in problems:
            print(p)
        print(f"audited {len(reg)} records: {'OK' if not problems else f'{len(problems)} problems'}")
    return EXIT_DIFF if problems else EXIT_OK


# parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "records"], default="text", help="records: one JSON object per line")
    common.add_argument("-v", "--verbose", action="store_true", help="log engine progress")

    p = argparse.ArgumentParser(prog="covforge", description="Covariants of binary forms through semi-invariants.")
    p.add_argument("--version", action="version", version=f"covforge {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("dim", parents=[common], help="Cayley-Sylvester dimension of C_{i,j}")
    s.add_argument("d", type=int)
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("transvect", parents=[common], help="transvectant (F,G)^r of two covariants")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("F")
    s.add_argument("G")
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_transvect)

    s = sub.add_parser("semitransvect", parents=[common], help="semitransvectant [f,g]^r of two semi-invariants")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_semitransvect)

    s = sub.add_parser("kappa", parents=[common], help="leading coefficient of a covariant")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("F")
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("reconstruct", parents=[common], help="covariant with a given semi-invariant as leading coefficient")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("f")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("discover", parents=[common], help="run (or resume) the generator pipeline")
    s.add_argument("d", type=int)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--registry", help=f"registry file (default ${REGISTRY_ENV})")
    s.add_argument("--modular", action="store_true", help="two-prime modular ranks where evaluation does not settle a cell")
    s.add_argument("--budget", type=int, default=None, help="max candidates tried per cell")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for the cells of one degree")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-q", "--quiet", action="store_true")
    s.set_defaults(func=cmd_discover)

    s = sub.add_parser("replay", parents=[common], help="replay the printed d=7 constructions with an order audit")
    s.add_argument("--sections", default="3,4", help="comma list of 3 and/or 4")
    s.add_argument("--registry", help="write the replayed registry here")
    s.add_argument("--no-check", action="store_true", help="skip the independence check")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("table", parents=[common], help="distribution grid of a registry or a bundled table")
    s.add_argument("--registry")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--expected", action="store_true", help="bundled d=7 table")
    g.add_argument("--printed", action="store_true", help="d=7 appendix exactly as printed")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("verify", parents=[common], help="diff a registry against the bundled d=7 table")
    s.add_argument("--registry")
    s.add_argument("--max-degree", type=int, default=None)
    s.add_argument("--recompute", action="store_true", help="also recompute delta for every cell")
    s.add_argument("--modular", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", parents=[common], help="re-check every record of a registry")
    s.add_argument("--registry")
    s.add_argument("--deep", action="store_true", help="also check that every cell is spanned")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
