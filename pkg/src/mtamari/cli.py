"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from .engine.base import SPECS
from .formulas import ballot_count, dim_formula

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PATH_LIMIT = 200_000
LABELLED_LIMIT = 2_000_000
ORDER_LIMIT = 8


class GuardError(Exception):
    """A request exceeds the default size limits."""


@dataclass
class RunConfig:
    m: int = 1
    n: Optional[int] = None
    N: int = 4
    spec: str = "generic"
    fmt: str = "text"
    force: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise GuardError("-m must be at least 1")
        if self.N < 1:
            raise GuardError("-N must be at least 1")
        if self.n is not None and self.n < 0:
            raise GuardError("-n must be nonnegative")
        if self.spec not in SPECS:
            raise GuardError(f"--spec must be one of {', '.join(SPECS)}")

    def need_n(self) -> int:
        if self.n is None:
            raise GuardError("this command needs -n")
        return self.n

    def guard_paths(self) -> None:
        size = ballot_count(self.m, self.need_n())
        if size > PATH_LIMIT and not self.force:
            raise GuardError(f"{size} paths exceed the limit of {PATH_LIMIT}; rerun with --force (may be slow)")

    def guard_labelled(self) -> None:
        n = self.need_n()
        self.guard_paths()
        size = dim_formula(self.m, n)
        if size > LABELLED_LIMIT and not self.force:
            raise GuardError(f"{size} labelled intervals exceed the limit of {LABELLED_LIMIT}; "
                             "rerun with --force (may be slow)")

    def guard_order(self) -> None:
        if self.N > ORDER_LIMIT and not self.force:
            raise GuardError(f"-N {self.N} exceeds the default limit {ORDER_LIMIT}; rerun with --force (may be slow)")


def _config(args) -> RunConfig:
    fmt = args.format
    if getattr(args, "dot", False):
        fmt = "dot"
    return RunConfig(m=args.m, n=getattr(args, "n", None), N=getattr(args, "N", 4),
                     spec=getattr(args, "spec", "generic"), fmt=fmt, force=args.force, jobs=args.jobs)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_paths(cfg: RunConfig, args) -> int:
    from .combinatorics import enumerate_ballot_paths

    cfg.guard_paths()
    paths = enumerate_ballot_paths(cfg.m, cfg.need_n())
    if args.count:
        _emit(str(len(paths)))
    elif cfg.fmt == "json":
        _emit(json.dumps({"m": cfg.m, "n": cfg.n, "paths": [P.steps for P in paths]}, indent=1))
    else:
        _emit("\n".join(P.steps or "(empty)" for P in paths))
    return EXIT_OK


def cmd_lattice(cfg: RunConfig, args) -> int:
    from .lattice import build_lattice

    cfg.guard_paths()
    L = build_lattice(cfg.m, cfg.need_n(), force=cfg.force)
    if cfg.fmt == "dot":
        _emit(L.to_dot())
    elif cfg.fmt == "json":
        edges = [[str(L.nodes[i]), str(L.nodes[j])] for i, ups in enumerate(L.cover_edges) for j in ups]
        _emit(json.dumps({"m": cfg.m, "n": cfg.n, "nodes": [str(P) for P in L.nodes], "covers": edges}, indent=1))
    else:
        for i, P in enumerate(L.nodes):
            ups = " ".join(str(L.nodes[j]) for j in L.cover_edges[i])
            _emit(f"{P or '(empty)'}\t{ups}")
    if args.figure:
        from .plotting import plot_hasse

        plot_hasse(L, args.figure)
    return EXIT_OK


def cmd_intervals(cfg: RunConfig, args) -> int:
    from .lattice import build_lattice

    cfg.guard_paths()
    L = build_lattice(cfg.m, cfg.need_n(), force=cfg.force)
    if args.count:
        _emit(str(L.interval_count()))
    elif cfg.fmt == "json":
        _emit(L.intervals_json())
    else:
        for i, j in L.interval_pairs():
            _emit(f"{L.nodes[i] or '(empty)'}\t{L.nodes[j] or '(empty)'}")
    return EXIT_OK


def cmd_character_table(cfg: RunConfig, args) -> int:
    from .action import character_table

    cfg.guard_labelled()
    n = cfg.need_n()
    if n < 1:
        raise GuardError("character tables need -n >= 1")
    table = character_table(cfg.m, n)
    if cfg.fmt == "json":
        _emit(table.to_json())
    elif cfg.fmt == "tsv":
        _emit(table.to_text(sep="\t"))
    else:
        _emit(table.to_text())
    if args.figure:
        from .plotting import plot_characters

        plot_characters(table, args.figure)
    return EXIT_OK if table.all_match else EXIT_FAIL


def cmd_series(cfg: RunConfig, args) -> int:
    from .engine import closed, functional, tower

    cfg.guard_order()
    kind = args.kind
    if kind == "iterate":
        S = functional.iterate_functional_equation(cfg.m, cfg.N, cfg.spec)
    elif kind == "q":
        S = functional.q_iterate(cfg.m, cfg.N)
    elif kind == "changed":
        S = closed.change_of_variables(functional.iterate_functional_equation(cfg.m, cfg.N, cfg.spec), cfg.m,
                                       spec=cfg.spec)
    elif kind == "tower":
        S = tower.assemble_F(tower.phi_tower(cfg.m, cfg.N, True, cfg.spec))
    else:
        S = closed.closed_form_G1(cfg.m, cfg.N, cfg.spec)
    if cfg.fmt == "json":
        _emit(json.dumps(S.to_json(), indent=1))
    else:
        for n, c in enumerate(S.coeffs):
            _emit(f"[{S.var}^{n}] {c}")
    return EXIT_OK


def _suite_names(suite: str) -> List[str]:
    from .verify import ALL

    return list(ALL) if suite == "all" else [suite]


def cmd_verify(cfg: RunConfig, args) -> int:
    from .verify import run_many

    cfg.guard_order()
    names = _suite_names(args.suite)
    if any(s in ("characters", "lattice") for s in names):
        cfg.guard_labelled()
    if "oracle" in names and cfg.N > 5 and not cfg.force:
        raise GuardError("the oracle suite enumerates all permutations; -N above 5 needs --force")
    reports = run_many(names, cfg.m, cfg.N, cfg.n, jobs=cfg.jobs)
    if cfg.fmt == "json":
        _emit(json.dumps([r.payload() for r in reports], indent=1))
    else:
        sep = "\t" if cfg.fmt == "tsv" else None
        for r in reports:
            _emit(r.to_text(sep))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_report(cfg: RunConfig, args) -> int:
    """Verification reports, the character table and both figures under one directory."""
    from .action import character_table
    from .lattice import build_lattice
    from .plotting import plot_characters, plot_hasse
    from .verify import ALL, run_many

    n = cfg.need_n()
    if n < 1:
        raise GuardError("report needs -n >= 1")
    cfg.guard_labelled()
    cfg.guard_order()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = list(ALL) + ["characters", "lattice"]
    reports = run_many(names, cfg.m, cfg.N, n, jobs=cfg.jobs)
    (out / "verification.json").write_text(json.dumps([r.payload() for r in reports], indent=1) + "\n")
    (out / "verification.tsv").write_text("".join(r.to_text("\t") for r in reports))
    table = character_table(cfg.m, n)
    (out / "characters.tsv").write_text(table.to_text(sep="\t"))
    plot_characters(table, out / "characters.png")
    L = build_lattice(cfg.m, n, force=cfg.force)
    (out / "lattice.dot").write_text(L.to_dot())
    plot_hasse(L, out / "hasse.png")
    for r in reports:
        _emit(f"{r.suite}\t{'pass' if r.ok else 'FAIL'}\t{len(r.checks)} checks")
    _emit(f"wrote {out}")
    return EXIT_OK if all(r.ok for r in reports) and table.all_match else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", type=int, default=1, help="slope m >= 1 (default 1)")
    common.add_argument("--format", choices=["text", "json", "dot", "tsv"], default="text")
    common.add_argument("--force", action="store_true", help="lift the default size guards (may be slow)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent suites")

    parser = argparse.ArgumentParser(prog="mtamari", description="m-Tamari intervals, characters and series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", parents=[common], help="list m-ballot paths")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("lattice", parents=[common], help="covering relations or DOT graph")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p.add_argument("--figure", metavar="PNG", help="also render the Hasse diagram")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("intervals", parents=[common], help="list or count intervals")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("character-table", parents=[common], help="enumerated characters next to the formula")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--figure", metavar="PNG", help="also render a character chart")
    p.set_defaults(func=cmd_character_table)

    p = sub.add_parser("series", parents=[common], help="dump a series through order N")
    p.add_argument("-N", type=int, default=4)
    p.add_argument("--spec", choices=SPECS, default="generic")
    p.add_argument("--kind", choices=["iterate", "q", "changed", "tower", "y1"], default="iterate",
                   help="iterated equation in t, its q-variant, the (z,u) form, the assembled tower, "
                        "or the closed form at y=1")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", default="all",
                   choices=["oracle", "closed-form", "phi-tower", "identities", "q-analogue", "unlabelled",
                            "extraction", "characters", "lattice", "all"])
    p.add_argument("-N", type=int, default=4)
    p.add_argument("-n", type=int, default=None, help="size for the characters and lattice suites")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="write reports, tables and figures to a directory")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-N", type=int, default=4)
    p.add_argument("--out", default="mtamari-report")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    from .lattice import SizeGuardError

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(cfg, args)
    except (GuardError, SizeGuardError) as exc:
        sys.stderr.write(f"mtamari: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
