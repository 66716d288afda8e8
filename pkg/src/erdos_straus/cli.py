"""Command-line interface: ``erdos-straus <command> ...``.

Exit codes: 0 success, 1 invalid input or nothing found, 2 usage error,
3 arithmetic overflow.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import berggren
from .bezout import FamilyKind, search_reduced, search_solutions
from .core import (
    EscSolution,
    SolutionClass,
    check_eq5,
    check_eq6,
    check_eq7,
    classify,
    enumerate_nontrivial,
    first_nontrivial,
    trivial_solutions,
)
from .integer_kernel import NatOverflow, gcd, is_prime, primes_between
from .triples import TripleKind, forward_solution

log = logging.getLogger("erdos_straus")

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3

SOLUTION_COLUMNS = ("p", "x", "y", "z")
TABLE_COLUMNS = ("p", "x", "y", "z", "A", "B", "C")
CERT_COLUMNS = ("p", "x", "y", "z", "kind", "m", "k", "discriminant")


class Emitter:
    """Writes homogeneous rows as aligned text, CSV or JSON lines."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def rows(self, columns, rows):
        rows = [tuple(r[c] for c in columns) for r in rows]
        if self.fmt == "json":
            for r in rows:
                self.out.write(json.dumps(dict(zip(columns, r))) + "\n")
        elif self.fmt == "csv":
            self.out.write(",".join(columns) + "\n")
            for r in rows:
                self.out.write(",".join(str(v) for v in r) + "\n")
        else:
            cells = [tuple(str(v) for v in r) for r in rows]
            widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
            self.out.write(" ".join(c.rjust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
            for r in cells:
                self.out.write(" ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n")

    def record(self, data: dict):
        if self.fmt == "json":
            self.out.write(json.dumps(data) + "\n")
        elif self.fmt == "csv":
            self.rows(tuple(data), [data])
        else:
            for key, value in data.items():
                self.out.write(f"{key}: {value}\n")


def _solution_row(sol: EscSolution) -> dict:
    return {"p": sol.p, "x": sol.x, "y": sol.y, "z": sol.z}


def _prime_arg(parser, p: int, odd: bool = True) -> int:
    if not is_prime(p) or (odd and p == 2):
        parser.error(f"{p} is not {'an odd ' if odd else 'a '}prime")
    return p


def cmd_verify(args, emit: Emitter, parser) -> int:
    p, x, y, z = args.p, args.x, args.y, args.z
    if min(p, x, y, z) <= 0:
        parser.error("verify needs four positive integers")
    sol = EscSolution(p, x, y, z)
    kind = classify(sol)
    report = {"p": p, "x": x, "y": y, "z": z, "kind": str(kind)}
    if kind in (SolutionClass.TYPE_I, SolutionClass.TYPE_II) and p != 2 and is_prime(p):
        (num, den), ok5 = check_eq5(p, x, y)
        report["eq5"] = ok5
        report["eq5_value"] = str(num) if den == 1 else f"{num}/{den}"
        report["eq6"] = check_eq6(p, x, z, gcd(p, y))
        report["eq7"] = check_eq7(p, y, z)
    emit.record(report)
    return EXIT_NOT_FOUND if kind is SolutionClass.INVALID else EXIT_OK


def cmd_enumerate(args, emit: Emitter, parser) -> int:
    p = _prime_arg(parser, args.p, odd=False)
    sols = list(trivial_solutions(p)) if args.all else []
    if p != 2:
        sols += enumerate_nontrivial(p)
    emit.rows(SOLUTION_COLUMNS + ("kind",), [dict(_solution_row(s), kind=str(classify(s))) for s in sols])
    return EXIT_OK if sols else EXIT_NOT_FOUND


def table_rows(kind: TripleKind, p_max: int) -> list[dict]:
    rows = []
    for p in primes_between(3, p_max):
        for sol in enumerate_nontrivial(p):
            try:
                t = forward_solution(kind, sol)
            except NatOverflow as exc:
                log.warning("skipping %s: %s", sol, exc)
                continue
            rows.append(dict(_solution_row(sol), A=t.A, B=t.B, C=t.C))
    return rows


def cmd_tables(args, emit: Emitter, parser) -> int:
    if args.p_max < 3:
        parser.error("p_max must be >= 3")
    emit.rows(TABLE_COLUMNS, table_rows(TripleKind(args.kind), args.p_max))
    return EXIT_OK


def cmd_search(args, emit: Emitter, parser) -> int:
    p = _prime_arg(parser, args.p)
    if args.m_max < 1 or args.k_max < 1:
        parser.error("m_max and k_max must be >= 1")
    kind = FamilyKind(args.kind)
    if args.reduced:
        if kind is not FamilyKind.TYPE_II:
            parser.error("--reduced applies to typeII only")
        certs = search_reduced(p, args.m_max, args.k_max)
    else:
        certs = search_solutions(p, kind, args.m_max, args.k_max)
    rows = []
    for c in certs:
        if classify(c.solution) is not kind.solution_class:
            raise AssertionError(f"certificate failed re-verification: {c}")
        rows.append(dict(_solution_row(c.solution), kind=str(c.kind), m=c.m, k=c.k, discriminant=c.discriminant))
    emit.rows(CERT_COLUMNS, rows)
    return EXIT_OK if rows else EXIT_NOT_FOUND


def cmd_berggren(args, emit: Emitter, parser) -> int:
    if args.path is not None:
        try:
            labels = berggren.find_path(*args.path)
        except ValueError as exc:
            log.error("%s", exc)
            return EXIT_NOT_FOUND
        emit.record({"a": args.path[0], "b": args.path[1], "c": args.path[2], "path": "/".join(labels)})
        return EXIT_OK
    if args.depth < 0:
        parser.error("depth must be >= 0")
    nodes = berggren.enumerate_tree(args.depth, args.max_c)
    emit.rows(
        ("depth", "a", "b", "c", "path"),
        [{"depth": n.depth, "a": n.triple[0], "b": n.triple[1], "c": n.triple[2], "path": "/".join(n.path) or "-"} for n in nodes],
    )
    return EXIT_OK


def _witness_block(primes: list[int]) -> list[tuple[int, tuple[int, int, int] | None, int]]:
    out = []
    for p in primes:
        w = first_nontrivial(p)
        out.append((p, None if w is None else w.xyz, len(trivial_solutions(p))))
    return out


def range_witnesses(p_lo: int, p_hi: int, workers: int = 1):
    """First non-trivial witness per prime, in prime order, for any worker count."""
    primes = primes_between(max(p_lo, 3), p_hi)
    if workers <= 1 or len(primes) < 2:
        return _witness_block(primes)
    size = -(-len(primes) // workers)
    blocks = [primes[i : i + size] for i in range(0, len(primes), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_witness_block, blocks))
    return [row for block in results for row in block]


def cmd_range(args, emit: Emitter, parser) -> int:
    if args.p_lo > args.p_hi:
        parser.error("p_lo must be <= p_hi")
    if args.workers < 1:
        parser.error("workers must be >= 1")
    results = range_witnesses(args.p_lo, args.p_hi, args.workers)
    missing = [p for p, w, _ in results if w is None]
    if not args.quiet:
        emit.rows(SOLUTION_COLUMNS, [{"p": p, "x": w[0], "y": w[1], "z": w[2]} for p, w, _ in results if w])
    emit.record(
        {
            "primes_checked": len(results),
            "witnessed": len(results) - len(missing),
            "with_trivial": sum(1 for _, _, t in results if t),
            "missing": " ".join(map(str, missing)) or "none",
        }
    )
    return EXIT_NOT_FOUND if missing else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="erdos-straus", description=__doc__.splitlines()[0])
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="comma-separated output with a header row")
    fmt.add_argument("--json", action="store_true", help="one JSON object per line")
    parser.add_argument("--quiet", action="store_true", help="suppress per-row output and warnings where possible")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check and classify a candidate (p, x, y, z)")
    for name in ("p", "x", "y", "z"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="all non-trivial solutions for a prime")
    p.add_argument("p", type=int)
    p.add_argument("--all", action="store_true", help="include trivial solutions")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", help="solutions with their Pythagorean triples for primes <= p_max")
    p.add_argument("kind", choices=[k.value for k in TripleKind])
    p.add_argument("p_max", type=int)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("search", help="square-discriminant search over Bezout families")
    p.add_argument("p", type=int)
    p.add_argument("kind", choices=[k.value for k in FamilyKind])
    p.add_argument("m_max", type=int)
    p.add_argument("k_max", type=int)
    p.add_argument("--reduced", action="store_true", help="use the reduced type II scan")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("berggren", help="primitive triple tree")
    p.add_argument("depth", type=int, nargs="?", default=2)
    p.add_argument("--max-c", type=int, default=None, help="hypotenuse bound")
    p.add_argument("--path", type=int, nargs=3, metavar=("A", "B", "C"), help="print the path to a triple")
    p.set_defaults(func=cmd_berggren)

    p = sub.add_parser("range", help="first non-trivial witness for every prime in [p_lo, p_hi]")
    p.add_argument("p_lo", type=int)
    p.add_argument("p_hi", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_range)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(levelname)s: %(message)s")
    emit = Emitter("json" if args.json else "csv" if args.csv else "text")
    try:
        return args.func(args, emit, parser)
    except NatOverflow as exc:
        log.error("overflow: %s", exc)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
