"""Batch command-line interface.

Exit codes: 0 success, 1 structural rejection (disconnected, degenerate,
invalid thickening), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence, TextIO

from . import oracle
from .antithicken import find_square_connected_pair, optimal_antithickening, verify_thickening
from .exceptions import DomainError, StructuralError, TrigraphError
from .gen import gen_cliques_matching, gen_named, gen_random_laminar_base
from .io import read_map, read_trigraph, serialize_trigraph, write_map
from .schposc import StepCounter, schposc
from .structure import CliquePair
from .trigraph import classify

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def _pair(P: CliquePair) -> str:
    return "A: " + " ".join(map(str, P.A)) + " | B: " + " ".join(map(str, P.B))


def _emit(text: str, path: str | None, out: TextIO) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_classify(args, out: TextIO) -> int:
    G = read_trigraph(args.file)
    c = classify(G)
    lines = [
        f"vertices: {G.n}",
        f"adjacent pairs: {G.m}",
        f"connected: {_b(c.connected)}",
        f"claw-free: {_b(c.claw_free)}",
        f"quasi-line: {_b(c.quasi_line)}",
        f"cobipartite: {_b(c.cobipartite)}",
        f"alpha>=3: {_b(c.alpha_ge_3)}",
        f"degenerate: {_b(c.degenerate)}",
    ]
    if c.degenerate:
        lines.append(f"reason: {c.failed_criterion()}")
    if args.laminar:
        lines.append(f"laminar: {_b(find_square_connected_pair(G) is None)}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_antithicken(args, out: TextIO) -> int:
    G = read_trigraph(args.file)
    result = optimal_antithickening(G, force=args.force, recheck=not args.no_recheck)
    _emit(serialize_trigraph(result.reduced), args.output, out)
    if args.map:
        write_map(result.map, args.map)
    if args.output not in (None, "-"):
        out.write(f"reduced vertices: {result.reduced.n}\n")
        out.write(f"contracted pairs: {len(result.contracted_pairs)}\n")
        for P in result.contracted_pairs:
            out.write(_pair(P) + "\n")
    return EXIT_OK


def cmd_schposc(args, out: TextIO) -> int:
    G = read_trigraph(args.file)
    P = schposc(G, args.u, args.v)
    out.write((_pair(P) if P else "none") + "\n")
    return EXIT_OK


def cmd_laminar(args, out: TextIO) -> int:
    G = read_trigraph(args.file)
    P = find_square_connected_pair(G)
    out.write(f"laminar: {_b(P is None)}\n")
    if P is not None:
        out.write(f"witness: {_pair(P)}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    G = read_trigraph(args.g)
    Gp = read_trigraph(args.gp)
    I = read_map(args.map)
    ok = verify_thickening(Gp, I, G)
    out.write(f"thickening: {'valid' if ok else 'invalid'}\n")
    return EXIT_OK if ok else EXIT_REJECTED


def cmd_oracle(args, out: TextIO) -> int:
    cap = args.cap
    if args.oracle_cmd == "hposcs":
        G = read_trigraph(args.file)
        kw = {} if cap is None else {"cap": cap}
        for P in oracle.enumerate_hposcs(G, args.kind, **kw):
            out.write(_pair(P) + "\n")
    elif args.oracle_cmd == "schposcs":
        G = read_trigraph(args.file)
        kw = {} if cap is None else {"cap": cap}
        P = oracle.minimal_hposc_containing(G, args.u, args.v, **kw)
        out.write((_pair(P) if P else "none") + "\n")
    elif args.oracle_cmd == "laminar":
        G = read_trigraph(args.file)
        kw = {} if cap is None else {"cap": cap}
        out.write(f"laminar: {_b(oracle.laminar_by_enumeration(G, **kw))}\n")
    elif args.oracle_cmd == "antithickenings":
        G = read_trigraph(args.file)
        kw = {} if cap is None else {"cap": cap}
        found = oracle.optimal_antithickenings(G, **kw) if args.optimal else oracle.enumerate_antithickenings(G, **kw)
        for Q, I in found:
            parts = " | ".join(" ".join(map(str, p)) for p in I.parts)
            out.write(f"{Q.n} parts: {parts}\n")
    elif args.oracle_cmd == "iso":
        G1, G2 = read_trigraph(args.file1), read_trigraph(args.file2)
        kw = {} if cap is None else {"cap": cap}
        f = oracle.find_isomorphism(G1, G2, **kw)
        out.write(f"isomorphic: {_b(f is not None)}\n")
        if f is not None:
            out.write("mapping: " + " ".join(f"{u}->{w}" for u, w in enumerate(f)) + "\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    if args.family == "cliques-matching":
        G = gen_cliques_matching(args.k)
    elif args.family == "named":
        G = gen_named(args.name)
    else:
        G = gen_random_laminar_base(args.n, args.seed)
    _emit(serialize_trigraph(G), args.output, out)
    return EXIT_OK


def bench_rows(kmin: int, kmax: int) -> list[dict]:
    """One row per k in kmin, 2*kmin, ... <= kmax on the cliques-plus-matching family.

    ``seed_steps`` counts a single SCHPOSC run from the seed ``(a0, a1)``;
    ``pipeline_steps`` and ``seconds`` cover the forced full pipeline.
    """
    rows = []
    k = kmin
    while k <= kmax:
        G = gen_cliques_matching(k)
        seed_steps = StepCounter()
        schposc(G, 0, 1, counter=seed_steps)
        pipeline_steps = StepCounter()
        t0 = time.perf_counter()
        result = optimal_antithickening(G, force=True, counter=pipeline_steps)
        elapsed = time.perf_counter() - t0
        rows.append(
            dict(k=k, n=G.n, m=G.m, reduced=result.reduced.n, seed_steps=seed_steps.steps,
                 pipeline_steps=pipeline_steps.steps, seconds=elapsed)
        )
        k *= 2
    return rows


def cmd_bench(args, out: TextIO) -> int:
    if args.kmin < 2 or args.kmax < args.kmin:
        raise DomainError("need 2 <= KMIN <= KMAX")
    cols = ["k", "n", "m", "reduced", "seed_steps", "pipeline_steps"]
    if not args.no_time:
        cols.append("seconds")
    out.write("\t".join(cols) + "\n")
    for row in bench_rows(args.kmin, args.kmax):
        cells = [str(row[c]) for c in cols if c != "seconds"]
        if not args.no_time:
            cells.append(f"{row['seconds']:.4f}")
        out.write("\t".join(cells) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trigraph", description="Optimal antithickenings of claw-free trigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="report connectivity, claw-freeness and degeneracy")
    s.add_argument("file")
    s.add_argument("--laminar", action="store_true", help="also test laminarity (O(m^2))")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("antithicken", help="compute the optimal antithickening")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="reduced trigraph file (default: stdout)")
    s.add_argument("--map", help="write the thickening map here")
    s.add_argument("--force", action="store_true", help="run on degenerate input")
    s.add_argument("--no-recheck", action="store_true", help="skip output verification")
    s.set_defaults(func=cmd_antithicken)

    s = sub.add_parser("schposc", help="grow the smallest pair around seed U V")
    s.add_argument("file")
    s.add_argument("u", type=int)
    s.add_argument("v", type=int)
    s.set_defaults(func=cmd_schposc)

    s = sub.add_parser("laminar", help="test laminarity")
    s.add_argument("file")
    s.set_defaults(func=cmd_laminar)

    s = sub.add_parser("verify", help="check that G is a thickening of GP via MAP")
    s.add_argument("g")
    s.add_argument("gp")
    s.add_argument("map")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="brute-force reference computations")
    osub = s.add_subparsers(dest="oracle_cmd", required=True)
    o = osub.add_parser("hposcs")
    o.add_argument("file")
    o.add_argument("--kind", choices=["all", "deletion_minimal", "square_connected"], default="all")
    o = osub.add_parser("schposcs")
    o.add_argument("file")
    o.add_argument("u", type=int)
    o.add_argument("v", type=int)
    o = osub.add_parser("laminar")
    o.add_argument("file")
    o = osub.add_parser("antithickenings")
    o.add_argument("file")
    o.add_argument("--optimal", action="store_true", help="only laminar ones of maximum size")
    o = osub.add_parser("iso")
    o.add_argument("file1")
    o.add_argument("file2")
    for o in osub.choices.values():
        o.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="write a generated trigraph")
    gsub = s.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("cliques-matching")
    g.add_argument("k", type=int)
    g = gsub.add_parser("named")
    g.add_argument("name")
    g = gsub.add_parser("random")
    g.add_argument("n", type=int)
    g.add_argument("seed", type=int)
    for g in gsub.choices.values():
        g.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="scaling table on the cliques-plus-matching family")
    bsub = s.add_subparsers(dest="family", required=True)
    b = bsub.add_parser("cliques-matching")
    b.add_argument("kmin", type=int)
    b.add_argument("kmax", type=int)
    b.add_argument("--no-time", action="store_true", help="omit the wall-time column")
    s.set_defaults(func=cmd_bench)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except DomainError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except StructuralError as e:
        err.write(f"rejected: {e}\n")
        return EXIT_REJECTED
    except TrigraphError as e:
        err.write(f"error: {e}\n")
        return EXIT_REJECTED
    except OSError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
