"""Command-line interface: ``zerospec <subcommand> ...``.

Exit status is 0 on success, 1 for invalid input (or a failed ``verify``),
and 2 when an internal invariant check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from typing import Sequence, TextIO

from . import __version__
from .exceptions import HypergraphError, InvariantViolation
from .hypergraph import (
    Hypergraph,
    connected_components,
    format_hypergraph,
    gen_complete,
    gen_cored_star,
    gen_power,
    gen_random_connected,
    incidence_matrix,
    parse_hypergraph,
)
from .linalg import integer_snf, invariant_divisors_mod, rank_gf2, solve_mod
from .oracle import DEFAULT_TOL, BruteForceBudgetError, brute_force_count, exponent_to_vector, residual
from .serialize import dumps, report_rows_csv
from .spectral import ZeroSpectrum, enumerate_bipartitions, enumerate_eigenvectors

DEFAULT_CAP = 10_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)

    parser = _Parser(prog="zerospec", parents=[fmt], description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[fmt], help="zero-spectrum report per component")
    p.add_argument("input", help="hypergraph file, or - for stdin")

    p = sub.add_parser("enumerate", parents=[fmt], help="list eigenvectors or bipartitions")
    p.add_argument("input")
    p.add_argument(
        "--kind", choices=("laplacian", "signless", "even-bip", "odd-bip"), default="laplacian"
    )
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_CAP)

    p = sub.add_parser("snf", parents=[fmt], help="Smith normal form of the incidence matrix")
    p.add_argument("input")
    p.add_argument("--mod", type=int, default=None, help="modulus (default: the uniformity m)")

    p = sub.add_parser("generate", parents=[fmt], help="write a generated hypergraph")
    gen = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gen.add_parser("complete", parents=[fmt])
    g.add_argument("n", type=int)
    g.add_argument("m", type=int)
    g = gen.add_parser("star", parents=[fmt])
    g.add_argument("t", type=int)
    g.add_argument("m", type=int)
    g = gen.add_parser("power", parents=[fmt])
    g.add_argument("graph", help="2-uniform hypergraph file of the base graph, or -")
    g.add_argument("m", type=int)

    p = sub.add_parser("verify", parents=[fmt], help="check one exponent vector")
    p.add_argument("input")
    p.add_argument("--alpha", required=True, help="comma-separated exponents")
    p.add_argument("--kind", choices=("laplacian", "signless"), default="laplacian")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)

    p = sub.add_parser("oracle", parents=[fmt], help="Smith-form counts vs brute force")
    p.add_argument("--random", type=_positive_int, required=True, dest="count")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_input(path: str, stdin: TextIO) -> Hypergraph:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise HypergraphError(f"cannot read {path}: {exc.strerror}") from None
    return parse_hypergraph(text)


def _connected(H: Hypergraph) -> Hypergraph:
    comps = connected_components(H)
    if len(comps) > 1:
        raise HypergraphError(
            f"input has {len(comps)} connected components; this subcommand needs a connected hypergraph"
        )
    return H


def cmd_analyze(args, out: TextIO, stdin: TextIO) -> int:
    H = _read_input(args.input, stdin)
    comps = connected_components(H)
    rows = []
    for idx, comp in enumerate(comps, start=1):
        rep = ZeroSpectrum(comp).report() if comp.k else None
        rows.append({"component": idx, "vertices": list(comp.labels), "report": rep})

    if args.format == "json":
        if len(rows) == 1:
            out.write(dumps(rows[0]["report"]))
        else:
            out.write(dumps({"components": rows}))
    elif args.format == "csv":
        out.write(report_rows_csv([{**r, "report": r["report"] and r["report"].to_dict()} for r in rows]))
    else:
        for row in rows:
            out.write(_report_text(row, len(rows)))
    return 0


def _span(labels: list[int]) -> str:
    if labels == list(range(labels[0], labels[-1] + 1)) and len(labels) > 1:
        return f"{labels[0]}-{labels[-1]}"
    return ",".join(map(str, labels))


def _report_text(row: dict, total: int) -> str:
    rep = row["report"]
    lines = [f"component {row['component']} of {total} (vertices {_span(row['vertices'])})"]
    if rep is None:
        lines.append("  isolated vertex: no edges, nothing to analyze")
        return "\n".join(lines) + "\n\n"
    divs = ", ".join(map(str, rep.divisors))
    lines += [
        f"  n={rep.n} m={rep.m} k={rep.k}",
        f"  invariant divisors over Z_{rep.m}: {divs} (r={rep.r_m})",
        f"  rank over GF(2): {rep.r_bar}",
        f"  first Laplacian eigenvectors: {rep.count_L} ≅ {rep.structure_string()}"
        f" (composition length {rep.composition_length})",
        f"    H-eigenvectors: {rep.countH_L}  N-eigenvectors: {rep.countN_L}",
        f"  first signless Laplacian eigenvectors: {rep.count_Q}",
        f"    H-eigenvectors: {rep.countH_Q}  N-eigenvectors: {rep.countN_Q}",
        f"  odd-colorable: {'yes' if rep.odd_colorable else 'no'}",
        f"  odd-bipartite: {'yes' if rep.odd_bipartite else 'no'}",
    ]
    if rep.even_bipartitions is not None:
        lines.append(
            f"  even bipartitions: {rep.even_bipartitions}  odd bipartitions: {rep.odd_bipartitions}"
        )
    return "\n".join(lines) + "\n\n"


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    H = _connected(_read_input(args.input, stdin))
    zs = ZeroSpectrum(H)
    if args.kind in ("laplacian", "signless"):
        total = zs.count(args.kind)
        items = [list(v.alpha) for v in enumerate_eigenvectors(H, args.kind, args.cap)]
        field = "alpha"
    else:
        parity = "even" if args.kind == "even-bip" else "odd"
        if H.m % 2:
            raise HypergraphError("bipartitions need even uniformity")
        total = zs.count_H("laplacian" if parity == "even" else "signless")
        items = [
            {"V0": list(b.V0), "V1": list(b.V1)}
            for b in enumerate_bipartitions(H, parity, args.cap)
        ]
        field = "bipartition"

    if args.format == "json":
        out.write(dumps({"kind": args.kind, "m": H.m, "total": total,
                         "emitted": len(items), "items": items}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if field == "alpha":
            w.writerow([f"v{i}" for i in range(1, H.n + 1)])
            w.writerows(items)
        else:
            w.writerow(["V0", "V1"])
            w.writerows([[" ".join(map(str, b["V0"])), " ".join(map(str, b["V1"]))] for b in items])
        out.write(buf.getvalue())
    else:
        out.write(f"# {args.kind}: {len(items)} of {total}\n")
        for item in items:
            if field == "alpha":
                out.write(",".join(map(str, item)) + "\n")
            else:
                out.write(f"V0={','.join(map(str, item['V0']))} V1={','.join(map(str, item['V1']))}\n")
    return 0


def cmd_snf(args, out: TextIO, stdin: TextIO) -> int:
    H = _read_input(args.input, stdin)
    B = incidence_matrix(H)
    snf = integer_snf(B)
    mod = H.m if args.mod is None else args.mod
    if mod < 2:
        raise HypergraphError(f"--mod must be >= 2, got {mod}")
    inv = invariant_divisors_mod(snf, mod)
    data = {
        "shape": list(snf.shape),
        "integer_factors": list(snf.diag),
        "rank_Z": snf.r,
        "modulus": mod,
        "divisors": list(inv.divisors),
        "r_m": inv.r_m,
        "rank_gf2": rank_gf2(B),
        "P": [list(r) for r in snf.P],
        "Q": [list(r) for r in snf.Q],
    }
    if args.format == "json":
        out.write(dumps(data))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank_Z", "integer_factors", "modulus", "divisors", "r_m", "rank_gf2"])
        w.writerow([snf.r, " ".join(map(str, snf.diag)), mod,
                    " ".join(map(str, inv.divisors)), inv.r_m, data["rank_gf2"]])
        out.write(buf.getvalue())
    else:
        out.write(f"incidence matrix {snf.shape[0]}x{snf.shape[1]}, rank over Z: {snf.r}\n")
        out.write(f"integer invariant factors: {' '.join(map(str, snf.diag))}\n")
        out.write(f"invariant divisors over Z_{mod}: {' '.join(map(str, inv.divisors))} (r={inv.r_m})\n")
        out.write(f"rank over GF(2): {data['rank_gf2']}\n")
        out.write("P =\n" + _matrix_text(snf.P) + "Q =\n" + _matrix_text(snf.Q))
    return 0


def _matrix_text(M) -> str:
    width = max((len(str(x)) for row in M for x in row), default=1)
    return "".join("  " + " ".join(str(x).rjust(width) for x in row) + "\n" for row in M)


def cmd_generate(args, out: TextIO, stdin: TextIO) -> int:
    if args.family == "complete":
        H = gen_complete(args.n, args.m)
    elif args.family == "star":
        H = gen_cored_star(args.t, args.m)
    else:
        G = _read_input(args.graph, stdin)
        if G.m != 2:
            raise HypergraphError(f"base graph must be 2-uniform, got m={G.m}")
        H = gen_power(G.edges, args.m, n0=G.n)
    out.write(dumps(H.to_dict()) if args.format == "json" else format_hypergraph(H))
    return 0


def cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    H = _read_input(args.input, stdin)
    try:
        alpha = [int(tok) for tok in args.alpha.split(",")]
    except ValueError:
        raise HypergraphError(f"--alpha must be comma-separated integers, got {args.alpha!r}") from None
    if len(alpha) != H.n:
        raise HypergraphError(f"--alpha has {len(alpha)} entries, hypergraph has {H.n} vertices")
    m = H.m
    if args.kind == "signless" and m % 2:
        target = None
        exact = False
    else:
        target = 0 if args.kind == "laplacian" else m // 2
        exact = all(sum(alpha[v - 1] for v in e) % m == target for e in H.edges)
    res = residual(H, args.kind, 0, exponent_to_vector(alpha, m))
    ok = exact and res < args.tol
    data = {"kind": args.kind, "alpha": alpha, "edge_sums_ok": exact,
            "residual": res, "tol": args.tol, "eigenvector": ok}
    if args.format == "json":
        out.write(dumps(data))
    elif args.format == "csv":
        out.write("kind,edge_sums_ok,residual,tol,eigenvector\n"
                  f"{args.kind},{exact},{res!r},{args.tol!r},{ok}\n")
    else:
        verdict = "PASS" if ok else "FAIL"
        out.write(f"{verdict}: {args.kind} residual {res:.3e} (tol {args.tol:g}), "
                  f"edge sums {'ok' if exact else 'violated'}\n")
    return 0 if ok else 1


def oracle_run(count: int, max_n: int, m: int, seed: int) -> list[dict]:
    """Compare Smith-form cardinalities with exhaustive counts on random instances."""
    if m < 2:
        raise HypergraphError(f"--m must be >= 2, got {m}")
    budget_n = max(n for n in range(1, 64) if m**n <= 10**6)
    hi = min(max_n, budget_n)
    if hi < m:
        raise HypergraphError(f"no instance fits: need m <= max-n <= {budget_n} for m={m}")
    rng = random.Random(seed)
    results = []
    for _ in range(count):
        n = rng.randint(m, hi)
        H = gen_random_connected(n, m, extra_edges=rng.randint(0, 3), rng=rng)
        B = incidence_matrix(H)
        rhs_list = [0] + ([m // 2] if m % 2 == 0 else [])
        checks = []
        for rhs in rhs_list:
            c = [rhs] * H.k
            for pin in (True, False):
                fast = solve_mod(B, c, m, pin_first=pin).cardinality
                slow = brute_force_count(B, c, m, pin_first=pin)
                checks.append((rhs, pin, fast, slow))
        results.append({"n": n, "k": H.k, "edges": [list(e) for e in H.edges],
                        "agree": all(f == s for _, _, f, s in checks), "checks": checks})
    return results


def cmd_oracle(args, out: TextIO, stdin: TextIO) -> int:
    try:
        results = oracle_run(args.count, args.max_n, args.m, args.seed)
    except BruteForceBudgetError as exc:
        raise HypergraphError(str(exc)) from None
    agree = sum(r["agree"] for r in results)
    if args.format == "json":
        out.write(dumps({"instances": len(results), "agree": agree, "m": args.m,
                         "seed": args.seed,
                         "disagreements": [r for r in results if not r["agree"]]}))
    elif args.format == "csv":
        out.write("instance,n,k,agree\n")
        for i, r in enumerate(results, start=1):
            out.write(f"{i},{r['n']},{r['k']},{r['agree']}\n")
    else:
        out.write(f"{agree}/{len(results)} agree\n")
        for r in results:
            if not r["agree"]:
                out.write(f"  mismatch on n={r['n']} edges={r['edges']}: {r['checks']}\n")
    return 0 if agree == len(results) else 2


COMMANDS = {
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "snf": cmd_snf,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stdin: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        # not set_defaults: the --format action object is shared with every subparser
        args.format = getattr(args, "format", "text")
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    try:
        return COMMANDS[args.command](args, stdout, stdin)
    except InvariantViolation as exc:
        stderr.write(f"internal invariant violated: {exc}\n")
        return 2
    except (HypergraphError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
