"""Command-line interface.

Exit codes: 0 = answer found, 2 = proven nonexistence, 1 = usage or input error.
Every reported answer is re-checked by direct counting before it is printed.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from fractions import Fraction

import numpy as np

from gf2parity import digraph_parity as dp
from gf2parity import generators
from gf2parity.edgelist import parse_labeled_edge_list, serialize_edge_list
from gf2parity.errors import ContractViolation, InvariantViolation, ParityError
from gf2parity.gf2 import BitMatrix, BitVector, inconsistency_certificate, mat_vec, solve
from gf2parity.graph import Digraph, Graph, Partition, symmetrize
from gf2parity.parity_subgraph import check_parities, find_parity_subgraph

SCHEMA = 1
EXIT_OK, EXIT_ERROR, EXIT_NONE = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _verified_witness(d: Digraph, part: Partition, kind: dp.Kind) -> dp.ParityWitness:
    wit = dp.witness(d, part)
    if not wit.is_valid(kind):
        raise InvariantViolation(f"solver returned an invalid {kind.value} partition {part}")
    return wit


def cmd_partition(args) -> int:
    parsed = parse_labeled_edge_list(_read(args.input))
    d = parsed.graph
    if isinstance(d, Graph):
        print("notice: undirected input, treating each edge as two opposite arcs", file=sys.stderr)
        d = symmetrize(d)
    kind = dp.Kind(args.kind)
    sols = dp.solution_set(d, kind)
    base = {"schema": SCHEMA, "kind": kind.value, "n": d.n}

    if not sols.exists:
        a, p = dp.system(d, kind)
        cert = inconsistency_certificate(a, p)
        if cert is None or mat_vec(a.transpose(), cert).any() or not cert.dot(p):
            raise InvariantViolation("inconsistent system without a valid certificate")
        payload = base | {
            "exists": False, "side": None, "witness": None, "kernel_dim": None,
            "certificate": cert.to_string(), "verified": True,
        }
        _emit(payload, args.format, [
            f"no {kind.value} partition exists",
            f"certificate y (y^T A = 0, y.p = 1): {cert.to_string()}",
        ])
        return EXIT_NONE

    if args.require_nonempty:
        part = dp.nonempty_partition(d, kind)
        if part is None:
            payload = base | {
                "exists": False, "side": None, "witness": None,
                "kernel_dim": sols.kernel_dim, "require_nonempty": True, "verified": True,
            }
            _emit(payload, args.format, [
                f"no {kind.value} partition with both parts nonempty exists "
                f"(all {sols.count} solutions checked)",
            ])
            return EXIT_NONE
    else:
        part = Partition(sols.particular)
    wit = _verified_witness(d, part, kind)
    payload = base | {
        "exists": True,
        "side": part.side.to_string(),
        "witness": wit.per_vertex_check.to_list(),
        "kernel_dim": sols.kernel_dim,
        "verified": True,
    }
    lines = [
        f"{kind.value} partition found (kernel dimension {sols.kernel_dim})",
        f"side:    {part.side.to_string()}",
        f"witness: {wit.per_vertex_check.to_string()}",
        f"V0: {sorted(part.v0)}",
        f"V1: {sorted(part.v1)}",
    ]
    if args.enumerate is not None:
        parts = dp.enumerate_partitions(d, kind, limit=args.enumerate)
        listed = []
        for q in parts:
            w = _verified_witness(d, q, kind)
            listed.append({"side": q.side.to_string(), "witness": w.per_vertex_check.to_list()})
        payload["partitions"] = listed
        payload["total_solutions"] = sols.count
        lines.append(f"enumerated {len(listed)} of {sols.count} partitions:")
        lines.extend(f"  {item['side']}" for item in listed)
    _emit(payload, args.format, lines)
    return EXIT_OK


def _labels_for(args, parsed, n: int) -> BitVector:
    if args.labels is not None:
        text = args.labels
    elif args.labels_file is not None:
        text = _read(args.labels_file).strip()
    elif parsed.labels is not None:
        return parsed.labels
    else:
        raise CliError("labels required: pass --labels, --labels-file, or a 'labels' line in the input")
    if len(text) != n or set(text) - {"0", "1"}:
        raise CliError(f"labels must be a 0/1 string of length {n}")
    return BitVector.from_string(text)


def cmd_find_subgraph(args) -> int:
    parsed = parse_labeled_edge_list(_read(args.input))
    g = parsed.graph
    if not isinstance(g, Graph):
        raise CliError("find-subgraph needs an undirected 'graph' input")
    labels = _labels_for(args, parsed, g.n)
    try:
        beta = Fraction(args.beta)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"--beta must be a rational number, got {args.beta!r}") from None
    result = find_parity_subgraph(
        g, labels, beta=beta, mode=args.mode, case3_mode=args.case3, seed=args.seed
    )
    checks = check_parities(g, labels, result.vertices)
    if any(deg % 2 != lab for deg, lab in checks.values()):
        raise InvariantViolation("reported subgraph fails the parity check")
    verts = sorted(result.vertices)
    side = BitVector.from_indices(g.n, verts)
    payload = {
        "schema": SCHEMA,
        "kind": "parity-subgraph",
        "n": g.n,
        "exists": True,
        "side": side.to_string(),
        "vertices": verts,
        "witness": [checks[v][0] % 2 for v in verts],
        "kernel_dim": None,
        "case_used": result.case_used.value if result.case_used else None,
        "size": result.size,
        "size_bound_claimed": str(result.size_bound_claimed),
        "bound_guaranteed": result.bound_guaranteed,
        "verification": [
            {"vertex": v, "degree": deg, "label": lab, "ok": deg % 2 == lab}
            for v, (deg, lab) in checks.items()
        ],
        "verified": True,
    }
    lines = [
        f"case: {payload['case_used']}",
        f"size: {result.size} (claimed bound {result.size_bound_claimed}"
        + ("" if result.bound_guaranteed else ", not guaranteed") + ")",
        f"U: {verts}",
        "verification (vertex degree label):",
    ]
    lines.extend(f"  {v} {deg} {lab} ok" for v, (deg, lab) in checks.items())
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_generate(args) -> int:
    fam = args.family
    labels = None
    if fam == "gnp":
        g = generators.gnp(args.n, args.p, seed=args.seed)
        if args.no_isolated:
            g = generators.without_isolated(g, seed=args.seed)
        if args.label_zero_prob is not None:
            labels = generators.random_labels(g.n, args.label_zero_prob, seed=args.seed)
    elif fam == "gnp-digraph":
        g = generators.gnp_digraph(args.n, args.p, seed=args.seed)
    elif fam == "star":
        g = generators.star(args.leaves)
        labels = generators.star_labels(args.leaves)
    elif fam == "matching":
        g = generators.matching(args.pairs)
        if args.label_zero_prob is not None:
            labels = generators.random_labels(g.n, args.label_zero_prob, seed=args.seed)
    elif fam == "hub":
        g, labels = generators.hub_graph(args.hubs, args.leaves, args.p, seed=args.seed)
    else:
        g = generators.remark_instance(args.w, args.u, args.p, seed=args.seed)
    sys.stdout.write(serialize_edge_list(g, labels))
    return EXIT_OK


def _bench_solve(n: int, rng: np.random.Generator):
    a = BitMatrix.from_dense(rng.integers(0, 2, (n, n)))
    b = mat_vec(a, BitVector.from_bits(rng.integers(0, 2, n)))

    def run():
        x = solve(a, b)
        if x is None or mat_vec(a, x) != b:
            raise InvariantViolation("solve produced a wrong answer")

    return run


def _bench_partition(n: int, rng: np.random.Generator):
    d = generators.gnp_digraph(n, 0.5, seed=int(rng.integers(1 << 31)))

    def run():
        for kind in dp.Kind:
            part = dp.partition(d, kind)
            if part is not None:
                _verified_witness(d, part, kind)
            else:
                a, p = dp.system(d, kind)
                if inconsistency_certificate(a, p) is None:
                    raise InvariantViolation("absent partition without certificate")

    return run


def _bench_find_subgraph(n: int, rng: np.random.Generator):
    seed = int(rng.integers(1 << 31))
    g = generators.without_isolated(generators.gnp(n, 0.1, seed=seed), seed=seed)
    labels = generators.random_labels(n, 0.5, seed=seed)

    def run():
        res = find_parity_subgraph(g, labels)
        checks = check_parities(g, labels, res.vertices)
        if any(deg % 2 != lab for deg, lab in checks.values()):
            raise InvariantViolation("find-subgraph produced an invalid set")

    return run


def cmd_bench(args) -> int:
    if args.n < 2 or args.repeat < 1:
        raise CliError("--n must be >= 2 and --repeat >= 1")
    rng = np.random.default_rng(args.seed)
    make = {"solve": _bench_solve, "partition": _bench_partition,
            "find-subgraph": _bench_find_subgraph}[args.op]
    run = make(args.n, rng)
    times = []
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        run()  # raises before any timing is reported if a check fails
        times.append(time.perf_counter() - t0)
    payload = {
        "schema": SCHEMA, "kind": "bench", "op": args.op, "n": args.n, "repeat": args.repeat,
        "median_s": statistics.median(times), "min_s": min(times), "max_s": max(times),
        "verified": True,
    }
    _emit(payload, args.format, [
        f"{args.op} n={args.n}: median {payload['median_s']:.4f}s "
        f"(min {payload['min_s']:.4f}s, max {payload['max_s']:.4f}s, {args.repeat} runs, verified)"
    ])
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for proven nonexistence
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gf2parity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="decide/construct even-even or even-odd partitions")
    p.add_argument("--input", required=True, help="edge-list file ('-' for stdin)")
    p.add_argument("--kind", choices=[k.value for k in dp.Kind], default="even-even")
    p.add_argument("--require-nonempty", action="store_true",
                   help="demand both parts nonempty")
    p.add_argument("--enumerate", type=int, metavar="LIMIT",
                   help="also list up to LIMIT distinct partitions")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_partition)

    f = sub.add_parser("find-subgraph", help="induced subgraph with prescribed degree parities")
    f.add_argument("--input", required=True)
    lab = f.add_mutually_exclusive_group()
    lab.add_argument("--labels", help="bit string, character v is the label of vertex v")
    lab.add_argument("--labels-file")
    f.add_argument("--beta", default="1/10")
    f.add_argument("--mode", choices=["strict", "best-effort"], default="strict")
    f.add_argument("--case3", choices=["derandomized", "random"], default="derandomized")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--format", choices=["json", "text"], default="text")
    f.set_defaults(func=cmd_find_subgraph)

    g = sub.add_parser("generate", help="write a generated instance to stdout")
    g.add_argument("--family", required=True,
                   choices=["remark", "gnp", "gnp-digraph", "star", "matching", "hub"])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--leaves", type=int, default=9, help="star/hub leaves")
    g.add_argument("--hubs", type=int, default=3)
    g.add_argument("--pairs", type=int, default=5, help="matching size")
    g.add_argument("--w", type=int, default=8, help="remark: symmetric part order")
    g.add_argument("--u", type=int, default=4, help="remark: even part order")
    g.add_argument("--no-isolated", action="store_true", help="gnp: attach isolated vertices")
    g.add_argument("--label-zero-prob", type=float, help="emit random labels")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="time an operation on random inputs")
    b.add_argument("--op", choices=["solve", "partition", "find-subgraph"], default="solve")
    b.add_argument("--n", type=int, default=1024)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--format", choices=["json", "text"], default="text")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (CliError, ContractViolation, ParityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
