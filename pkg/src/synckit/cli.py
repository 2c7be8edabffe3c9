"""Command line surface.

Exit codes: 0 on success, 1 for usage or input problems, 2 when an
instance-level failure occurred (synthesis hypothesis violated, audit rows
with errors, coloring search exhausted).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .audit import render_csv, render_json, render_table, run_audit
from .automaton import states_of
from .errors import SynckitError
from .fileio import (
    format_word,
    parse_automaton,
    parse_digraph,
    serialize_automaton,
    serialize_digraph,
    skeleton_dot,
)
from .generators import cerny, random_digraph, random_one_cluster
from .oracle import bfs_shortest_reset, greedy_pair_reset
from .roadcolor import color_digraph, find_prime_cycle, validate
from .structure import certificate, find_one_cluster_letters
from .synthesis import synchronize_one_cluster_prime, worst_level_bound


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="synckit", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="64-bit generation seed")
    parser.add_argument("--cap", type=int, default=20,
                        help="state cap for exact subset search")
    parser.add_argument("--format", choices=("table", "csv", "json"),
                        default="table", help="report format for audit")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="report one-cluster letters of an automaton")
    s.add_argument("file", type=Path)
    s.add_argument("--dot", type=int, default=None, metavar="LETTER",
                   help="emit the letter's functional graph as DOT instead")

    s = sub.add_parser("synth", help="synthesize a certified reset word")
    s.add_argument("file", type=Path)
    s.add_argument("--letter", type=int, default=None,
                   help="one-cluster letter to use (default: first prime cycle)")
    s.add_argument("--trace", action="store_true", help="print expansion steps")

    s = sub.add_parser("shortest", help="exact shortest reset word (subset search)")
    s.add_argument("file", type=Path)

    s = sub.add_parser("roadcolor", help="synchronizing coloring of a digraph")
    s.add_argument("file", type=Path)

    s = sub.add_parser("gen", help="generate an instance to stdout")
    s.add_argument("kind", choices=("cerny", "one-cluster", "digraph"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--p", type=int, default=None, help="cycle length (one-cluster)")
    s.add_argument("--level", type=int, default=None, help="tail depth (one-cluster)")

    s = sub.add_parser("audit", help="batch synthesis audit with oracles")
    s.add_argument("--kind", choices=("cerny", "one-cluster"), default="cerny")
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--count", type=int, default=20,
                   help="instance count (one-cluster kind)")
    s.add_argument("--primes", type=str, default="2,3,5,7",
                   help="cycle lengths to draw from (one-cluster kind)")
    return parser


def _load_automaton(path: Path):
    return parse_automaton(path.read_text())


def _pick_certificate(aut, letter):
    certs = find_one_cluster_letters(aut)
    if letter is not None:
        cert = certificate(aut, letter)
        if cert is None:
            raise SynckitError(f"letter {letter} is not one-cluster")
        return cert
    for cert in certs:
        if cert.p_is_prime:
            return cert
    if certs:
        raise SynckitError("one-cluster letters exist but none has a prime cycle")
    raise SynckitError("no one-cluster letter")


def _cmd_analyze(args) -> int:
    aut = _load_automaton(args.file)
    if args.dot is not None:
        print(skeleton_dot(aut, args.dot), end="")
        return 0
    print(f"automaton: n={aut.n} k={aut.k} "
          f"synchronizing={'yes' if aut.is_synchronizing() else 'no'}")
    for x in range(aut.k):
        cert = certificate(aut, x)
        name = format_word((x,), aut.k)
        if cert is None:
            print(f"letter {name}: not one-cluster")
        else:
            prime = "prime" if cert.p_is_prime else "composite"
            cyc = " ".join(str(q) for q in cert.cycle)
            print(f"letter {name}: one-cluster, cycle length {cert.p} ({prime}), "
                  f"level {cert.level}, cycle [{cyc}]")
    return 0


def _cmd_synth(args) -> int:
    aut = _load_automaton(args.file)
    cert = _pick_certificate(aut, args.letter)
    trace = synchronize_one_cluster_prime(aut, cert)
    name = format_word((cert.letter,), aut.k)
    print(f"letter {name}: n={aut.n} p={cert.p} level={cert.level}")
    word = format_word(trace.reset_word, aut.k) or "(empty)"
    print(f"reset word ({len(trace.reset_word)} letters): {word}")
    print(f"bound {trace.bound}, (n-1)^2 = {(aut.n - 1) ** 2}")
    if args.trace:
        for i, st in enumerate(trace.steps):
            before = ",".join(map(str, states_of(st.subset_before)))
            after = ",".join(map(str, states_of(st.subset_after)))
            print(f"step {i} [{st.phase}] word={format_word(st.word, aut.k)} "
                  f"{{{before}}} -> {{{after}}} "
                  f"search {st.search_depth_used}/{st.search_budget} "
                  f"budget {len(st.word)}/{st.depth_budget}")
    print("verified: image of the full state set is a single state")
    return 0


def _cmd_shortest(args, cap: int) -> int:
    aut = _load_automaton(args.file)
    result = bfs_shortest_reset(aut, cap=cap)
    if result is None:
        print("not synchronizing")
        return 2
    word = format_word(result.witness, aut.k) or "(empty)"
    print(f"shortest reset word ({result.shortest_length} letters): {word}")
    print(f"explored {result.explored} subsets")
    return 0


def _cmd_roadcolor(args, seed: int) -> int:
    dg = parse_digraph(args.file.read_text())
    diag = validate(dg)
    print(f"digraph: n={diag.n} out-degree={diag.out_degree} "
          f"strongly-connected={'yes' if diag.strongly_connected else 'no'} "
          f"cycle-gcd={diag.cycle_gcd}")
    if find_prime_cycle(dg) is None:
        print("no simple cycle of prime length below n")
        return 2
    cc = color_digraph(dg, seed=seed)
    cycle = cc.cert.cycle
    print(f"prime cycle ({len(cycle)}): [{' '.join(map(str, cycle))}]")
    trace = cc.reset
    print(f"coloring found; reset word length {len(trace.reset_word)} "
          f"<= bound {cc.bound} <= (n-1)^2 = {(dg.n - 1) ** 2}")
    print(serialize_automaton(cc.automaton), end="")
    return 0


def _cmd_gen(args, seed: int) -> int:
    if args.kind == "cerny":
        print(serialize_automaton(cerny(args.n)), end="")
    elif args.kind == "one-cluster":
        if args.p is None or args.level is None:
            return _usage_error("gen one-cluster needs --p and --level")
        aut = random_one_cluster(args.n, args.p, args.level, k=args.k, seed=seed)
        print(serialize_automaton(aut), end="")
    else:
        print(serialize_digraph(random_digraph(args.n, args.k, seed=seed)), end="")
    return 0


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _cmd_audit(args, seed: int, cap: int, fmt: str) -> int:
    instances = []
    if args.kind == "cerny":
        for n in range(args.n_min, args.n_max + 1):
            instances.append((f"cerny-{n}", cerny(n)))
    else:
        primes = [int(tok) for tok in args.primes.split(",") if tok]
        i = 0
        while len(instances) < args.count:
            p = primes[i % len(primes)]
            n = args.n_min + (i // len(primes)) % max(args.n_max - args.n_min + 1, 1)
            if n < p:
                n = p
            level = 0 if n == p else 1 + i % (n - p)
            try:
                aut = random_one_cluster(n, p, level, seed=seed + i)
                instances.append((f"oc-p{p}-n{n}-l{level}-{i}", aut))
            except SynckitError:
                pass
            i += 1
    rows = run_audit(instances, bfs_cap=cap)
    if fmt == "csv":
        print(render_csv(rows), end="")
    elif fmt == "json":
        print(render_json(rows), end="")
    else:
        print(render_table(rows), end="")
    return 2 if any(r.error for r in rows) else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "synth":
            return _cmd_synth(args)
        if args.command == "shortest":
            return _cmd_shortest(args, args.cap)
        if args.command == "roadcolor":
            return _cmd_roadcolor(args, args.seed)
        if args.command == "gen":
            return _cmd_gen(args, args.seed)
        if args.command == "audit":
            return _cmd_audit(args, args.seed, args.cap, args.format)
        raise AssertionError(args.command)
    except FileNotFoundError as exc:
        return _usage_error(f"cannot read {exc.filename}")
    except ValueError as exc:
        return _usage_error(str(exc))
    except SynckitError as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
