"""Command line front end.

Input files are line oriented; blank lines and lines starting with ``#``
are ignored.

* permutation: one line of values (two lines compare two permutations)
* tree: ``n`` then ``n - 1`` lines ``u v``
* DAG: ``n m`` then ``m`` lines ``u v`` for the arc ``u -> v``

Exit codes: 0 success, 1 negative verdict (``simple`` found a witness,
``verify`` found a discrepancy), 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Tuple

from .core import (
    Dag,
    FamilyKind,
    Generator,
    InvalidInputError,
    LabeledTree,
    Permutation,
    Structure,
    generator_materialize,
)
from .decomposition import DecompositionTree, build_decomposition_tree
from .families import compute_generator, enumerate_family
from .oracle import brute_force_family, random_instance
from .perm import find_nontrivial_common_interval, reduce_two_permutations


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for number, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append((number, stripped.split()))
    return out


def _ints(number: int, fields: List[str]) -> List[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InvalidInputError(f"line {number}: expected integers, got {' '.join(fields)!r}") from None


def _pair(number, fields) -> Tuple[int, int]:
    if len(fields) != 2:
        raise InvalidInputError(f"line {number}: expected 'u v', got {' '.join(fields)!r}")
    u, v = _ints(number, fields)
    return u, v


def parse_permutations(text: str) -> List[Permutation]:
    lines = _content_lines(text)
    if len(lines) not in (1, 2):
        raise InvalidInputError(f"permutation file needs 1 or 2 lines, found {len(lines)}")
    perms = []
    for number, fields in lines:
        values = _ints(number, fields)
        try:
            perms.append(Permutation(tuple(values)))
        except InvalidInputError as exc:
            raise InvalidInputError(f"line {number}: {exc}") from None
    return perms


def parse_tree(text: str) -> LabeledTree:
    lines = _content_lines(text)
    if not lines:
        raise InvalidInputError("empty tree file")
    number, fields = lines[0]
    if len(fields) != 1:
        raise InvalidInputError(f"line {number}: tree header must be a single 'n'")
    (n,) = _ints(number, fields)
    edges = [_pair(num, f) for num, f in lines[1:]]
    return LabeledTree.of(n, edges)


def parse_dag(text: str) -> Dag:
    lines = _content_lines(text)
    if not lines:
        raise InvalidInputError("empty DAG file")
    number, fields = lines[0]
    if len(fields) != 2:
        raise InvalidInputError(f"line {number}: DAG header must be 'n m'")
    n, m = _ints(number, fields)
    arcs = [_pair(num, f) for num, f in lines[1:]]
    if len(arcs) != m:
        raise InvalidInputError(f"DAG header announces {m} arcs, found {len(arcs)}")
    return Dag.of(n, arcs)


def parse_generator(text: str) -> Generator:
    """Read a generator printed by ``generator`` in either format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return Generator.from_lists(data["R"], data["L"])
        except (ValueError, KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad generator JSON: {exc}") from None
    rows = {}
    for number, fields in _content_lines(text):
        head = fields[0].rstrip(":")
        if head not in ("R", "L"):
            raise InvalidInputError(f"line {number}: expected 'R:' or 'L:'")
        rows[head] = _ints(number, fields[1:])
    if set(rows) != {"R", "L"}:
        raise InvalidInputError("generator file needs both 'R:' and 'L:' lines")
    return Generator.from_lists(rows["R"], rows["L"])


def load_structure(kind: FamilyKind, text: str) -> Structure:
    if kind.structure == "tree":
        return parse_tree(text)
    if kind.structure == "dag":
        return parse_dag(text)
    perms = parse_permutations(text)
    if len(perms) == 2:
        if kind is not FamilyKind.A:
            raise InvalidInputError(f"two-permutation input only applies to kind A, not {kind.value}")
        return reduce_two_permutations(*perms)
    return perms[0]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def _single_permutation(text: str) -> Permutation:
    perms = parse_permutations(text)
    return reduce_two_permutations(*perms) if len(perms) == 2 else perms[0]


def format_generator(g: Generator, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"n": g.n, "R": list(g.R), "L": list(g.L)}) + "\n"
    return "R: " + " ".join(map(str, g.R)) + "\nL: " + " ".join(map(str, g.L)) + "\n"


def format_tree(t: DecompositionTree, fmt: str) -> str:
    if fmt == "dot":
        return t.to_dot()
    return json.dumps(t.to_dict(), indent=1) + "\n"


def cmd_generator(args) -> int:
    kind = FamilyKind(args.kind)
    g = compute_generator(kind, load_structure(kind, _read(args.input)))
    sys.stdout.write(format_generator(g, args.format))
    return 0


def cmd_enumerate(args) -> int:
    kind = FamilyKind(args.kind)
    structure = load_structure(kind, _read(args.input))
    out = sys.stdout
    buf: List[str] = []

    def sink(x, y):
        buf.append(f"{x} {y}\n")
        if len(buf) >= 4096:
            out.write("".join(buf))
            buf.clear()

    count = enumerate_family(kind, structure, sink)
    buf.append(f"count: {count}\n")
    out.write("".join(buf))
    return 0


def cmd_simple(args) -> int:
    witness = find_nontrivial_common_interval(_single_permutation(_read(args.input)))
    if witness is None:
        sys.stdout.write("SIMPLE\n")
        return 0
    sys.stdout.write(f"{witness}\n")
    return 1


def cmd_decompose(args) -> int:
    t = build_decomposition_tree(_single_permutation(_read(args.input)))
    sys.stdout.write(format_tree(t, args.format))
    return 0


def _first_discrepancy(got, want) -> Optional[str]:
    got_set, want_set = set(got), set(want)
    for iv in want:
        if iv not in got_set:
            return f"missing {iv.begin} {iv.end}"
    for iv in got:
        if iv not in want_set:
            return f"extra {iv[0]} {iv[1]}"
    if list(got) != list(want):
        return "members in the wrong order"
    return None


def cmd_verify(args) -> int:
    kind = FamilyKind(args.kind)
    if args.input is not None:
        structure = load_structure(kind, _read(args.input))
    elif args.seed is not None:
        structure = random_instance(kind, args.size, args.seed, args.density)
    else:
        raise InvalidInputError("verify needs an input file or --seed")
    want = brute_force_family(kind, structure)
    if args.generator is not None:
        g = parse_generator(_read(args.generator))
        if g.n != structure.n:
            raise InvalidInputError(f"generator has n={g.n}, instance has n={structure.n}")
    else:
        g = compute_generator(kind, structure)
    problem = _first_discrepancy(generator_materialize(g), want)
    if problem is None and args.generator is None:
        listed: list = []
        enumerate_family(kind, structure, lambda x, y: listed.append((x, y)))
        problem = _first_discrepancy(listed, [tuple(iv) for iv in want])
        if problem is not None:
            problem = "enumeration: " + problem
    if problem is not None:
        sys.stdout.write(f"MISMATCH {problem}\n")
        return 1
    sys.stdout.write(f"OK {len(want)} members\n")
    return 0


def cmd_bench(args) -> int:
    kind = FamilyKind(args.kind)
    structure = random_instance(kind, args.size, args.seed, args.density)
    start = time.perf_counter()
    compute_generator(kind, structure)
    lines = [f"generator {kind.value} n={args.size} {time.perf_counter() - start:.3f}s"]
    if kind.structure == "permutation":
        start = time.perf_counter()
        build_decomposition_tree(structure)
        lines.append(f"decompose n={args.size} {time.perf_counter() - start:.3f}s")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="commonintervals", description="Interval families via generators.")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in FamilyKind]

    p = sub.add_parser("generator", help="print the (R, L) generator")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("input")
    p.set_defaults(func=cmd_generator)

    p = sub.add_parser("enumerate", help="list every member")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("input")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("simple", help="test a permutation for simplicity")
    p.add_argument("input")
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("decompose", help="print the decomposition tree")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("input")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="compare against the brute-force oracle")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--generator", help="check this generator file instead of the fast path")
    p.add_argument("--seed", type=int)
    p.add_argument("--size", type=int, default=10)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the fast paths on a random instance")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--size", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        # e.g. --size 0 for a random instance
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
