"""Command line interface: build, query, verify and bench."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bench as bench_mod
from .alphabet import AlphabetSpec
from .errors import PsaxError
from .plcp import build_index, naive_plcp
from .psa import check_sorted, naive_psa
from .pstring import fwd_encode, prev_encode
from .query import find_occurrences
from .serialize import deserialize_index, serialize_index


def _add_alphabet_flags(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--static", metavar="CHARS",
                       help="characters treated as static; the rest are parameterized")
    group.add_argument("--param", metavar="CHARS",
                       help="characters treated as parameterized; the rest are static")
    group.add_argument("--tokens", metavar="SPEC_JSON",
                       help="token mode: JSON file listing the static tokens")


def _alphabet(args) -> AlphabetSpec:
    if args.tokens:
        return AlphabetSpec.from_token_file(args.tokens)
    if args.static is not None:
        return AlphabetSpec.from_static_chars(args.static)
    if args.param is not None:
        return AlphabetSpec.from_param_chars(args.param)
    return AlphabetSpec.default_bytes()


def _load_input(path: str, spec: AlphabetSpec):
    if spec.mode == "token":
        with open(path, "r", encoding="utf-8") as fh:
            return spec.to_pstring(fh.read())
    with open(path, "rb") as fh:
        return spec.to_pstring(fh.read())


def _cmd_build(args) -> int:
    spec = _alphabet(args)
    x = _load_input(args.input, spec)
    idx = build_index(x)
    with open(args.output, "wb") as fh:
        fh.write(serialize_index(idx))
    print(f"wrote {args.output} (n={idx.n}, pi={idx.pi})")
    return 0


def _cmd_query(args) -> int:
    spec = _alphabet(args)
    x = _load_input(args.input, spec)
    with open(args.index, "rb") as fh:
        idx = deserialize_index(fh.read())
    if idx.digest != x.digest():
        print("error: index was not built from this input (digest mismatch)",
              file=sys.stderr)
        return 2
    patterns = []
    if args.pattern is not None:
        patterns.append(args.pattern)
    if args.pattern_file:
        with open(args.pattern_file, "r", encoding="utf-8") as fh:
            patterns.extend(line.rstrip("\n") for line in fh if line.strip())
    if not patterns:
        print("error: no pattern given", file=sys.stderr)
        return 2
    for pat in patterns:
        p = spec.to_pstring(pat)
        occ = find_occurrences(x, idx, p)
        if len(patterns) == 1:
            for pos in occ:
                print(int(pos))
        else:
            for pos in occ:
                print(f"{pat}\t{int(pos)}")
    return 0


def _cmd_verify(args) -> int:
    spec = _alphabet(args)
    x = _load_input(args.input, spec)
    idx = build_index(x)
    ok = True

    if not np.array_equal(np.sort(idx.psa), np.arange(1, x.n + 1)):
        print("psa permutation: FAIL")
        ok = False
    else:
        print("psa permutation: ok")

    if check_sorted(x, idx.psa):
        print("psa adjacent-order certificate: ok")
    else:
        print("psa adjacent-order certificate: FAIL")
        ok = False

    lens = x.n - idx.psa + 1
    if idx.plcp[0] == 0 and (idx.plcp >= 0).all() \
            and (idx.plcp[1:] <= np.minimum(lens[1:], lens[:-1])).all():
        print("plcp bounds: ok")
    else:
        print("plcp bounds: FAIL")
        ok = False

    from .blocks import decompose_blocks
    table = decompose_blocks(x, prev_encode(x), fwd_encode(x))
    if all(table.column(j).total_length <= x.n + 1
           for j in range(1, table.max_blocks + 1)):
        print(f"family length bounds (j = 1..{table.max_blocks}): ok")
    else:
        print("family length bounds: FAIL")
        ok = False

    if x.n <= args.max_oracle_n:
        if np.array_equal(idx.psa, naive_psa(x)):
            print("psa oracle: ok")
        else:
            print("psa oracle: FAIL")
            ok = False
        if np.array_equal(idx.plcp, naive_plcp(x, idx.psa)):
            print("plcp oracle: ok")
        else:
            print("plcp oracle: FAIL")
            ok = False
    else:
        print(f"oracles skipped (n={x.n} > {args.max_oracle_n})")

    print("verify:", "ok" if ok else "MISMATCH")
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    ns = [int(v) for v in args.n.split(",") if v]
    pis = [int(v) for v in args.pi.split(",") if v]
    rows = bench_mod.run_bench(ns, pis, seed=args.seed)
    csv = bench_mod.to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="psax",
        description="Parameterized suffix array indexing and p-match queries.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an index from a file")
    b.add_argument("input")
    b.add_argument("-o", "--output", required=True)
    _add_alphabet_flags(b)
    b.set_defaults(func=_cmd_build)

    q = sub.add_parser("query", help="find p-match occurrences")
    q.add_argument("index")
    q.add_argument("input")
    q.add_argument("--pattern")
    q.add_argument("--pattern-file")
    _add_alphabet_flags(q)
    q.set_defaults(func=_cmd_query)

    v = sub.add_parser("verify", help="check the built index against oracles")
    v.add_argument("input")
    v.add_argument("--max-oracle-n", type=int, default=10_000)
    _add_alphabet_flags(v)
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("bench", help="benchmark builds over random texts")
    e.add_argument("--n", default="16384,65536")
    e.add_argument("--pi", default="2,8")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--csv", help="write CSV here instead of stdout")
    e.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except PsaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
