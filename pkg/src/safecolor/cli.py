"""Command-line front end.

Exit status: 0 positive result, 1 negative result, 2 input error,
3 out of scope (decide/oracle only). ``--json`` prints a machine-readable
report instead of the human summary.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .decide import (
    DEFAULT_ORACLE_LIMIT,
    NOT_SAFE,
    OUT_OF_SCOPE,
    SAFE,
    Decision,
    OracleLimitError,
    decide_safe_3,
    oracle_safe_3,
)
from .graph import (
    GraphFormatError,
    gen_double_windmill,
    gen_random_min_deg3,
    parse_dimacs,
    parse_edge_list,
    to_edge_list,
)
from .safety import parse_coloring, to_coloring_text, verify_safe
from .triplets import find_three_independent_triplets, find_two_independent_triplets

EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_INPUT_ERROR, EXIT_OUT_OF_SCOPE = 0, 1, 2, 3
LIMIT_ENV = "SAFECOLOR_ORACLE_LIMIT"
TOOL_VERSION = f"safecolor {__version__}"

# Layout of every --json report; "result" depends on the command.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["tool_version", "command", "input_digest", "result", "timing_s"],
    "additionalProperties": False,
    "properties": {
        "tool_version": {"type": "string"},
        "command": {"enum": ["verify", "decide", "triplets", "gen", "oracle"]},
        "input_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        "timing_s": {"type": "number", "minimum": 0},
        "result": {"type": "object"},
    },
}


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _decode(path: str, data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text") from None


def _load_graph(path: str):
    data = _read(path)
    text = _decode(path, data)
    parse = parse_dimacs if path.endswith((".col", ".dimacs")) else parse_edge_list
    try:
        return parse(text), data
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def digest(*blobs: bytes) -> str:
    """sha256 over the inputs, each length-prefixed so that boundaries matter."""
    h = hashlib.sha256()
    for blob in blobs:
        h.update(len(blob).to_bytes(8, "big"))
        h.update(blob)
    return "sha256:" + h.hexdigest()


def _default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None


def _emit(args, command: str, inputs: list[bytes], result: dict, lines: list[str], started: float) -> None:
    if args.json:
        report = {
            "tool_version": TOOL_VERSION,
            "command": command,
            "input_digest": digest(*inputs),
            "result": result,
            "timing_s": round(time.perf_counter() - started, 6),
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _decision_exit(d: Decision) -> int:
    return {SAFE: EXIT_POSITIVE, NOT_SAFE: EXIT_NEGATIVE, OUT_OF_SCOPE: EXIT_OUT_OF_SCOPE}[d.verdict]


def _decision_payload(d: Decision) -> dict:
    return {
        "verdict": d.verdict,
        "reason": d.reason,
        "witness_attack": d.witness_attack,
        "witness_coloring": list(d.witness_coloring.assignment) if d.witness_coloring else None,
    }


def _fmt_set(vs) -> str:
    return "{" + ",".join(str(v) for v in vs) + "}"


# -------------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, gdata = _load_graph(args.graph)
    cdata = _read(args.coloring)
    try:
        c = parse_coloring(_decode(args.coloring, cdata))
        res = verify_safe(g, c, args.a)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    result = {
        "safe": res.safe,
        "a": args.a,
        "k": c.k,
        "witness": list(res.witness) if res.witness is not None else None,
        "violated_condition": res.violated_condition,
    }
    if res.safe:
        lines = [f"safe: {args.a}-safe {c.k}-coloring"]
    else:
        lines = [f"unsafe: witness {_fmt_set(res.witness)} ({res.violated_condition})"]
    _emit(args, "verify", [gdata, cdata, str(args.a).encode()], result, lines, started)
    return EXIT_POSITIVE if res.safe else EXIT_NEGATIVE


def cmd_decide(args) -> int:
    started = time.perf_counter()
    g, gdata = _load_graph(args.graph)
    limit = _default_limit()
    d = decide_safe_3(g, oracle_fallback=args.oracle_fallback, oracle_limit=limit)
    if d.witness_coloring is not None and args.witness_out:
        Path(args.witness_out).write_text(to_coloring_text(d.witness_coloring), encoding="utf-8")
    result = _decision_payload(d)
    result["witness_path"] = args.witness_out if d.witness_coloring is not None else None
    lines = [f"{d.verdict} ({d.reason})"]
    if d.witness_attack:
        lines.append(f"attack: {d.witness_attack}")
    _emit(args, "decide", [gdata, str(args.oracle_fallback).encode()], result, lines, started)
    return _decision_exit(d)


def cmd_triplets(args) -> int:
    started = time.perf_counter()
    g, gdata = _load_graph(args.graph)
    finder = find_three_independent_triplets if args.count == 3 else find_two_independent_triplets
    found = finder(g)
    result = {
        "count": args.count,
        "found": found is not None,
        "triplets": [[t.center, list(t.leaves)] for t in found or []],
    }
    lines = [f"({t.center}: {t.leaves[0]}, {t.leaves[1]})" for t in found] if found else ["none"]
    _emit(args, "triplets", [gdata, str(args.count).encode()], result, lines, started)
    return EXIT_POSITIVE if found else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    started = time.perf_counter()
    if args.json and not args.out:
        raise InputError("--json needs --out for the generated graph")
    try:
        if args.kind == "windmill":
            if args.l is None:
                raise InputError("windmill needs --l")
            g = gen_double_windmill(args.l, centers_adjacent=args.adjacent)
            params = {"kind": "windmill", "l": args.l, "adjacent": args.adjacent}
        else:
            if args.n is None:
                raise InputError("random needs --n")
            g = gen_random_min_deg3(args.n, args.p, args.seed)
            params = {"kind": "random", "n": args.n, "p": args.p, "seed": args.seed}
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        lines = [f"wrote {args.out}: n={g.n} m={g.m}"]
    else:
        sys.stdout.write(text)
        lines = []
    result = dict(params, n=g.n, m=g.m, out=args.out)
    _emit(args, "gen", [json.dumps(params, sort_keys=True).encode()], result, lines, started)
    return EXIT_POSITIVE


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    g, gdata = _load_graph(args.graph)
    limit = args.limit if args.limit is not None else _default_limit()
    try:
        d = oracle_safe_3(g, limit)
    except OracleLimitError as exc:
        raise InputError(str(exc)) from None
    result = _decision_payload(d)
    result["limit"] = limit
    lines = [f"{d.verdict} ({d.reason})"]
    if d.witness_coloring is not None:
        lines.append("coloring: " + " ".join(map(str, d.witness_coloring.assignment)))
    _emit(args, "oracle", [gdata], result, lines, started)
    return _decision_exit(d)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="safecolor", description="Safe 3-colorings of graphs.")
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a coloring against a attackers")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("a", type=int, nargs="?", default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", parents=[common], help="decide safe 3-colorability")
    p.add_argument("graph")
    p.add_argument("--oracle-fallback", action="store_true",
                   help="settle min-degree < 3 graphs by exhaustive search when small enough")
    p.add_argument("--witness-out", metavar="PATH", help="write the witness coloring here")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("triplets", parents=[common], help="find vertex-disjoint connected triplets")
    p.add_argument("graph")
    p.add_argument("--count", type=int, choices=(2, 3), default=3)
    p.set_defaults(func=cmd_triplets)

    p = sub.add_parser("gen", parents=[common], help="generate a test graph")
    p.add_argument("kind", choices=("windmill", "random"))
    p.add_argument("--l", type=int, help="number of blades (windmill)")
    adj = p.add_mutually_exclusive_group()
    adj.add_argument("--adjacent", dest="adjacent", action="store_true", default=True)
    adj.add_argument("--non-adjacent", dest="adjacent", action="store_false")
    p.add_argument("--n", type=int, help="vertex count (random)")
    p.add_argument("--p", type=float, default=0.3, help="edge probability (random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive ground-truth decision")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, help=f"largest n to search (default ${LIMIT_ENV} or {DEFAULT_ORACLE_LIMIT})")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_POSITIVE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
