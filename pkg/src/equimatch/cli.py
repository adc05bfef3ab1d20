"""Command line: ``equimatch classify | generate | verify``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from . import verify as harness
from .families import FamilyId, FamilyParams, generate
from .formats import FormatError, read_graphs, write_edge_list, write_graph6
from .isomorphism import are_isomorphic
from .recognizer import classify

EXIT_OK, EXIT_REJECTED, EXIT_INPUT = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equimatch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="decide claw-free equimatchability of each input graph")
    c.add_argument("path", nargs="?", help="input file (default: stdin)")
    c.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    c.add_argument("--output", choices=("text", "records"), default="text")
    c.add_argument("--all-families", action="store_true", help="report every matching family")
    c.add_argument("--require-connected", action="store_true",
                   help="reject disconnected input instead of deciding componentwise")

    g = sub.add_parser("generate", help="emit a member of a family")
    g.add_argument("--family", required=True, type=str.upper,
                   choices=[f.value for f in FamilyId if f is not FamilyId.ALPHA_LE_2])
    for name in ("p", "q", "x", "y", "p2", "x2"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    g.add_argument("--self-check", action="store_true", help="classify the result and compare")

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--max-n", type=_positive, default=7, help="exhaustive scan bound")
    v.add_argument("--samples", type=_positive, default=100_000, help="sampled graphs on 9 vertices")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--suite", action="append", choices=harness.SUITES,
                   help="run only this suite (repeatable)")
    v.add_argument("--no-timing", action="store_true", help="omit timing lines")
    return parser


def _verdict_line(v) -> str:
    if v.accepted:
        if v.components:
            fams = ",".join(str(c.family) for c in v.components)
            return f"accepted components={fams}"
        line = f"accepted family={v.family}"
        if v.params:
            line += " " + " ".join(f"{k}={val}" for k, val in v.params.items())
        if v.all_matches:
            line += " all_families=" + ",".join(str(m) for m in v.all_matches)
        return line
    line = f"rejected reason={v.reason}"
    if v.certificate is not None:
        line += f" certificate={v.certificate.kind}"
    return line


def cmd_classify(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    stream = open(args.path) if args.path else stdin
    status = EXIT_OK
    try:
        for lineno, item in read_graphs(stream, args.format):
            if isinstance(item, FormatError):
                err.write(f"error: {item}\n")
                status = EXIT_INPUT
                continue
            v = classify(item, all_families=args.all_families, require_connected=args.require_connected)
            if args.output == "records":
                out.write(json.dumps({"line": lineno, **v.to_record()}, sort_keys=False) + "\n")
            else:
                out.write(_verdict_line(v) + "\n")
            if not v.accepted and status == EXIT_OK:
                status = EXIT_REJECTED
    finally:
        if args.path:
            stream.close()
    return status


def cmd_generate(args, out: TextIO, err: TextIO) -> int:
    family = FamilyId(args.family)
    given = {k: getattr(args, k) for k in ("p", "q", "x", "y", "p2", "x2") if getattr(args, k) is not None}
    try:
        params = FamilyParams(family, **given)
        g = generate(params)
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.format == "graph6":
        out.write(write_graph6(g).decode() + "\n")
    else:
        out.write(write_edge_list(g))
    if args.self_check:
        v = classify(g)
        same = (
            v.accepted
            and v.family is not FamilyId.ALPHA_LE_2
            and are_isomorphic(generate(v.classification), g)
        )
        if not same:
            err.write(f"self-check failed: {_verdict_line(v)}\n")
            return EXIT_REJECTED
        err.write(f"self-check ok: {v.classification}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    suites = args.suite or harness.SUITES
    ok = True
    for name in suites:
        [report] = harness.run([name], max_n=args.max_n, samples=args.samples, seed=args.seed, jobs=args.jobs)
        for line in report.lines(timing=not args.no_timing):
            out.write(line + "\n")
        out.flush()
        ok = ok and report.ok
    out.write(f"overall: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_REJECTED


def main(argv=None, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        try:
            return cmd_classify(args, stdin, stdout, stderr)
        except OSError as exc:
            stderr.write(f"error: {exc}\n")
            return EXIT_INPUT
    if args.command == "generate":
        return cmd_generate(args, stdout, stderr)
    return cmd_verify(args, stdout)


if __name__ == "__main__":
    sys.exit(main())
