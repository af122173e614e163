"""Command-line interface.

Exit codes: 0 ok, 1 I/O, parse or usage error, 2 precondition failure,
3 internal verification failure, 4 invalid coloring, 5 oracle budget
exhausted.
"""

from __future__ import annotations

import argparse
import sys

from strongcolor import generators, io
from strongcolor.coloring import lemma_coloring, theorem_coloring, verify_strong
from strongcolor.errors import (
    BudgetExhausted,
    GenerationError,
    InternalVerificationError,
    MissingVertexError,
    OracleSizeError,
    ParseError,
    PreconditionError,
)
from strongcolor.oracle import BUDGET_ENV, MAX_VERTICES, oracle_min_colors
from strongcolor.setfam import is_t_intersecting

EXIT_OK, EXIT_IO, EXIT_PRECONDITION, EXIT_INTERNAL, EXIT_INVALID, EXIT_BUDGET = range(6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _fmt_edge(e):
    return "{" + " ".join(map(str, e)) + "}"


def _report_lines(report):
    lines = [
        f"# valid: {'yes' if report.valid else 'no'}",
        f"# strength: {report.strength}",
        f"# colors_used: {report.colors_used}",
    ]
    for e, n in report.failing_edges:
        lines.append(f"# failing edge {_fmt_edge(e)}: {n} distinct colors")
    tr = report.trace
    if tr is not None:
        line = f"# path: {tr.path}"
        if tr.case_id is not None:
            line += f" case: {tr.case_id}"
            if tr.swapped:
                line += f" swapped-to-case: {tr.final_case_id}"
        lines.append(line)
        if tr.chosen_triple:
            lines.append("# triple: " + " ".join(_fmt_edge(e) for e in tr.chosen_triple))
    return "\n".join(lines) + "\n"


def _cmd_color(args, out):
    H = io.read_hypergraph(args.file)
    if args.algorithm == "theorem":
        C, report = theorem_coloring(H)
    else:
        C = lemma_coloring(H, args.t)
        report = verify_strong(H, C, args.t)
    if args.format == "json":
        out.write(io.dumps(io.report_document("color", C, report, algorithm=args.algorithm)))
    else:
        out.write(io.serialize_coloring(C) + _report_lines(report))
    return EXIT_OK


def _cmd_check(args, out):
    H = io.read_hypergraph(args.hypergraph)
    C = io.read_coloring(args.coloring)
    report = verify_strong(H, C, args.strength)
    if args.format == "json":
        out.write(io.dumps(io.report_document("check", report=report)))
    else:
        out.write(_report_lines(report))
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_oracle(args, out):
    H = io.read_hypergraph(args.file)
    result = oracle_min_colors(
        H, args.strength, args.max_colors, max_vertices=args.max_vertices, budget=args.budget
    )
    if args.format == "json":
        out.write(io.dumps({"kind": "oracle", "max_colors": args.max_colors, **result.to_dict()}))
    elif result.min_colors is None:
        out.write(f"none <= {args.max_colors}\n# explored: {result.explored}\n")
    else:
        out.write(f"# min_colors: {result.min_colors}\n# explored: {result.explored}\n")
        out.write(io.serialize_coloring(result.witness))
    return EXIT_OK


def _summary(H):
    return (
        f"{len(H.edges)} edges over {len(H.vertices)} vertices; "
        f"intersecting: {'yes' if is_t_intersecting(H, 1) else 'no'}; "
        f"2-intersecting: {'yes' if is_t_intersecting(H, 2) else 'no'}"
    )


def _emit_instance(H, comments, args, out):
    if args.out:
        io.write_hypergraph(args.out, H, comments)
        out.write(f"wrote {args.out}: {_summary(H)}\n")
    else:
        out.write(io.serialize_hypergraph(H, comments))
        sys.stderr.write(_summary(H) + "\n")
    return EXIT_OK


def _cmd_gen(args, out):
    family = args.family.replace("-", "_")
    H = generators.generate(family, args.params, args.seed)
    comments = []
    if family.startswith("random"):
        comments = [
            f"family: {family} " + " ".join(map(str, args.params)),
            f"seed: {args.seed}",
            f"prng: {generators.PRNG_ID}",
        ]
    return _emit_instance(H, comments, args, out)


def _cmd_witness(args, out):
    H = generators.find_branch_witness(args.target, budget=args.budget, seed=args.seed)
    if H is None:
        sys.stderr.write(f"no witness for {args.target} within budget {args.budget}\n")
        return EXIT_BUDGET
    comments = [f"witness: {args.target}", f"seed: {args.seed}", f"prng: {generators.PRNG_ID}"]
    return _emit_instance(H, comments, args, out)


def build_parser():
    p = _Parser(prog="strongcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("color", help="color a hypergraph file")
    c.add_argument("file")
    c.add_argument("--algorithm", choices=("theorem", "lemma"), default="theorem")
    c.add_argument("--t", type=int, default=2, help="strength for --algorithm lemma (default 2)")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(func=_cmd_color)

    k = sub.add_parser("check", help="check a coloring against a hypergraph")
    k.add_argument("hypergraph")
    k.add_argument("coloring")
    k.add_argument("--strength", type=int, default=3)
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=_cmd_check)

    o = sub.add_parser(
        "oracle",
        help="exact minimum number of colors",
        epilog=f"node budget defaults to ${BUDGET_ENV} when set",
    )
    o.add_argument("file")
    o.add_argument("--strength", type=int, default=3)
    o.add_argument("--max-colors", type=int, default=6)
    o.add_argument("--max-vertices", type=int, default=MAX_VERTICES)
    o.add_argument("--budget", type=int, default=None)
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.set_defaults(func=_cmd_oracle)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("family", help=", ".join(f.replace("_", "-") for f in generators.FAMILIES))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=_cmd_gen)

    w = sub.add_parser("witness", help="search for an instance reaching a pipeline branch")
    w.add_argument("target", choices=generators.TARGETS)
    w.add_argument("--budget", type=int, default=50_000)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--out")
    w.set_defaults(func=_cmd_witness)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PreconditionError as exc:
        sys.stderr.write(f"precondition failed: {exc}\n")
        for e in exc.witness:
            sys.stderr.write(f"  witness edge {_fmt_edge(e)}\n")
        return EXIT_PRECONDITION
    except (OSError, ParseError, OracleSizeError, GenerationError, MissingVertexError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except InternalVerificationError as exc:
        sys.stderr.write(f"internal verification failure: {exc}\n")
        for e, n in exc.failing_edges:
            sys.stderr.write(f"  edge {_fmt_edge(e)}: {n} distinct colors\n")
        return EXIT_INTERNAL
    except BudgetExhausted as exc:
        sys.stderr.write(f"budget exhausted after {exc.explored} nodes; no conclusion\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
