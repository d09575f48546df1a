"""Command-line front end: file parsing, report rendering, exit codes.

Every subcommand prints a [machine] block of key=value lines that alone
determines the verdict, followed by a [human] block of aligned text.  Output
is deterministic: fixed key order, no timestamps, exact rationals rendered by
Fraction.__str__.  Exit codes: 0 when the queried property holds, 1 when it
fails or a precondition is unmet, 2 on input errors, 3 when the census
resource guard trips.  Index sets are rendered 1-based.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .census import (
    check_pair_supports,
    run_census,
    verify_pair_scaling_equivalence,
    write_records,
)
from .copositivity import is_copositive
from .errors import (
    CandidateBudgetError,
    CopocertError,
    MatrixFormatError,
)
from .extremality import extremality_certificate
from .linalg import SymMatrix, upper_size
from .scaling import extract_pattern
from .structure_graph import (
    build_graph,
    component_analysis,
    dimension_via_graph,
    reconstruct_pattern,
    to_dot,
)
from .zeros import minimal_zeros

_TOKEN = re.compile(r"\S+")
_ENTRY = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_matrix_file(path: str) -> SymMatrix:
    """Read a symmetric rational matrix from a plain-text file.

    First non-comment line holds the order n, then n rows of n entries,
    each an integer p or a rational p/q with positive q.  Lines starting
    with '#' and blank lines are skipped.  Asymmetric input is rejected.
    """
    try:
        with open(path) as handle:
            raw = handle.readlines()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}",
                                line=0, column=0)
    data = []
    for lineno, text in enumerate(raw, start=1):
        stripped = text.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(text)]
        data.append((lineno, tokens))
    if not data:
        raise MatrixFormatError("no data lines", line=len(raw) + 1, column=1)
    lineno, tokens = data[0]
    if len(tokens) != 1:
        raise MatrixFormatError(
            f"order line must hold a single integer, got {len(tokens)} tokens",
            line=lineno, column=tokens[1][0])
    col, tok = tokens[0]
    if not tok.isdigit() or int(tok) < 1:
        raise MatrixFormatError(f"order must be a positive integer, got {tok!r}",
                                line=lineno, column=col)
    n = int(tok)
    if len(data) - 1 < n:
        raise MatrixFormatError(
            f"expected {n} matrix rows, found {len(data) - 1}",
            line=len(raw) + 1, column=1)
    if len(data) - 1 > n:
        extra_line, extra_tokens = data[n + 1]
        raise MatrixFormatError(
            f"unexpected content after {n} matrix rows",
            line=extra_line, column=extra_tokens[0][0])
    entries = []
    positions = []
    for r in range(n):
        lineno, tokens = data[r + 1]
        if len(tokens) != n:
            bad_col = tokens[n][0] if len(tokens) > n else (
                tokens[-1][0] if tokens else 1)
            raise MatrixFormatError(
                f"row {r + 1} has {len(tokens)} entries, expected {n}",
                line=lineno, column=bad_col)
        row = []
        pos = []
        for col, tok in tokens:
            if not _ENTRY.match(tok):
                raise MatrixFormatError(
                    f"entry {tok!r} is not an integer or p/q rational",
                    line=lineno, column=col)
            try:
                row.append(Fraction(tok))
            except ZeroDivisionError:
                raise MatrixFormatError(f"zero denominator in {tok!r}",
                                        line=lineno, column=col)
            pos.append((lineno, col))
        entries.append(row)
        positions.append(pos)
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i][j] != entries[j][i]:
                lineno, col = positions[j][i]
                raise MatrixFormatError(
                    f"asymmetric entries: ({i + 1},{j + 1}) is "
                    f"{entries[i][j]}, ({j + 1},{i + 1}) is {entries[j][i]}",
                    line=lineno, column=col)
    return SymMatrix.from_rows(entries)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _vec(v) -> str:
    return ",".join(str(c) for c in v)


def _support(s) -> str:
    return ",".join(str(i + 1) for i in sorted(s))


def _supports(supports) -> str:
    return ";".join(_support(s) for s in supports) or "-"


def _rows(A: SymMatrix) -> str:
    return ";".join(",".join(str(A.get(i, j)) for j in range(A.n))
                    for i in range(A.n))


def _emit(machine, human, extra: str = "") -> None:
    lines = ["[machine]"]
    lines += [f"{key}={value}" for key, value in machine]
    lines.append("[human]")
    lines += [f"  {label:<18}{value}" for label, value in human]
    out = "\n".join(lines) + "\n" + extra
    sys.stdout.write(out)


def _emit_error(command: str, exc: CopocertError) -> None:
    machine = [("command", command), ("error", exc.code)]
    if isinstance(exc, MatrixFormatError):
        machine += [("line", exc.line), ("column", exc.column)]
    if getattr(exc, "violator", None) is not None:
        machine.append(("violator", _vec(exc.violator)))
    machine.append(("message", str(exc)))
    _emit(machine, [("error", f"{exc.code}: {exc}")])


def cmd_check(args) -> int:
    A = parse_matrix_file(args.path)
    verdict = is_copositive(A)
    machine = [("command", "check"), ("order", A.n),
               ("copositive", _yn(verdict.copositive)),
               ("simplex_minimum", verdict.simplex_minimum)]
    human = [("order", A.n), ("copositive", _yn(verdict.copositive))]
    if verdict.copositive:
        human.append(("simplex minimum", verdict.simplex_minimum))
    else:
        machine.append(("violator", _vec(verdict.violator)))
        human += [("violator", _vec(verdict.violator)),
                  ("attained value", verdict.simplex_minimum)]
    _emit(machine, human)
    return 0 if verdict.copositive else 1


def cmd_zeros(args) -> int:
    A = parse_matrix_file(args.path)
    zeros = minimal_zeros(A)
    machine = [("command", "zeros"), ("order", A.n),
               ("copositive", "yes"), ("zero_count", len(zeros))]
    human = [("order", A.n), ("minimal zeros", len(zeros))]
    for k, zero in enumerate(zeros, start=1):
        machine += [(f"zero_{k}", _vec(zero.coordinates)),
                    (f"support_{k}", _support(zero.support))]
        human.append((f"zero {k}",
                      f"({_vec(zero.coordinates)})  support {{{_support(zero.support)}}}"))
    if not len(zeros):
        human.append(("note", "no zeros"))
    _emit(machine, human)
    return 0


def cmd_extremal(args) -> int:
    A = parse_matrix_file(args.path)
    cert = extremality_certificate(A)
    machine = [("command", "extremal"), ("order", A.n),
               ("zero_count", len(cert.minimal_zeros)),
               ("system_rows", len(cert.system)),
               ("nullity", cert.nullity),
               ("extremal", _yn(cert.extremal))]
    human = [("order", A.n), ("system rows", len(cert.system)),
             ("nullity", cert.nullity), ("extremal", _yn(cert.extremal))]
    _emit(machine, human)
    return 0 if cert.extremal else 1


def cmd_graph(args) -> int:
    A = parse_matrix_file(args.path)
    zeros = minimal_zeros(A)
    graph = build_graph(A, zeros)
    report = component_analysis(graph)
    machine = [("command", "graph"), ("order", A.n),
               ("vertices", upper_size(A.n)), ("edges", len(graph.edges)),
               ("components", len(report.components)),
               ("bipartite", report.bipartite_count),
               ("dimension", dimension_via_graph(report))]
    human = [("order", A.n), ("vertices", upper_size(A.n)),
             ("edges", len(graph.edges)),
             ("components", len(report.components)),
             ("bipartite", report.bipartite_count),
             ("dimension", dimension_via_graph(report))]
    if report.bipartite_count == 1:
        pattern = reconstruct_pattern(report)
        machine.append(("pattern", _rows(pattern)))
        human.append(("pattern", _rows(pattern)))
    if args.dot:
        with open(args.dot, "w") as handle:
            handle.write(to_dot(graph, report))
        machine.append(("dot", args.dot))
        human.append(("dot file", args.dot))
    _emit(machine, human)
    return 0


def cmd_normalize(args) -> int:
    A = parse_matrix_file(args.path)
    dec = extract_pattern(A)
    machine = [("command", "normalize"), ("order", A.n),
               ("pattern", _rows(dec.pattern)),
               ("explicit", _yn(dec.explicit))]
    human = [("order", A.n), ("pattern", _rows(dec.pattern)),
             ("scaling", "explicit" if dec.explicit else "implicit (irrational)")]
    if dec.explicit:
        machine.append(("scaling", _vec(dec.scaling.entries)))
        human.append(("factors", _vec(dec.scaling.entries)))
    _emit(machine, human)
    return 0


def cmd_census(args) -> int:
    checkpoint = args.output + ".checkpoint" if args.output else None
    records = run_census(args.order, allow_large=args.allow_large,
                         checkpoint=checkpoint, resume=args.resume)
    report = check_pair_supports(records)
    machine = [("command", "census"), ("order", args.order),
               ("classes", len(records)),
               ("copositive", sum(r.copositive for r in records)),
               ("extremal", sum(r.extremal for r in records)),
               ("pair_supports_ok", _yn(report.ok))]
    human = [("order", args.order), ("classes", len(records)),
             ("copositive", sum(r.copositive for r in records)),
             ("extremal", sum(r.extremal for r in records)),
             ("pair supports", "all cardinality 2" if report.ok else "VIOLATED")]
    extra = ""
    if args.output:
        write_records(records, args.output)
        machine.append(("output", args.output))
        human.append(("written to", args.output))
    else:
        extra = "[records]\n" + "".join(r.to_line() + "\n" for r in records)
    _emit(machine, human, extra)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    A = parse_matrix_file(args.path)
    report = verify_pair_scaling_equivalence(A)
    machine = [("command", "verify"), ("order", A.n),
               ("supports", _supports(report.supports)),
               ("pair_supports", _yn(report.pair_supports))]
    if report.decomposition is not None:
        machine += [("pattern", _rows(report.decomposition.pattern)),
                    ("scaling", _vec(report.decomposition.scaling.entries)
                     if report.decomposition.explicit else "implicit"),
                    ("pattern_nullity", report.pattern_nullity)]
    machine += [("scaled_extremal_pattern", _yn(report.scaled_extremal_pattern)),
                ("equivalent", _yn(report.equivalent))]
    human = [("order", A.n), ("supports", _supports(report.supports)),
             ("pair supports", _yn(report.pair_supports)),
             ("scaled pattern", _yn(report.scaled_extremal_pattern)),
             ("equivalent", _yn(report.equivalent))]
    _emit(machine, human)
    return 0 if report.equivalent else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copocert",
        description="Exact copositivity and extremality certificates "
                    "for rational symmetric matrices.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", help="test copositivity with witness")
    p.add_argument("path", help="matrix file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("zeros", help="enumerate minimal zeros")
    p.add_argument("path", help="matrix file")
    p.add_argument("--minimal", action="store_true", default=True,
                   help="list minimal zeros (the default and only mode)")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("extremal", help="certify extremality via nullity")
    p.add_argument("path", help="matrix file")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("graph", help="entry graph of the pair-support system")
    p.add_argument("path", help="matrix file")
    p.add_argument("--dot", metavar="OUT", help="write DOT to this file")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("normalize", help="extract the sign-pattern core")
    p.add_argument("path", help="matrix file")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("census", help="classify unit-diagonal {-1,0,1} matrices")
    p.add_argument("-n", "--order", type=int, required=True)
    p.add_argument("-o", "--output", help="write records to this file")
    p.add_argument("--allow-large", action="store_true",
                   help="bypass the candidate budget guard")
    p.add_argument("--resume", action="store_true",
                   help="resume from the checkpoint next to --output")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify",
                       help="check the pair-support / scaled-pattern equivalence")
    p.add_argument("path", help="matrix file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "census" and args.resume and not args.output:
        parser.error("--resume requires --output")
    try:
        return args.func(args)
    except MatrixFormatError as exc:
        _emit_error(args.subcommand, exc)
        return 2
    except CandidateBudgetError as exc:
        _emit_error(args.subcommand, exc)
        return 3
    except CopocertError as exc:
        _emit_error(args.subcommand, exc)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
