"""Command-line front end.

Subcommands: extend, solve, sweep, ewl, report, serve. Games travel as Game
File Format JSON ("-" reads standard input, so subcommands pipe into each
other). Exit codes: 0 success, 2 input validation error, 1 internal error.

Human-readable solve output marks equilibrium cells with "*", maximin
rows/columns with "+" and strictly dominated ones with "x"; ``--json``
switches every subcommand to machine-readable output. ``QEGS_LOG`` selects
the log level (error, warn, info, debug).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .core import Bimatrix, game_to_dict, parse_game, parse_rational, serialize_game
from .errors import NoReportError, ParseError, QegsError, ValidationError
from .ewl import UnitaryParams, ewl_payoff, ewl_weights
from .extensions import CLASS_NAMES, class_info, extend
from .report import generate_report
from .solver import format_exact, normalize_analyses, result_to_json, solve
from .sweep import sweep

log = logging.getLogger("qegs")

_LOG_LEVELS = {"error": logging.ERROR, "warn": logging.WARNING,
               "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging():
    raw = os.environ.get("QEGS_LOG", "error").lower()
    logging.basicConfig(
        stream=sys.stderr,
        level=_LOG_LEVELS.get(raw, logging.ERROR),
        format="%(levelname)s %(name)s: %(message)s",
    )


def _read_game(path: str) -> Bimatrix:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_game(data)


def _emit_json(doc, compact: bool):
    if compact:
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(json.dumps(doc, indent=2))


def _marked_matrix(g: Bimatrix, result) -> str:
    rows = list(g.row_labels) if g.row_labels else [f"R{i + 1}" for i in range(g.rows)]
    cols = list(g.col_labels) if g.col_labels else [f"C{j + 1}" for j in range(g.cols)]
    for idx in range(g.rows):
        mark = ""
        if idx + 1 in result.maximin_rows:
            mark += "+"
        if idx + 1 in result.dominated_rows:
            mark += "x"
        rows[idx] += mark
    for idx in range(g.cols):
        mark = ""
        if idx + 1 in result.maximin_cols:
            mark += "+"
        if idx + 1 in result.dominated_cols:
            mark += "x"
        cols[idx] += mark
    cells = []
    for i in range(g.rows):
        line = []
        for j in range(g.cols):
            text = str(g.entries[i][j])
            if (i + 1, j + 1) in result.nash:
                text += "*"
            line.append(text)
        cells.append(line)
    widths = [max(len(rows[i]) for i in range(g.rows))]
    for j in range(g.cols):
        widths.append(max(len(cols[j]), max(len(cells[i][j]) for i in range(g.rows))))
    header = "  ".join(s.ljust(w) for s, w in zip([""] + cols, widths))
    lines = [header.rstrip()]
    for i in range(g.rows):
        lines.append("  ".join(s.ljust(w) for s, w in zip([rows[i]] + cells[i], widths)).rstrip())
    return "\n".join(lines)


def _profile_list(profiles) -> str:
    return ", ".join(f"({i},{j})" for i, j in sorted(profiles)) or "none"


def _index_list(indices) -> str:
    return "{" + ", ".join(str(i) for i in sorted(indices)) + "}" if indices else "none"


def cmd_extend(args) -> int:
    g = _read_game(args.game)
    info = class_info(args.cls)
    param = None
    if args.param is not None and args.symbolic:
        raise ValidationError("--param and --symbolic are mutually exclusive")
    if args.param is not None:
        if info.param_kind is None:
            raise ValidationError(f"class {args.cls} takes no parameter")
        param = parse_rational(args.param)
    ext = extend(g, args.cls, param)
    payload = serialize_game(ext, indent=None if args.json else 2).decode()
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        log.info("wrote %s", args.out)
    else:
        print(payload)
    return 0


def _resolved_game(args) -> Bimatrix:
    g = _read_game(args.game)
    if getattr(args, "param", None) is not None:
        if g.parameter is None:
            raise ValidationError("game has no parameter to substitute")
        g = g.evaluate(parse_rational(args.param))
    return g


def cmd_solve(args) -> int:
    g = _resolved_game(args)
    analyses = normalize_analyses(args.analysis)
    result = solve(g)
    if args.json:
        _emit_json(result_to_json(result, analyses), compact=True)
        return 0
    print(_marked_matrix(g, result))
    if "ne" in analyses:
        print(f"NE: {_profile_list(result.nash)}")
    if "dominated" in analyses:
        print(
            f"Dominated rows: {_index_list(result.dominated_rows)}"
            f"  cols: {_index_list(result.dominated_cols)}"
        )
    if "maximin" in analyses:
        levels = tuple(format_exact(v) for v in result.security_levels)
        print(
            f"Maximin rows: {_index_list(result.maximin_rows)}"
            f"  cols: {_index_list(result.maximin_cols)}"
            f"  security levels: ({levels[0]}, {levels[1]})"
        )
    return 0


def _format_bound(value) -> str:
    text = format_exact(value)
    if isinstance(value, Fraction) or "sqrt" not in text:
        return text
    return f"{text} (~{float(value):.6g})"


def cmd_sweep(args) -> int:
    g = _read_game(args.game)
    analyses = normalize_analyses(args.analysis)
    result = sweep(g, parse_rational(args.min), parse_rational(args.max), analyses)
    if args.json:
        _emit_json(result.to_json(), compact=True)
        return 0
    kind = "exact" if result.exact else "approximate"
    print(f"parameter {result.parameter} on [{result.lo}, {result.hi}] ({kind})")
    print(f"breakpoints: {', '.join(_format_bound(b) for b in result.breakpoints) or 'none'}")
    for seg in result.segments:
        data = seg.data.to_json()
        desc = ", ".join(f"{k}={v}" for k, v in data.items())
        if seg.kind == "point":
            print(f"  at {_format_bound(seg.at)}: {desc}")
        else:
            lo_br = "(" if seg.lo_open else "["
            hi_br = ")" if seg.hi_open else "]"
            print(f"  {lo_br}{_format_bound(seg.lo)}, {_format_bound(seg.hi)}{hi_br}: {desc}")
    return 0


def _parse_unitary(text: str, radians: bool) -> UnitaryParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValidationError(f"expected T,A,B angles, got {text!r}")
    if radians:
        try:
            vals = [float(p) for p in parts]
        except ValueError as exc:
            raise ValidationError(f"bad angle in {text!r}: {exc}") from None
        return UnitaryParams.from_radians(*vals)
    return UnitaryParams.from_pi(*(parse_rational(p) for p in parts))


def cmd_ewl(args) -> int:
    g = _read_game(args.game)
    u1 = _parse_unitary(args.u1, args.radians)
    u2 = _parse_unitary(args.u2, args.radians)
    p1, p2 = ewl_payoff(g, u1, u2)
    weights = ewl_weights(u1, u2)
    if weights.exact:
        payoff = [format_exact(p1), format_exact(p2)]
        wlist = [format_exact(w) for w in weights.as_tuple()]
    else:
        payoff = [float(p1), float(p2)]
        wlist = [float(w) for w in weights.as_tuple()]
    if args.json:
        _emit_json({"payoff": payoff, "weights": wlist, "exact": weights.exact}, compact=True)
    else:
        print(f"payoff: ({payoff[0]}, {payoff[1]})")
        print(f"weights: {wlist}  exact: {weights.exact}")
    return 0


def cmd_report(args) -> int:
    g = _read_game(args.game)
    path = generate_report(g, args.name, args.out)
    print(str(path))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, bind=args.bind)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qegs",
        description="Exact analysis of bimatrix games and their quantum extensions.",
    )
    parser.add_argument("--version", action="version", version=f"qegs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extend", help="build a quantum extension of a 2x2 game")
    p.add_argument("--game", required=True, help="game file path, or - for stdin")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_NAMES)
    p.add_argument("--param", help="rational class parameter in [0,1]")
    p.add_argument("--symbolic", action="store_true",
                   help="keep the class parameter symbolic (default for parametric classes)")
    p.add_argument("--out", help="write the extension here instead of stdout")
    p.add_argument("--json", action="store_true", help="compact JSON output")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("solve", help="pure NE / maximin / dominated strategies")
    p.add_argument("--game", required=True)
    p.add_argument("--analysis", required=True, choices=["ne", "maximin", "dominated", "all"])
    p.add_argument("--param", help="substitute this rational for the game parameter first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="exact solution segments over a parameter range")
    p.add_argument("--game", required=True)
    p.add_argument("--min", required=True)
    p.add_argument("--max", required=True)
    p.add_argument("--analysis", required=True, choices=["ne", "maximin", "dominated", "all"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ewl", help="payoff of a unitary strategy profile on a 2x2 game")
    p.add_argument("--game", required=True)
    p.add_argument("--u1", required=True, metavar="T,A,B",
                   help="angles as rational multiples of pi (1/3 means pi/3)")
    p.add_argument("--u2", required=True, metavar="T,A,B")
    p.add_argument("--radians", action="store_true", help="angles are float radians")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ewl)

    p = sub.add_parser("report", help="write a Markdown analysis report")
    p.add_argument("--game", required=True)
    p.add_argument("--name", required=True)
    p.add_argument("--out", default=".", help="output directory (default: current)")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--bind", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoReportError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QegsError as exc:
        log.error("internal error: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
