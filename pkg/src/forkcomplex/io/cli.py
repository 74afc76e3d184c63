"""``forkcx`` command-line interface.

Exit status: 0 success, 1 domain rejection (invalid complex, inapplicable
move, exhausted budget), 2 usage or syntax error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from pathlib import Path

from ..catalog import NAMES, CatalogKey, build_catalog
from ..complex import complex_euler
from ..errors import BadParameter, DslSyntaxError, ForkError, UnknownNode
from ..exactness import check_exact
from ..moves import apply_move
from ..search import SearchBudget, thin_search
from ..width import compare_width, width
from .dsl import format_complex, format_move, parse_complex, parse_move
from .render import render_dot, render_svg

JSON_FORMAT = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="forkcx", description="Fork complexes and width-changing moves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check a complex file")
    s.add_argument("file")

    s = sub.add_parser("width", parents=[common], help="print the width")
    s.add_argument("file")

    s = sub.add_parser("compare", parents=[common], help="compare two widths")
    s.add_argument("file1")
    s.add_argument("file2")

    s = sub.add_parser("apply", parents=[common], help="apply moves")
    s.add_argument("file")
    s.add_argument("--move", action="append", required=True, metavar="SPEC",
                   help='e.g. "weakreduce grip=S case=NU a=1 b=1"; repeatable')
    s.add_argument("-o", "--output", help="write the result here (default: stdout)")

    s = sub.add_parser("search", parents=[common], help="search for a move-minimal complex")
    s.add_argument("file")
    s.add_argument("--max-depth", type=int, default=8)
    s.add_argument("--max-states", type=int, default=10_000)
    s.add_argument("--allow-nondecreasing", action="store_true")
    s.add_argument("--assert", dest="asserts", action="append", default=[],
                   metavar="NODE=TEXT", help="extra assertion; repeatable")
    s.add_argument("-o", "--output")

    s = sub.add_parser("render", parents=[common], help="draw a complex")
    s.add_argument("file")
    s.add_argument("--format", choices=("dot", "svg"), default="dot")
    s.add_argument("-o", "--output")

    s = sub.add_parser("catalog", parents=[common], help="write a catalog entry")
    s.add_argument("name", help="one of: " + ", ".join(NAMES))
    s.add_argument("--genus", type=int)
    s.add_argument("--variant", type=int)
    s.add_argument("-o", "--output")
    return p


def _read(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return parse_complex(text)
    except ForkError as exc:
        exc.path = path
        raise


def _write(path: str | None, text: str, out) -> None:
    if path is None:
        out.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def _catalog_key(name: str, genus, variant) -> CatalogKey:
    """Accept ``T3Untelescoped`` as well as ``t3_untelescoped`` or ``f2s1-untelescoped-c2``."""
    wanted = name.replace("_", "").replace("-", "").lower()
    by_norm = {known.lower(): known for known in NAMES}
    if wanted in by_norm:
        return CatalogKey(by_norm[wanted], genus, variant)
    if wanted[:-1] == "f2s1untelescopedc" and wanted[-1] in "12" and variant is None:
        return CatalogKey("F2S1UntelescopedC", genus, int(wanted[-1]))
    return CatalogKey(name, genus, variant)  # raises BadParameter


def _cmd(args, out) -> dict:
    cmd = args.command
    if cmd == "validate":
        gs = _read(args.file)
        levels = check_exact(gs)
        out_text = (f"ok: {len(gs.forks)} forks, {len(gs.nodes)} nodes, "
                    f"width {width(gs)}, euler {complex_euler(gs)}\n")
        return {"text": out_text, "valid": True, "forks": len(gs.forks),
                "nodes": len(gs.nodes), "width": list(width(gs).entries),
                "euler": complex_euler(gs), "levels": len(levels)}
    if cmd == "width":
        w = width(_read(args.file))
        return {"text": ",".join(map(str, w.entries)) + "\n", "width": list(w.entries)}
    if cmd == "compare":
        w1, w2 = width(_read(args.file1)), width(_read(args.file2))
        order = compare_width(w1, w2)
        return {"text": order.symbol + "\n", "comparison": order.value,
                "symbol": order.symbol, "widths": [list(w1.entries), list(w2.entries)]}
    if cmd == "apply":
        gs = _read(args.file)
        moves = []
        for spec in args.move:
            moves.append(parse_move(spec))
        reports = []
        for move in moves:
            gs, report = apply_move(gs, move)
            reports.append(report)
        result = format_complex(gs)
        text = "".join(f"{format_move(r.move)}: {r.summary()}\n" for r in reports)
        if args.output:
            _write(args.output, result, out)
        elif not args.json:
            text += result
        return {"text": text, "reports": [_report_json(r) for r in reports],
                "result": result}
    if cmd == "search":
        gs = _read(args.file)
        extra = []
        for item in args.asserts:
            node, eq, text = item.partition("=")
            if not eq or not node:
                raise UsageError(f"--assert expects NODE=TEXT, got {item!r}")
            if node not in gs.node_map:
                raise UnknownNode(f"--assert names unknown node {node!r}", node=node)
            extra.append((node, text))
        try:
            budget = SearchBudget(args.max_depth, args.max_states, args.allow_nondecreasing)
        except BadParameter as exc:
            raise UsageError(exc.message) from None
        result = thin_search(gs.with_assertions(extra) if extra else gs, budget)
        doc = format_complex(result.splitting)
        text = "".join(f"{format_move(r.move)}: {r.summary()}\n" for r in result.trace)
        text += f"width {result.width} after {len(result.trace)} moves\n"
        if result.budget_exceeded:
            text += "budget exceeded; best result so far shown\n"
        if args.output:
            _write(args.output, doc, out)
        elif not args.json:
            text += doc
        payload = {"text": text, "width": list(result.width.entries),
                   "trace": [_report_json(r) for r in result.trace],
                   "budget_exceeded": result.budget_exceeded, "states": result.states,
                   "result": doc}
        if result.budget_exceeded:
            payload["status"] = 1
        return payload
    if cmd == "render":
        gs = _read(args.file)
        drawing = render_dot(gs) if args.format == "dot" else render_svg(gs)
        if args.output:
            _write(args.output, drawing, out)
            return {"text": "", "format": args.format, "output": args.output}
        return {"text": drawing, "format": args.format, "drawing": drawing}
    if cmd == "catalog":
        key = _catalog_key(args.name, args.genus, args.variant)
        doc = format_complex(build_catalog(key))
        if args.output:
            _write(args.output, doc, out)
            return {"text": "", "name": key.name, "output": args.output}
        return {"text": doc, "name": key.name, "document": doc}
    raise UsageError(f"unknown command {cmd!r}")


def _report_json(r) -> dict:
    return {"move": format_move(r.move), "before": list(r.before.entries),
            "after": list(r.after.entries), "comparison": r.comparison.value,
            "removed": list(r.removed), "added": list(r.added), "euler": r.euler,
            "notes": list(r.notes)}


def _error_json(exc: ForkError) -> dict:
    err = {"code": exc.code, "message": exc.message}
    if exc.position is not None:
        err["line"], err["col"] = exc.position
    if exc.fork is not None:
        err["fork"] = exc.fork
    if exc.node is not None:
        err["node"] = exc.node
    return err


def _describe(exc: ForkError) -> str:
    where = getattr(exc, "path", None)
    if exc.position is not None:
        line, col = exc.position
        where = f"{where or '<move>'}:{line}:{col}"
    return f"{where}: {exc}" if where else str(exc)


def run_cli(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    parser = _build_parser()
    buf_out, buf_err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(buf_out), contextlib.redirect_stderr(buf_err):
            args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(buf_err.getvalue())
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        out.write(buf_out.getvalue())
        err.write(buf_err.getvalue())
        return 0 if exc.code in (0, None) else 2

    def emit(payload: dict) -> None:
        if want_json:
            data = {"format": JSON_FORMAT, "command": args.command}
            data.update({k: v for k, v in payload.items() if k not in ("text", "status")})
            out.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            out.write(payload["text"])

    try:
        payload = _cmd(args, out)
    except UsageError as exc:
        if want_json:
            emit({"error": {"code": "Usage", "message": str(exc)}})
        err.write(f"forkcx: error: {exc}\n")
        return 2
    except ForkError as exc:
        if want_json:
            emit({"error": _error_json(exc)})
        err.write(f"forkcx: {_describe(exc)}\n")
        return 2 if isinstance(exc, DslSyntaxError) else 1
    except RecursionError:
        err.write("forkcx: error: input too deeply nested\n")
        return 1
    emit(payload)
    return payload.get("status", 0)


def main() -> None:
    sys.exit(run_cli())
