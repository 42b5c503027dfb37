"""Command-line entry point: one-shot question, REPL, or HTTP server.

Exit codes: 0 success, 1 config error, 2 runtime I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import ConfigError
from .service import AppConfig, Engine, answer_question, build_engine


def _format_rows(columns, rows) -> str:
    widths = [len(c) for c in columns]
    printable = [[str(v) for v in row] for row in rows]
    for row in printable:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    def line(values):
        return "  ".join(v.ljust(w) for v, w in zip(values, widths)).rstrip()
    out = [line(columns), line("-" * w for w in widths)]
    out += [line(row) for row in printable]
    return "\n".join(out)


def print_response(response, show_trace: bool, out=sys.stdout):
    if response.status == "answered":
        print(f"sql: {response.sql}", file=out)
        print(_format_rows(response.columns, response.rows), file=out)
        print(f"({len(response.rows)} row(s))", file=out)
    else:
        print(f"{response.status}: {response.message}", file=out)
    if show_trace and response.trace is not None:
        print("trace:", file=out)
        for entry in response.trace:
            print(f"  {json.dumps(entry)}", file=out)


def run_repl(engine: Engine, show_trace: bool) -> int:
    print("type a question, or :quit to exit")
    while True:
        try:
            line = input("? ")
        except EOFError:
            print()
            return 0
        except OSError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return 2
        if line.strip() == ":quit":
            return 0
        if not line.strip():
            continue
        print_response(answer_question(line, engine), show_trace)


def serve(engine: Engine, port: int) -> int:
    import uvicorn

    from .http_api import create_app
    uvicorn.run(create_app(engine), host="127.0.0.1", port=port)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="nlquery",
        description="Answer English questions against a CSV-backed database.")
    parser.add_argument("--config", type=Path,
                        help="schema config JSON (default: bundled fixture)")
    parser.add_argument("--data-dir", type=Path,
                        help="directory holding <table>.csv files")
    parser.add_argument("--lexicon", type=Path, help="POS lexicon file")
    parser.add_argument("--serve", action="store_true", help="run the HTTP API")
    parser.add_argument("--port", type=int, default=8080)
    parser.add_argument("--question", help="answer one question and exit")
    parser.add_argument("--trace", action="store_true",
                        help="show the mapping trace")
    args = parser.parse_args(argv)

    config = AppConfig(port=args.port, trace=args.trace)
    if args.config:
        config.schema_path = args.config
    if args.data_dir:
        config.data_dir = args.data_dir
    if args.lexicon:
        config.lexicon_path = args.lexicon

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    try:
        engine = build_engine(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2

    if args.question is not None:
        print_response(answer_question(args.question, engine), args.trace)
        return 0
    if args.serve:
        return serve(engine, args.port)
    return run_repl(engine, args.trace)


if __name__ == "__main__":
    sys.exit(main())
