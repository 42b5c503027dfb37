"""Embedded relational engine: CSV tables, a restricted SQL dialect, and a
naive executor supporting NATURAL JOIN, DISTINCT and conjunctive equality
predicates.

The dialect accepted by parse_sql:

    query := SELECT DISTINCT ident ("," ident)*
             FROM ident (NATURAL JOIN ident)*
             [WHERE pred (and pred)*]
    pred  := ident "=" quoted_string | ident "=" number

Keywords are case-insensitive.  Execution materializes the join chain
left-to-right, filters, projects, deduplicates and sorts; correctness over
speed, since instances are desk-scale.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field

from .errors import (
    CsvTypeError,
    HeaderMismatch,
    NoSharedColumns,
    RaggedRow,
    SqlSyntaxError,
    UnknownColumn,
    UnknownTable,
)


@dataclass
class Table:
    name: str
    columns: tuple[tuple[str, str], ...]  # (name, type)
    rows: list[tuple]

    def column_names(self) -> list[str]:
        return [c for c, _ in self.columns]


@dataclass
class Database:
    tables: dict[str, Table] = field(default_factory=dict)

    def add(self, table: Table):
        self.tables[table.name] = table

    def get(self, name: str) -> Table:
        if name not in self.tables:
            raise UnknownTable(f"unknown table {name!r}")
        return self.tables[name]


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[tuple]


@dataclass(frozen=True)
class SqlQuery:
    """AST of the restricted dialect; names are unqualified as rendered."""
    projection: tuple[str, ...]
    tables: tuple[str, ...]
    predicates: tuple[tuple[str, object], ...]  # (column, str | int | float)
    distinct: bool = True


# ---------------------------------------------------------------------------
# CSV loading

def _parse_value(raw: str, typ: str, row_no: int, column: str):
    if typ == "text":
        return raw
    try:
        if typ == "integer":
            return int(raw)
        return float(raw)
    except ValueError:
        raise CsvTypeError(
            f"row {row_no}, column {column!r}: {raw!r} is not {typ}") from None


def load_csv(stream, table_name: str, declared_schema) -> Table:
    """Load an RFC-4180 style CSV whose header must match the declared
    column names exactly, in order."""
    columns = tuple((c, t) for c, t in declared_schema)
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise HeaderMismatch(f"{table_name}: file is empty") from None
    expected = [c for c, _ in columns]
    if header != expected:
        raise HeaderMismatch(
            f"{table_name}: header {header!r} != declared {expected!r}")
    rows = []
    for row_no, raw in enumerate(reader, start=2):
        if not raw:
            continue
        if len(raw) != len(columns):
            raise RaggedRow(f"{table_name}: row {row_no} has {len(raw)} fields, "
                            f"expected {len(columns)}")
        rows.append(tuple(_parse_value(value, typ, row_no, col)
                          for value, (col, typ) in zip(raw, columns)))
    return Table(name=table_name, columns=columns, rows=rows)


def load_csv_file(path, table_name: str, declared_schema) -> Table:
    with open(path, newline="", encoding="utf-8") as fh:
        return load_csv(fh, table_name, declared_schema)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(
    r"""(?:
        (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<number>\d+(?:\.\d+)?)
      | (?P<string>'(?:[^']|'')*')
      | (?P<punct>[,=])
    )""",
    re.VERBOSE,
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._lex()
        self.i = 0

    def _lex(self):
        pos = 0
        text = self.text
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise SqlSyntaxError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), pos))
            pos = m.end()

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, message):
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise SqlSyntaxError(message, pos)

    def keyword(self, word) -> bool:
        tok = self.peek()
        if tok and tok[0] == "ident" and tok[1].upper() == word:
            self.i += 1
            return True
        return False

    def expect_keyword(self, word):
        if not self.keyword(word):
            self.error(f"expected {word}")

    def expect_ident(self) -> str:
        tok = self.peek()
        if not tok or tok[0] != "ident" or tok[1].upper() in _KEYWORDS:
            self.error("expected identifier")
        self.i += 1
        return tok[1]

    def expect_punct(self, char):
        tok = self.peek()
        if not tok or tok[0] != "punct" or tok[1] != char:
            self.error(f"expected {char!r}")
        self.i += 1

    def try_punct(self, char) -> bool:
        tok = self.peek()
        if tok and tok[0] == "punct" and tok[1] == char:
            self.i += 1
            return True
        return False


_KEYWORDS = {"SELECT", "DISTINCT", "FROM", "NATURAL", "JOIN", "WHERE", "AND"}


def parse_sql(text: str) -> SqlQuery:
    """Parse the restricted dialect into a SqlQuery AST.

    Name resolution (unknown tables/columns) is deferred to execute.
    """
    p = _Parser(text)
    p.expect_keyword("SELECT")
    p.expect_keyword("DISTINCT")
    projection = [p.expect_ident()]
    while p.try_punct(","):
        projection.append(p.expect_ident())
    p.expect_keyword("FROM")
    tables = [p.expect_ident()]
    while p.keyword("NATURAL"):
        p.expect_keyword("JOIN")
        tables.append(p.expect_ident())
    predicates = []
    if p.keyword("WHERE"):
        predicates.append(_parse_predicate(p))
        while p.keyword("AND"):
            predicates.append(_parse_predicate(p))
    if p.peek() is not None:
        p.error("unexpected trailing input")
    return SqlQuery(projection=tuple(projection), tables=tuple(tables),
                    predicates=tuple(predicates))


def _parse_predicate(p: _Parser):
    column = p.expect_ident()
    p.expect_punct("=")
    tok = p.peek()
    if tok is None:
        p.error("expected value")
    kind, value, _ = tok
    if kind == "string":
        p.i += 1
        return (column, value[1:-1].replace("''", "'"))
    if kind == "number":
        p.i += 1
        return (column, int(value) if "." not in value else float(value))
    p.error("expected quoted string or number")


def render_sql(q: SqlQuery) -> str:
    """Deterministic textual form; round-trips through parse_sql."""
    parts = ["SELECT DISTINCT ", ", ".join(q.projection),
             " FROM ", " NATURAL JOIN ".join(q.tables)]
    if q.predicates:
        rendered = []
        for column, value in q.predicates:
            if isinstance(value, str):
                rendered.append(f"{column}='" + value.replace("'", "''") + "'")
            else:
                rendered.append(f"{column}={value}")
        parts += [" WHERE ", " and ".join(rendered)]
    return "".join(parts)


# ---------------------------------------------------------------------------
# Execution

def natural_join(t1: Table, t2: Table) -> Table:
    """Equi-join on all shared column names; shared columns appear once.

    Join-key comparison is exact (keys are synthetic ids).
    """
    names1, names2 = t1.column_names(), t2.column_names()
    shared = [c for c in names1 if c in names2]
    if not shared:
        raise NoSharedColumns(f"{t1.name} and {t2.name} share no columns")
    idx1 = {c: i for i, c in enumerate(names1)}
    idx2 = {c: i for i, c in enumerate(names2)}
    extra2 = [c for c in names2 if c not in shared]
    columns = t1.columns + tuple(c for c in t2.columns if c[0] in extra2)
    rows = []
    for r1 in t1.rows:
        for r2 in t2.rows:
            if all(r1[idx1[c]] == r2[idx2[c]] for c in shared):
                rows.append(r1 + tuple(r2[idx2[c]] for c in extra2))
    return Table(name=f"({t1.name}*{t2.name})", columns=columns, rows=rows)


def _predicate_matches(cell, value, typ: str) -> bool:
    if typ == "text":
        return str(cell).lower() == str(value).lower()
    try:
        return float(cell) == float(value)
    except (TypeError, ValueError):
        return False


def execute(q: SqlQuery, db: Database) -> ResultTable:
    """Run a query: fold joins, filter, project, dedupe, sort."""
    current = db.get(q.tables[0])
    for name in q.tables[1:]:
        current = natural_join(current, db.get(name))
    names = current.column_names()
    index = {c: i for i, c in enumerate(names)}
    types = {c: t for c, t in current.columns}

    for column, _value in q.predicates:
        if column not in index:
            raise UnknownColumn(f"unknown column {column!r}")
    rows = [row for row in current.rows
            if all(_predicate_matches(row[index[c]], v, types[c])
                   for c, v in q.predicates)]

    for column in q.projection:
        if column not in index:
            raise UnknownColumn(f"unknown column {column!r}")
    projected = [tuple(row[index[c]] for c in q.projection) for row in rows]
    distinct = sorted(set(projected), key=lambda r: tuple(str(v) for v in r))
    return ResultTable(columns=list(q.projection), rows=distinct)
