"""In-process property graph over the backend schema.

Nodes are tables, attributes and synonyms; edges are has_attribute,
synonym_of and references.  Labels are stored lowercase and lemmatized so
question lemmas match directly; physical names live on TableInfo.
The graph is built once from a JSON config and is immutable afterwards.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ConfigError, DisconnectedTables, GraphCorrupt
from .text_pipeline import lemmatize

COLUMN_TYPES = ("text", "real", "integer")


@dataclass(frozen=True)
class SchemaNode:
    id: str
    label: str
    kind: str  # table | attribute | synonym


@dataclass(frozen=True)
class SchemaEdge:
    src: str
    dst: str
    kind: str  # has_attribute | synonym_of | references
    column: Optional[str] = None  # shared column, for references edges


@dataclass(frozen=True)
class TableInfo:
    physical_name: str
    display_attribute: str
    columns: tuple[tuple[str, str], ...]  # (name, type)

    def column_names(self) -> list[str]:
        return [name for name, _ in self.columns]

    def column_type(self, name: str) -> Optional[str]:
        for col, typ in self.columns:
            if col == name:
                return typ
        return None


@dataclass(frozen=True)
class GraphMatch:
    node: SchemaNode
    owning_table: Optional[str] = None  # physical name, for attribute nodes


@dataclass(frozen=True)
class ResolvedElement:
    kind: str  # table | attribute
    table: str  # physical table name
    attribute: Optional[str] = None


class SchemaGraph:
    """Immutable after construction; see build_graph."""

    def __init__(self, nodes, edges, tables):
        self.nodes: dict[str, SchemaNode] = nodes
        self.edges: list[SchemaEdge] = edges
        self.tables: dict[str, TableInfo] = tables
        self._by_label: dict[str, list[GraphMatch]] = {}
        self._synonym_target: dict[str, str] = {}
        self._attr_owner: dict[str, str] = {}
        self._index()

    def _index(self):
        for edge in self.edges:
            if edge.kind == "synonym_of":
                self._synonym_target[edge.src] = edge.dst
            elif edge.kind == "has_attribute":
                self._attr_owner[edge.dst] = edge.src
        kind_rank = {"table": 0, "attribute": 1, "synonym": 2}
        for node in self.nodes.values():
            owner = None
            if node.kind == "attribute":
                owner = self.nodes[self._attr_owner[node.id]].id.split(":", 1)[1]
            self._by_label.setdefault(node.label, []).append(
                GraphMatch(node=node, owning_table=owner))
        for matches in self._by_label.values():
            matches.sort(key=lambda m: (kind_rank[m.node.kind],
                                        m.owning_table or "", m.node.id))

    def lookup(self, label: str) -> list[GraphMatch]:
        """All nodes carrying this label, ordered table < attribute < synonym,
        then alphabetically by owning table."""
        return list(self._by_label.get(label, []))

    def resolve(self, match: GraphMatch) -> ResolvedElement:
        """Follow a match to the table/attribute it stands for."""
        node = match.node
        if node.kind == "table":
            return ResolvedElement(kind="table", table=node.id.split(":", 1)[1])
        if node.kind == "attribute":
            table, attribute = node.id.split(":", 1)[1].split(".", 1)
            return ResolvedElement(kind="attribute", table=table, attribute=attribute)
        targets = [e for e in self.edges if e.kind == "synonym_of" and e.src == node.id]
        if len(targets) != 1:
            raise GraphCorrupt(f"synonym node {node.id!r} has {len(targets)} targets")
        target = self.nodes[targets[0].dst]
        return self.resolve(GraphMatch(node=target))

    def join_path(self, table_names) -> list[str]:
        """Order tables so each one shares a references edge with an earlier one.

        Input order is the tie-breaker, which keeps output deterministic.
        """
        remaining = list(dict.fromkeys(table_names))
        if not remaining:
            raise ValueError("join_path requires at least one table")
        for name in remaining:
            if name not in self.tables:
                raise DisconnectedTables([name])
        linked = {}
        for edge in self.edges:
            if edge.kind == "references":
                a = edge.src.split(":", 1)[1]
                b = edge.dst.split(":", 1)[1]
                linked.setdefault(a, set()).add(b)
                linked.setdefault(b, set()).add(a)
        ordered = [remaining.pop(0)]
        while remaining:
            for i, name in enumerate(remaining):
                if any(name in linked.get(chosen, ()) for chosen in ordered):
                    ordered.append(remaining.pop(i))
                    break
            else:
                raise DisconnectedTables(remaining)
        return ordered


def _require(cond, message):
    if not cond:
        raise ConfigError(message)


def load_config(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def build_graph(config: dict) -> SchemaGraph:
    """Materialize and validate the schema graph from a parsed config."""
    tables_cfg = config.get("tables", [])
    _require(tables_cfg, "config must declare at least one table")

    nodes: dict[str, SchemaNode] = {}
    edges: list[SchemaEdge] = []
    tables: dict[str, TableInfo] = {}
    ref_columns = {ref.get("column") for ref in config.get("references", [])}

    seen_labels: set[tuple[str, str]] = set()

    def add_node(node, shared_ok=False):
        key = (node.label, node.kind)
        # Attribute nodes for a declared reference column legitimately exist
        # in every table that shares it.
        _require(shared_ok or key not in seen_labels,
                 f"duplicate {node.kind} label {node.label!r}")
        seen_labels.add(key)
        nodes[node.id] = node

    for tbl in tables_cfg:
        name = tbl.get("name")
        _require(name, "table missing name")
        _require(name not in tables, f"duplicate table {name!r}")
        columns = []
        for col in tbl.get("columns", []):
            _require(col.get("type") in COLUMN_TYPES,
                     f"bad type for column {col.get('name')!r} in {name!r}")
            _require(col["name"] not in [c for c, _ in columns],
                     f"duplicate column {col['name']!r} in {name!r}")
            columns.append((col["name"], col["type"]))
        _require(columns, f"table {name!r} has no columns")
        display = tbl.get("display_attribute")
        _require(display in [c for c, _ in columns],
                 f"display_attribute {display!r} not a column of {name!r}")
        tables[name] = TableInfo(physical_name=name, display_attribute=display,
                                 columns=tuple(columns))
        label = tbl.get("label") or lemmatize(name.lower())
        table_id = f"table:{name}"
        add_node(SchemaNode(id=table_id, label=label, kind="table"))
        for col, _typ in columns:
            attr_id = f"attr:{name}.{col}"
            add_node(SchemaNode(id=attr_id, label=lemmatize(col.lower()),
                                kind="attribute"), shared_ok=col in ref_columns)
            edges.append(SchemaEdge(src=table_id, dst=attr_id, kind="has_attribute"))

    for ref in config.get("references", []):
        left, right, column = ref.get("left_table"), ref.get("right_table"), ref.get("column")
        for side in (left, right):
            _require(side in tables, f"references names unknown table {side!r}")
            _require(column in tables[side].column_names(),
                     f"references column {column!r} missing from {side!r}")
        edges.append(SchemaEdge(src=f"table:{left}", dst=f"table:{right}",
                                kind="references", column=column))

    # Unqualified SQL rendering needs non-reference column names to be
    # globally unambiguous.
    seen_columns: dict[str, str] = {}
    for name, info in tables.items():
        for col in info.column_names():
            if col in ref_columns:
                continue
            _require(col not in seen_columns,
                     f"column {col!r} appears in both {seen_columns.get(col)!r} "
                     f"and {name!r} without a references declaration")
            seen_columns[col] = name

    for syn in config.get("synonyms", []):
        word = syn.get("word")
        _require(word, "synonym missing word")
        kind = syn.get("target_kind")
        _require(kind in ("table", "attribute"), f"bad synonym target_kind {kind!r}")
        table = syn.get("target_table")
        _require(table in tables, f"synonym {word!r} targets unknown table {table!r}")
        if kind == "attribute":
            attr = syn.get("target_attribute")
            _require(attr in tables[table].column_names(),
                     f"synonym {word!r} targets unknown attribute {attr!r}")
            target_id = f"attr:{table}.{attr}"
        else:
            target_id = f"table:{table}"
        syn_id = f"syn:{word}"
        add_node(SchemaNode(id=syn_id, label=lemmatize(word.lower()), kind="synonym"))
        edges.append(SchemaEdge(src=syn_id, dst=target_id, kind="synonym_of"))

    for vic in config.get("value_index_columns", []):
        table, column = vic.get("table"), vic.get("column")
        _require(table in tables, f"value_index_columns names unknown table {table!r}")
        _require(column in tables[table].column_names(),
                 f"value_index_columns names unknown column {column!r}")
        _require(tables[table].column_type(column) == "text",
                 f"value index column {table}.{column} must be text")

    return SchemaGraph(nodes=nodes, edges=edges, tables=tables)
