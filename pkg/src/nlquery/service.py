"""End-to-end orchestration: question in, SQL plus result rows out.

Engine state (graph, value index, database, lexicon) is built once at
startup and shared immutably; answering a question is a pure function of
that state, so concurrent requests need no synchronization.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import mini_rdb, schema_graph, semantic_mapper, sql_builder, text_pipeline
from .errors import (
    ConfigError,
    EmptyQuestion,
    NlqueryError,
    NoProjection,
    NothingMapped,
)
from .mini_rdb import Database
from .schema_graph import SchemaGraph
from .semantic_mapper import MappingTrace
from .value_index import ValueIndex, build_value_index

log = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"


@dataclass
class AppConfig:
    schema_path: Path = DATA_DIR / "schema.json"
    data_dir: Path = DATA_DIR
    lexicon_path: Path = DATA_DIR / "lexicon.txt"
    port: int = 8080
    trace: bool = False


@dataclass
class QueryResponse:
    question: str
    status: str  # answered | cannot_answer | error
    sql: Optional[str] = None
    columns: Optional[list[str]] = None
    rows: Optional[list[list]] = None
    trace: Optional[list[dict]] = None
    message: Optional[str] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass
class Engine:
    graph: SchemaGraph
    index: ValueIndex
    db: Database
    lexicon: dict[str, str]


def build_engine(config: AppConfig) -> Engine:
    """Load and validate everything the pipeline needs; fails fast."""
    try:
        schema_cfg = schema_graph.load_config(config.schema_path)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read schema config: {exc}") from exc
    graph = schema_graph.build_graph(schema_cfg)

    db = Database()
    for name, info in graph.tables.items():
        csv_path = Path(config.data_dir) / f"{name}.csv"
        db.add(mini_rdb.load_csv_file(csv_path, name, info.columns))

    index = build_value_index(db, schema_cfg.get("value_index_columns", []))
    for warning in index.warnings:
        log.warning("value index: %s", warning)

    try:
        lexicon = text_pipeline.load_lexicon(config.lexicon_path)
    except OSError as exc:
        raise ConfigError(f"cannot read lexicon: {exc}") from exc
    return Engine(graph=graph, index=index, db=db, lexicon=lexicon)


def _render_trace(trace: MappingTrace) -> list[dict]:
    rendered = []
    for outcome in trace.outcomes:
        entry = {
            "phrase": outcome.candidate.lemma_text,
            "kind": outcome.candidate.kind,
            "mapped_to": outcome.result.kind,
            "source": outcome.source,
        }
        if outcome.result.table:
            entry["table"] = outcome.result.table
        if outcome.result.attribute:
            entry["attribute"] = outcome.result.attribute
        if outcome.result.value is not None:
            entry["value"] = outcome.result.value
        if outcome.consumed_by is not None:
            entry["consumed_by"] = outcome.consumed_by.lemma_text
        rendered.append(entry)
    return rendered


def answer_question(text: str, engine: Engine) -> QueryResponse:
    """Run the full pipeline; every failure is folded into the response."""
    trace_json = None
    try:
        candidates = text_pipeline.analyze(text, engine.lexicon)
        try:
            elements, trace = semantic_mapper.map_question(
                candidates, engine.index, engine.graph)
        except NothingMapped as exc:
            empty = MappingTrace(outcomes=[
                semantic_mapper.map_candidate(c, engine.index, engine.graph)
                for c in candidates])
            return QueryResponse(question=text, status="cannot_answer",
                                 message=str(exc), trace=_render_trace(empty))
        trace_json = _render_trace(trace)
        query = sql_builder.build_query(elements, engine.graph)
        sql = mini_rdb.render_sql(query)
        result = mini_rdb.execute(query, engine.db)
    except (NothingMapped, NoProjection) as exc:
        return QueryResponse(question=text, status="cannot_answer",
                             message=str(exc), trace=trace_json)
    except (EmptyQuestion, ValueError) as exc:
        return QueryResponse(question=text, status="error", message=str(exc))
    except NlqueryError as exc:
        log.warning("pipeline error for %r: %s", text[:80], exc)
        return QueryResponse(question=text, status="error", message=str(exc))
    except Exception:
        log.exception("unexpected failure for %r", text[:80])
        return QueryResponse(question=text, status="error",
                             message="internal error")
    return QueryResponse(question=text, status="answered", sql=sql,
                         columns=result.columns,
                         rows=[list(r) for r in result.rows],
                         trace=trace_json)


def schema_inventory(engine: Engine) -> dict:
    """Table/column/synonym listing for UI display."""
    tables = []
    for name, info in sorted(engine.graph.tables.items()):
        tables.append({
            "name": name,
            "display_attribute": info.display_attribute,
            "columns": [{"name": c, "type": t} for c, t in info.columns],
        })
    synonyms = []
    for node in engine.graph.nodes.values():
        if node.kind != "synonym":
            continue
        resolved = engine.graph.resolve(schema_graph.GraphMatch(node=node))
        target = resolved.table if resolved.attribute is None else \
            f"{resolved.table}.{resolved.attribute}"
        synonyms.append({"word": node.label, "target": target})
    synonyms.sort(key=lambda s: s["word"])
    return {"tables": tables, "synonyms": synonyms}
