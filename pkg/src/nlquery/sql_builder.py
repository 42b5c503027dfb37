"""Instantiate the SQL template from mapped elements.

The produced SqlQuery AST uses unqualified column names, matching the
rendered dialect (NATURAL JOIN semantics plus the schema-level ban on
ambiguous non-reference columns make qualification unnecessary).
"""

from __future__ import annotations

from .errors import NoProjection
from .mini_rdb import SqlQuery, render_sql
from .schema_graph import SchemaGraph
from .semantic_mapper import MappedElements


def build_query(elements: MappedElements, graph: SchemaGraph) -> SqlQuery:
    """Fill the template: DISTINCT projection, NATURAL JOIN chain,
    conjunctive equality predicates.

    Projection rules:
    - explicit mapped attributes are always projected;
    - tables named directly in the question contribute their display
      attribute;
    - if neither exists, every joined table's display attribute is used.
    Projection order is lexicographic by attribute name.
    """
    if not elements.tables:
        raise NoProjection("no tables were mapped")
    tables = graph.join_path(elements.tables)

    projection = [attr for _table, attr in elements.attributes]
    display_tables = elements.entity_tables or (
        [] if projection else tables)
    for table in display_tables:
        attr = graph.tables[table].display_attribute
        if attr not in projection:
            projection.append(attr)
    if not projection:
        raise NoProjection("no attribute available for the SELECT list")
    projection.sort()

    predicates = tuple((attr, value) for _table, attr, value in elements.predicates)
    return SqlQuery(projection=tuple(projection), tables=tuple(tables),
                    predicates=predicates)


__all__ = ["build_query", "render_sql", "SqlQuery"]
