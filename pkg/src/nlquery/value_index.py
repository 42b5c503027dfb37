"""Associative lookup from a normalized data value to the column holding it.

Keys are lowercase, single-space-separated, and deliberately NOT
lemmatized: values are matched as written in the data, so a cuisine
"dishes" never collapses with "dish".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConfigError
from .mini_rdb import Database

DEFAULT_MAX_KEYS = 1_000_000


@dataclass(frozen=True)
class ValueEntry:
    canonical: str  # value as stored in the data
    normalized: str  # lowercase, single-spaced key
    attribute: str
    table: str


@dataclass
class ValueIndex:
    entries: dict[str, ValueEntry] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


def normalize_value(text: str) -> str:
    return " ".join(text.lower().split())


def build_value_index(db: Database, value_index_columns,
                      max_keys: int = DEFAULT_MAX_KEYS) -> ValueIndex:
    """Index every distinct normalized value of the configured text columns.

    On a key collision across columns the earlier column in config order
    wins; the collision is recorded as a warning.
    """
    index = ValueIndex()
    for spec in value_index_columns:
        table_name, column = spec["table"], spec["column"]
        table = db.get(table_name)
        names = table.column_names()
        if column not in names:
            raise ConfigError(f"value index column {table_name}.{column} not found")
        col_pos = names.index(column)
        for row in table.rows:
            canonical = str(row[col_pos])
            key = normalize_value(canonical)
            if not key:
                continue
            existing = index.entries.get(key)
            if existing is not None:
                if (existing.table, existing.attribute) != (table_name, column):
                    index.warnings.append(
                        f"value {key!r} in {table_name}.{column} shadowed by "
                        f"{existing.table}.{existing.attribute}")
                continue
            if len(index.entries) >= max_keys:
                raise ConfigError(f"value index exceeds {max_keys} keys")
            index.entries[key] = ValueEntry(canonical=canonical, normalized=key,
                                            attribute=column, table=table_name)
    return index


def lookup_value(index: ValueIndex, phrase: Sequence[str]) -> Optional[ValueEntry]:
    """Look up a word sequence as a single normalized value."""
    if not phrase:
        return None
    return index.entries.get(normalize_value(" ".join(phrase)))
