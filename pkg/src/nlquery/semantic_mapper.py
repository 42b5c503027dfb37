"""Map candidate phrases to database elements and compile the three lists
(tables, attributes, attribute=value pairs) that feed the SQL template.

Lookup order per phrase: value index first (surface form, then lemma form),
then the schema graph; synonym hits resolve to their targets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NothingMapped
from .schema_graph import SchemaGraph
from .text_pipeline import CandidatePhrase
from .value_index import ValueIndex, lookup_value


@dataclass(frozen=True)
class MappingResult:
    kind: str  # predicate | attribute | table | unmapped
    table: Optional[str] = None
    attribute: Optional[str] = None
    value: Optional[str] = None

    @classmethod
    def unmapped(cls):
        return cls(kind="unmapped")


@dataclass(frozen=True)
class MappingOutcome:
    candidate: CandidatePhrase
    result: MappingResult
    source: str  # value_index | graph_direct | graph_synonym | none
    consumed_by: Optional[CandidatePhrase] = None


@dataclass
class MappedElements:
    tables: list[str] = field(default_factory=list)
    attributes: list[tuple[str, str]] = field(default_factory=list)
    predicates: list[tuple[str, str, str]] = field(default_factory=list)
    # Tables that were named directly in the question (Table outcomes);
    # the builder projects their display attributes.
    entity_tables: list[str] = field(default_factory=list)


@dataclass
class MappingTrace:
    outcomes: list[MappingOutcome] = field(default_factory=list)


def map_candidate(phrase: CandidatePhrase, index: ValueIndex,
                  graph: SchemaGraph) -> MappingOutcome:
    """Resolve one phrase to a value predicate, attribute, or table."""
    entry = lookup_value(index, phrase.surfaces)
    if entry is None:
        entry = lookup_value(index, phrase.lemmas)
    if entry is not None:
        # Predicates carry the lowercase form; execution compares
        # text case-insensitively, so results are unaffected.
        result = MappingResult(kind="predicate", table=entry.table,
                               attribute=entry.attribute, value=entry.normalized)
        return MappingOutcome(candidate=phrase, result=result, source="value_index")

    matches = graph.lookup(phrase.lemma_text)
    if matches:
        match = matches[0]
        resolved = graph.resolve(match)
        source = "graph_synonym" if match.node.kind == "synonym" else "graph_direct"
        result = MappingResult(kind=resolved.kind, table=resolved.table,
                               attribute=resolved.attribute)
        return MappingOutcome(candidate=phrase, result=result, source=source)

    return MappingOutcome(candidate=phrase, result=MappingResult.unmapped(),
                          source="none")


def _contains(outer: CandidatePhrase, inner: CandidatePhrase) -> bool:
    return (outer.span[0] <= inner.span[0] and inner.span[1] <= outer.span[1]
            and outer is not inner)


def map_question(candidates: Sequence[CandidatePhrase], index: ValueIndex,
                 graph: SchemaGraph) -> tuple[MappedElements, MappingTrace]:
    """Map all candidates, longest phrases first, and compile the lists.

    A successfully mapped noun phrase consumes its constituent single-token
    candidates.  Raises NothingMapped when nothing maps at all.
    """
    phrases = sorted((c for c in candidates if c.kind == "noun_phrase"),
                     key=lambda c: -len(c.lemmas))
    singles = [c for c in candidates if c.kind != "noun_phrase"]

    outcome_by_candidate: dict[int, MappingOutcome] = {}
    consumed: dict[int, CandidatePhrase] = {}

    for phrase in phrases:
        if id(phrase) in consumed:
            continue
        outcome = map_candidate(phrase, index, graph)
        outcome_by_candidate[id(phrase)] = outcome
        if outcome.result.kind != "unmapped":
            for other in candidates:
                if id(other) not in consumed and _contains(phrase, other):
                    consumed[id(other)] = phrase

    for single in singles:
        if id(single) in consumed:
            continue
        outcome_by_candidate[id(single)] = map_candidate(single, index, graph)

    trace = MappingTrace()
    mapped = []
    for candidate in candidates:
        if id(candidate) in consumed:
            trace.outcomes.append(MappingOutcome(
                candidate=candidate, result=MappingResult.unmapped(),
                source="none", consumed_by=consumed[id(candidate)]))
            continue
        outcome = outcome_by_candidate[id(candidate)]
        trace.outcomes.append(outcome)
        if outcome.result.kind != "unmapped":
            mapped.append(outcome)

    if not mapped:
        raise NothingMapped("no candidate matched a table, attribute, or value")

    elements = MappedElements()
    for outcome in mapped:
        r = outcome.result
        if r.table not in elements.tables:
            elements.tables.append(r.table)
        if r.kind == "table" and r.table not in elements.entity_tables:
            elements.entity_tables.append(r.table)
        elif r.kind == "attribute":
            pair = (r.table, r.attribute)
            if pair not in elements.attributes:
                elements.attributes.append(pair)
        elif r.kind == "predicate":
            triple = (r.table, r.attribute, r.value)
            if triple not in elements.predicates:
                elements.predicates.append(triple)

    # Attributes already constrained by a predicate stay out of the
    # projection list.
    predicate_attrs = {(t, a) for t, a, _ in elements.predicates}
    elements.attributes = [pair for pair in elements.attributes
                           if pair not in predicate_attrs]
    return elements, trace
