import pytest

from nlquery.errors import NothingMapped
from nlquery.semantic_mapper import map_candidate, map_question
from nlquery.text_pipeline import CandidatePhrase, analyze


def phrase(words, kind="noun", span=(0, 1)):
    return CandidatePhrase(lemmas=tuple(words), surfaces=tuple(words),
                           kind=kind, span=span)


class TestMapCandidate:
    def test_table_via_graph(self, value_index, graph):
        outcome = map_candidate(phrase(["restaurant"]), value_index, graph)
        assert outcome.result.kind == "table"
        assert outcome.result.table == "restaurants"
        assert outcome.source == "graph_direct"

    def test_value_via_index(self, value_index, graph):
        outcome = map_candidate(phrase(["italian"], kind="adjective"),
                                value_index, graph)
        assert outcome.result.kind == "predicate"
        assert (outcome.result.table, outcome.result.attribute,
                outcome.result.value) == ("cuisines", "cuisine", "italian")
        assert outcome.source == "value_index"

    def test_synonym_resolution(self, value_index, graph):
        outcome = map_candidate(phrase(["rating"]), value_index, graph)
        assert outcome.result.kind == "attribute"
        assert (outcome.result.table, outcome.result.attribute) == \
            ("restaurants", "aggregate_rating")
        assert outcome.source == "graph_synonym"

    def test_value_index_tried_before_graph(self, value_index, graph):
        # "buffet" is a data value even though it looks like a plain noun
        outcome = map_candidate(phrase(["buffet"]), value_index, graph)
        assert outcome.source == "value_index"

    def test_unmapped(self, value_index, graph):
        outcome = map_candidate(phrase(["delicious"], kind="adjective"),
                                value_index, graph)
        assert outcome.result.kind == "unmapped"
        assert outcome.source == "none"


class TestMapQuestion:
    def _candidates(self, text, lexicon):
        return analyze(text, lexicon)

    def test_q1_lists(self, engine):
        cands = self._candidates("what are the italian restaurants?", engine.lexicon)
        elements, _ = map_question(cands, engine.index, engine.graph)
        assert set(elements.tables) == {"restaurants", "cuisines"}
        assert elements.attributes == []
        assert elements.predicates == [("cuisines", "cuisine", "italian")]

    def test_q3_lists(self, engine):
        cands = self._candidates("which restaurants have an excellent rating?",
                                 engine.lexicon)
        elements, _ = map_question(cands, engine.index, engine.graph)
        assert elements.tables == ["restaurants"]
        assert elements.attributes == [("restaurants", "aggregate_rating")]
        assert elements.predicates == [("restaurants", "rating_text", "excellent")]

    def test_nothing_mapped(self, engine):
        cands = self._candidates("hello world", engine.lexicon)
        with pytest.raises(NothingMapped):
            map_question(cands, engine.index, engine.graph)

    def test_noun_phrase_consumes_constituents(self, engine):
        cands = self._candidates(
            "What are the restaurants and cities in India that serve fast food",
            engine.lexicon)
        elements, trace = map_question(cands, engine.index, engine.graph)
        # "fast food" maps as a value; "food" must not add a separate mapping
        # (a bare "food" would map to the cuisine attribute via synonym)
        assert ("cuisines", "cuisine", "fast food") in elements.predicates
        assert ("cuisines", "cuisine") not in elements.attributes
        consumed = [o for o in trace.outcomes if o.consumed_by is not None]
        assert {o.candidate.lemma_text for o in consumed} == {"fast", "food"}

    def test_trace_covers_every_candidate(self, engine):
        cands = self._candidates("what restaurants in mumbai have chinese food?",
                                 engine.lexicon)
        _, trace = map_question(cands, engine.index, engine.graph)
        assert len(trace.outcomes) == len(cands)
        assert [o.candidate for o in trace.outcomes] == list(cands)

    def test_predicate_attribute_not_projected(self, engine):
        # "food" maps to the cuisine attribute, but cuisine is already
        # constrained by the 'chinese' predicate
        cands = self._candidates("what restaurants in mumbai have chinese food?",
                                 engine.lexicon)
        elements, _ = map_question(cands, engine.index, engine.graph)
        assert ("cuisines", "cuisine") not in elements.attributes
        assert ("cuisines", "cuisine", "chinese") in elements.predicates

    def test_table_closure_invariant(self, engine):
        for text in ["what are the italian restaurants?",
                     "which restaurants have an excellent rating?",
                     "what restaurants in mumbai have chinese food?"]:
            cands = self._candidates(text, engine.lexicon)
            elements, _ = map_question(cands, engine.index, engine.graph)
            for table, _attr in elements.attributes:
                assert table in elements.tables
            for table, _attr, _value in elements.predicates:
                assert table in elements.tables

    def test_duplicate_predicates_collapse(self, engine):
        cands = self._candidates("italian italian restaurants", engine.lexicon)
        elements, trace = map_question(cands, engine.index, engine.graph)
        assert elements.predicates == [("cuisines", "cuisine", "italian")]
        assert len(trace.outcomes) == len(cands)

    def test_conflicting_predicates_both_kept(self, engine):
        cands = self._candidates("italian chinese restaurants", engine.lexicon)
        elements, _ = map_question(cands, engine.index, engine.graph)
        values = {v for _t, _a, v in elements.predicates}
        assert values == {"italian", "chinese"}

    def test_determinism(self, engine):
        cands = self._candidates("which restaurants serve seafood?", engine.lexicon)
        first, _ = map_question(cands, engine.index, engine.graph)
        second, _ = map_question(cands, engine.index, engine.graph)
        assert first == second
