import copy
import json

import pytest

from nlquery.errors import ConfigError, DisconnectedTables
from nlquery.schema_graph import GraphMatch, build_graph, load_config
from nlquery.service import AppConfig


@pytest.fixture(scope="module")
def config():
    return load_config(AppConfig().schema_path)


class TestBuildGraph:
    def test_fixture_node_counts(self, graph):
        kinds = [n.kind for n in graph.nodes.values()]
        assert kinds.count("table") == 2
        assert kinds.count("attribute") == 9
        assert kinds.count("synonym") >= 3

    def test_attribute_has_single_owner(self, graph):
        for node in graph.nodes.values():
            if node.kind != "attribute":
                continue
            owners = [e for e in graph.edges
                      if e.kind == "has_attribute" and e.dst == node.id]
            assert len(owners) == 1

    def test_synonym_has_single_target(self, graph):
        for node in graph.nodes.values():
            if node.kind != "synonym":
                continue
            targets = [e for e in graph.edges
                       if e.kind == "synonym_of" and e.src == node.id]
            assert len(targets) == 1

    def test_empty_config_rejected(self):
        with pytest.raises(ConfigError):
            build_graph({"tables": []})

    def test_bad_synonym_target_rejected(self, config):
        broken = copy.deepcopy(config)
        broken["synonyms"][0]["target_attribute"] = "no_such_column"
        with pytest.raises(ConfigError):
            build_graph(broken)

    def test_bad_reference_column_rejected(self, config):
        broken = copy.deepcopy(config)
        broken["references"][0]["column"] = "no_such_column"
        with pytest.raises(ConfigError):
            build_graph(broken)

    def test_ambiguous_shared_column_rejected(self, config):
        # same column name in two tables without a references declaration
        broken = copy.deepcopy(config)
        broken["tables"][1]["columns"].append({"name": "city", "type": "text"})
        with pytest.raises(ConfigError):
            build_graph(broken)

    def test_display_attribute_must_exist(self, config):
        broken = copy.deepcopy(config)
        broken["tables"][0]["display_attribute"] = "bogus"
        with pytest.raises(ConfigError):
            build_graph(broken)


class TestLookup:
    def test_table_label(self, graph):
        matches = graph.lookup("restaurant")
        assert [m.node.kind for m in matches] == ["table"]
        assert matches[0].node.id == "table:restaurants"

    def test_synonym_label(self, graph):
        matches = graph.lookup("rating")
        assert [m.node.kind for m in matches] == ["synonym"]

    def test_miss_returns_empty(self, graph):
        assert graph.lookup("zebra") == []

    def test_order_table_before_attribute_before_synonym(self, graph):
        # "cuisine" is both the cuisines table label and one of its columns
        kinds = [m.node.kind for m in graph.lookup("cuisine")]
        assert kinds == sorted(kinds, key=["table", "attribute", "synonym"].index)
        assert kinds[0] == "table"

    def test_lookup_deterministic(self, graph):
        assert graph.lookup("cuisine") == graph.lookup("cuisine")


class TestResolve:
    def test_synonym_rating_resolves_to_aggregate_rating(self, graph):
        [match] = graph.lookup("rating")
        resolved = graph.resolve(match)
        assert (resolved.kind, resolved.table, resolved.attribute) == \
            ("attribute", "restaurants", "aggregate_rating")

    def test_synonym_food_resolves_to_cuisine(self, graph):
        [match] = graph.lookup("food")
        resolved = graph.resolve(match)
        assert (resolved.kind, resolved.table, resolved.attribute) == \
            ("attribute", "cuisines", "cuisine")

    def test_table_resolves_to_itself(self, graph):
        [match] = graph.lookup("restaurant")
        resolved = graph.resolve(match)
        assert (resolved.kind, resolved.table, resolved.attribute) == \
            ("table", "restaurants", None)

    def test_attribute_resolution_includes_owner(self, graph):
        match = next(m for m in graph.lookup("city"))
        resolved = graph.resolve(match)
        assert (resolved.table, resolved.attribute) == ("restaurants", "city")


class TestJoinPath:
    def test_pair_with_reference(self, graph):
        assert graph.join_path(["restaurants", "cuisines"]) == \
            ["restaurants", "cuisines"]

    def test_singleton(self, graph):
        assert graph.join_path(["restaurants"]) == ["restaurants"]

    def test_unknown_table(self, graph):
        with pytest.raises(DisconnectedTables):
            graph.join_path(["restaurants", "orphan_table"])

    def test_adjacent_tables_share_columns(self, graph, database):
        # join_path output must satisfy the NATURAL JOIN precondition
        path = graph.join_path(["cuisines", "restaurants"])
        seen = set(database.get(path[0]).column_names())
        for name in path[1:]:
            cols = set(database.get(name).column_names())
            assert seen & cols
            seen |= cols

    def test_disconnected_pair(self, config):
        extended = copy.deepcopy(config)
        extended["tables"].append({
            "name": "orders", "label": "order", "display_attribute": "order_id",
            "columns": [{"name": "order_id", "type": "integer"}],
        })
        graph = build_graph(extended)
        with pytest.raises(DisconnectedTables):
            graph.join_path(["restaurants", "orders"])
