#include <doctest.h>

#include "dendrex/error.hpp"
#include "dendrex/json_io.hpp"
#include "fixtures.hpp"

#include <set>

using namespace dendrex;
using fixture::tree;

TEST_CASE("tree JSON round trip") {
    for (const auto& c : enumerate_trees(4)) {
        Json const j = to_json(c.tree);
        CHECK(tree_from_json(j) == c.tree);
        CHECK(tree_from_json(Json::parse(j.dump())) == c.tree);
    }
    Tree const t = fixture::branch_stump_tree();
    Json const j = to_json(t);
    CHECK(j["edge"] == "r");
    CHECK(j["node"]["children"].size() == 2);
    CHECK(tree_from_json(j) == t);
}

TEST_CASE("tree JSON literal") {
    Json const j = Json::parse(R"({"edge":"r","node":{"children":[{"edge":"a"},{"edge":"b","node":{"children":[]}}]}})");
    CHECK(tree_from_json(j) == tree("r[a,b[]]"));
}

TEST_CASE("malformed trees are located") {
    Json const j = Json::parse(R"({"edge":"r","node":{"children":[{"edge":"a"},{"name":"b"}]}})");
    try {
        tree_from_json(j);
        FAIL("accepted");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("$.node.children[1]") != std::string::npos);
    }
    CHECK_THROWS_AS(tree_from_json(Json::parse(R"({"edge":"r","node":{"children":[{"edge":"r"}]}})")),
                    ValidationError);
    CHECK_THROWS_AS(tree_from_json(Json::parse("[1,2]")), ValidationError);
}

TEST_CASE("morphism JSON round trip") {
    TreeMorphism const f = inner_face(tree("r[a[b,c],d]"), "a");
    TreeMorphism const g = morphism_from_json(to_json(f));
    CHECK(g == f);
    Json bad = to_json(f);
    bad["edge_map"]["b"] = "r";
    CHECK_THROWS_AS(morphism_from_json(bad), PreconditionError);
    bad["edge_map"].erase("b");
    CHECK_THROWS_AS(morphism_from_json(bad), ValidationError);
}

TEST_CASE("presheaf JSON round trip") {
    auto check = [](const std::shared_ptr<const FinDendroidalSet>& x) {
        auto y = presheaf_from_json(Json::parse(to_json(*x).dump()));
        CHECK(y->name() == x->name());
        CHECK(y->all_values() == x->all_values());
        CHECK(y->all_tables() == x->all_tables());
        CHECK(to_json(*y) == to_json(*x));
    };
    check(representable(linear_tree(2), 3));
    check(representable(tree("r[a,b]"), 3));
    check(boundary(tree("r[a[b],c]"), 4).sub);
    check(inner_horn(linear_tree(3), "e1", 4).sub);
    check(empty_sub(representable(linear_tree(1), 2)).sub);
}

TEST_CASE("presheaf JSON errors") {
    Json j = to_json(*representable(linear_tree(1), 2));
    Json unknown = j;
    unknown["values"]["nonsense"] = Json::array();
    CHECK_THROWS_AS(presheaf_from_json(unknown), ValidationError);

    Json missing = j;
    missing["actions"].erase(0);
    CHECK_THROWS_AS(presheaf_from_json(missing), ValidationError);

    // Swapping two images breaks the action somewhere.
    Json broken = j;
    bool changed = false;
    for (auto& a : broken["actions"]) {
        auto& table = a["table"];
        if (a["map_kind"] == "degeneracy" && table.size() >= 2) {
            auto it = table.begin();
            auto jt = std::next(it);
            if (*it != *jt) {
                std::swap(*it, *jt);
                changed = true;
                break;
            }
        }
    }
    REQUIRE(changed);
    CHECK_THROWS_AS(presheaf_from_json(broken), ValidationError);
}

TEST_CASE("graph JSON round trip") {
    DirectedGraph const g = linear_graph(3);
    DirectedGraph const h = graph_from_json(to_json(g));
    CHECK(h.vertices == g.vertices);
    REQUIRE(h.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(h.edges[i].name == g.edges[i].name);
        CHECK(h.edges[i].source == g.edges[i].source);
        CHECK(h.edges[i].range == g.edges[i].range);
    }
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["v"],"edges":[{"name":"e","source":"v","range":"w"}]})")),
                    ValidationError);
}

TEST_CASE("matrix JSON is exact") {
    Json const j = to_json(linear_graph_ck_matrices(2));
    CHECK(j["dimension"] == 3);
    CHECK(j["matrices"]["S_e1"][0][1] == Json::array({1, 1}));
    CHECK(j["matrices"]["S_e1"][1][0] == Json::array({0, 1}));
}

TEST_CASE("presentation JSON lists zero pairs by name") {
    Json const j = to_json(dendrex_presentation(fixture::branch_stump_tree()));
    CHECK(j["unit_sum"].is_array());
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& p : j["zero_pairs"]) {
        pairs.emplace(p[0], p[1]);
    }
    CHECK(pairs.count({"l1", "l2"}) + pairs.count({"l2", "l1"}) == 1);
    CHECK(pairs.count({"e1", "l2"}) + pairs.count({"l2", "e1"}) == 0);
    CHECK(pairs.count({"e1", "r"}) + pairs.count({"r", "e1"}) == 0);
}
