#include <doctest.h>

#include "cli.hpp"
#include "dendrex/json_io.hpp"
#include "fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

using namespace dendrex;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int const status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

struct Scratch {
    fs::path dir;

    Scratch() : dir(fs::temp_directory_path() / ("dendrex_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir / name, std::ios::binary) << text;
        return (dir / name).string();
    }
    std::string write(const std::string& name, const Json& j) const { return write(name, j.dump()); }
};

}  // namespace

TEST_CASE("branch-and-stump tree presentation") {
    Scratch s;
    std::string const file = s.write("bst.json", to_json(fixture::branch_stump_tree()));
    Result const r = run({"dendrex", "show", file});
    REQUIRE(r.status == 0);
    Json const j = Json::parse(r.out);
    std::set<std::set<std::string>> pairs;
    for (const auto& p : j["zero_pairs"]) {
        pairs.insert({p[0].get<std::string>(), p[1].get<std::string>()});
    }
    // Exactly the incomparable pairs.
    std::set<std::set<std::string>> const expected{{"l1", "l2"}, {"e2", "l1"}, {"e2", "l2"}, {"e1", "e2"}};
    CHECK(pairs == expected);
    CHECK(pairs.count({"e1", "r"}) == 0);
    CHECK(pairs.count({"e1", "l2"}) == 0);

    Result const ab = run({"dendrex", "show", file, "--abelian"});
    CHECK(Json::parse(ab.out)["commutative"] == true);
}

TEST_CASE("exit statuses") {
    Scratch s;
    CHECK(run({}).status == cli::usage_error);
    CHECK(run({"frobnicate"}).status == cli::usage_error);
    CHECK(run({"trees", "enum"}).status == cli::usage_error);
    CHECK(run({"dendrex", "show", (s.dir / "missing.json").string()}).status == cli::usage_error);
    CHECK(run({"verify", "identities", "--max-edges", "5"}).status == cli::pass);
    CHECK(run({"verify", "identities", "--max-edges", "40"}).status == cli::usage_error);
    CHECK(run({"--format", "dot", "trees", "enum", "--max-edges", "2"}).status == cli::usage_error);
    CHECK(run({"--help"}).status == cli::pass);
}

TEST_CASE("malformed JSON reports the byte") {
    Scratch s;
    std::string const file = s.write("bad.json", std::string("{\"edge\": \"r\", \"node\": {\"children\": [}}"));
    Result const r = run({"dendrex", "show", file});
    CHECK(r.status == cli::usage_error);
    CHECK(r.err.find("at byte 37") != std::string::npos);

    std::string const shape = s.write("shape.json", std::string(R"({"edge": "r", "node": {"children": [{}]}})"));
    Result const v = run({"tree", "faces", shape});
    CHECK(v.status == cli::usage_error);
    CHECK(v.err.find("$.node.children[0]") != std::string::npos);
}

TEST_CASE("trees and homs") {
    Result const r = run({"trees", "enum", "--max-edges", "3"});
    REQUIRE(r.status == 0);
    Json const j = Json::parse(r.out);
    CHECK(j["count"] == enumerate_trees(3).size());

    Scratch s;
    std::string const l1 = s.write("l1.json", to_json(linear_tree(1)));
    std::string const l2 = s.write("l2.json", to_json(linear_tree(2)));
    Result const h = run({"omega", "hom", l1, l2});
    REQUIRE(h.status == 0);
    // Monotone maps [1] -> [2].
    CHECK(Json::parse(h.out)["count"] == 6);

    std::string const c2 = s.write("c2.json", to_json(fixture::tree("r[a,b]")));
    Result const a = run({"tree", "auts", c2});
    CHECK(Json::parse(a.out)["count"] == 2);
    Result const f = run({"tree", "faces", c2});
    CHECK(Json::parse(f.out).size() == 3);
}

TEST_CASE("dendrex map") {
    Scratch s;
    Tree const t = linear_tree(2);
    TreeMorphism const d = inner_face(t, "e1");
    std::string const src = s.write("src.json", to_json(d.source()));
    std::string const tgt = s.write("tgt.json", to_json(t));
    std::string const mor = s.write("m.json", to_json(d));
    Result const r = run({"dendrex", "map", src, tgt, "--morphism", mor});
    REQUIRE(r.status == 0);
    Json const j = Json::parse(r.out);
    CHECK(j["verification"]["ok"] == true);
    CHECK(j["hom"]["images"]["e1"] == Json::array());

    Json bad = to_json(d);
    bad["edge_map"]["e0"] = "e2";
    bad["edge_map"]["e2"] = "e0";
    Result const b = run({"dendrex", "map", src, tgt, "--morphism", s.write("bad.json", bad)});
    CHECK(b.status == cli::usage_error);
}

TEST_CASE("presheaf to drawing pipeline") {
    Scratch s;
    std::string const tree = s.write("t.json", to_json(linear_tree(2)));
    Result const b = run({"presheaf", "boundary", tree, "--bound", "3"});
    REQUIRE(b.status == 0);
    std::string const px = s.write("b.json", b.out);
    Result const d = run({"draw", px, "--dot", (s.dir / "b.dot").string()});
    REQUIRE(d.status == 0);
    Json const j = Json::parse(d.out);
    CHECK(j["verification"]["ok"] == true);
    CHECK(fs::exists(s.dir / "b.dot"));

    Result const dot = run({"--format", "dot", "draw", px, "--no-degenerate"});
    CHECK(dot.status == 0);
    CHECK(dot.out.rfind("digraph drawing {", 0) == 0);

    CHECK(run({"presheaf", "horn", tree, "--bound", "3", "--edge", "e1"}).status == 0);
    CHECK(run({"presheaf", "horn", tree, "--bound", "3", "--edge", "e2"}).status == cli::usage_error);
    CHECK(run({"presheaf", "representable", tree, "--bound", "1"}).status == cli::usage_error);

    Json broken = Json::parse(b.out);
    broken["values"]["bogus"] = Json::array();
    CHECK(run({"draw", s.write("broken.json", broken)}).status == cli::usage_error);
}

TEST_CASE("graph commands") {
    Result const r = run({"graph", "linear", "2", "--matrices"});
    REQUIRE(r.status == 0);
    Json const j = Json::parse(r.out);
    CHECK(j["matrices"]["dimension"] == 3);
    CHECK(j["matrices"]["matrices"]["S_e2"][1][2] == Json::array({1, 1}));
    CHECK(j["verification"]["ok"] == true);

    Scratch s;
    Json const o2{{"vertices", {"v"}},
                  {"edges", {{{"name", "e1"}, {"source", "v"}, {"range", "v"}},
                             {{"name", "e2"}, {"source", "v"}, {"range", "v"}}}}};
    Result const ck = run({"graph", "ck", s.write("o2.json", o2)});
    REQUIRE(ck.status == 0);
    CHECK(Json::parse(ck.out)["relations"].size() == 4);
}

TEST_CASE("seeded checks") {
    Result const r = run({"verify", "sm", "4"});
    REQUIRE(r.status == 0);
    Json const j = Json::parse(r.out);
    CHECK(j["seed"] == cli::default_seed);
    CHECK(j["simplex"]["passed"] == 100);
    CHECK(run({"verify", "sm", "3", "--seed", "11", "--points", "5"}).status == 0);
    CHECK(run({"verify", "functoriality", "--max-edges", "3"}).status == 0);
}

TEST_CASE("repeated commands are byte-identical") {
    Scratch s;
    std::string const tree = s.write("t.json", to_json(fixture::tree("r[a[b],c]")));
    std::string const rep = s.write("rep.json", run({"presheaf", "representable", tree, "--bound", "4"}).out);
    std::vector<std::vector<std::string>> const commands{
        {"trees", "enum", "--max-edges", "4"},
        {"tree", "faces", tree},
        {"tree", "degeneracies", tree},
        {"tree", "auts", tree},
        {"omega", "hom", tree, tree},
        {"dendrex", "show", tree},
        {"presheaf", "boundary", tree, "--bound", "4"},
        {"draw", rep},
        {"--format", "dot", "draw", rep},
        {"graph", "linear", "3", "--matrices"},
        {"verify", "identities", "--max-edges", "4"},
        {"verify", "functoriality", "--max-edges", "2"},
        {"verify", "sm", "3", "--seed", "5"},
    };
    for (const auto& c : commands) {
        Result const a = run(c);
        Result const b = run(c);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
