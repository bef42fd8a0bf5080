#include "dendrex/json_io.hpp"

#include "dendrex/error.hpp"

#include <algorithm>
#include <map>

namespace dendrex {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw ValidationError("invalid JSON at " + path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) {
        bad(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        bad(path, std::string("missing \"") + key + "\"");
    }
    return *it;
}

std::string string_at(const Json& j, const std::string& path) {
    if (!j.is_string()) {
        bad(path, "expected a string");
    }
    return j.get<std::string>();
}

TreeNode node_from_json(const Json& j, const std::string& path) {
    TreeNode n{string_at(member(j, "edge", path), path + ".edge"), std::nullopt};
    auto it = j.find("node");
    if (it == j.end() || it->is_null()) {
        return n;
    }
    const Json& kids = member(*it, "children", path + ".node");
    if (!kids.is_array()) {
        bad(path + ".node.children", "expected an array");
    }
    n.inputs.emplace();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        n.inputs->push_back(node_from_json(kids[i], path + ".node.children[" + std::to_string(i) + "]"));
    }
    return n;
}

Json node_to_json(const Tree& t, EdgeId e) {
    Json j{{"edge", t.name(e)}};
    if (t.has_vertex(e)) {
        Json kids = Json::array();
        for (EdgeId c : t.inputs(e)) {
            kids.push_back(node_to_json(t, c));
        }
        j["node"] = {{"children", kids}};
    }
    return j;
}

Json edge_map_json(const Tree& s, const Tree& t, const EdgeMap& map) {
    Json j = Json::object();
    for (EdgeId e = 0; e < map.size(); ++e) {
        j[s.name(e)] = t.name(map[e]);
    }
    return j;
}

EdgeMap edge_map_from_json(const Json& j, const Tree& s, const Tree& t, const std::string& path) {
    if (!j.is_object()) {
        bad(path, "expected an object");
    }
    EdgeMap map(s.edge_count());
    std::vector<bool> seen(s.edge_count(), false);
    for (const auto& [key, value] : j.items()) {
        auto e = s.find(key);
        if (!e) {
            bad(path, "unknown source edge '" + key + "'");
        }
        auto f = t.find(string_at(value, path + "." + key));
        if (!f) {
            bad(path + "." + key, "unknown target edge");
        }
        map[*e] = *f;
        seen[*e] = true;
    }
    for (EdgeId e = 0; e < seen.size(); ++e) {
        if (!seen[e]) {
            bad(path, "no image for edge '" + s.name(e) + "'");
        }
    }
    return map;
}

Json string_list(const std::vector<std::string>& v) { return Json(v); }

}  // namespace

Json to_json(const Tree& t) { return node_to_json(t, t.root()); }

Tree tree_from_json(const Json& j) { return Tree::from_node(node_from_json(j, "$")); }

Json to_json(const TreeMorphism& m) {
    return {{"source", to_json(m.source())},
            {"target", to_json(m.target())},
            {"edge_map", edge_map_json(m.source(), m.target(), m.edge_map())}};
}

TreeMorphism morphism_from_json(const Json& j) {
    Tree const s = tree_from_json(member(j, "source", "$"));
    Tree const t = tree_from_json(member(j, "target", "$"));
    return morphism_from_json(j, s, t);
}

TreeMorphism morphism_from_json(const Json& j, const Tree& source, const Tree& target) {
    EdgeMap map = edge_map_from_json(member(j, "edge_map", "$"), source, target, "$.edge_map");
    return TreeMorphism::from_edge_map(source, target, std::move(map));
}

Json to_json(const NormalForm& nf) {
    auto steps = [](const std::vector<ElementaryMap>& v) {
        Json out = Json::array();
        for (const auto& s : v) {
            out.push_back({{"kind", to_string(s.kind)}, {"site", s.site}});
        }
        return out;
    };
    const TreeMorphism& iso = nf.isomorphism;
    return {{"degeneracies", steps(nf.degeneracies)},
            {"isomorphism", edge_map_json(iso.source(), iso.target(), iso.edge_map())},
            {"faces", steps(nf.faces)}};
}

Json to_json(const StarPresentation& p) {
    Json j;
    j["generators"] = p.generators;
    j["positive"] = p.positive;
    j["norm_bound"] = p.norm_bound;
    Json units = Json::array();
    for (const auto& sum : p.unit_sums) {
        Json names = Json::array();
        for (std::size_t i : sum) {
            names.push_back(p.generators[i]);
        }
        units.push_back(names);
    }
    // A single unit relation is written flat.
    j["unit_sum"] = units.size() == 1 ? units[0] : units;
    Json pairs = Json::array();
    for (auto [a, b] : p.zero_pairs) {
        pairs.push_back({p.generators[a], p.generators[b]});
    }
    j["zero_pairs"] = pairs;
    j["commutative"] = p.commutative;
    j["origin"] = p.origin;
    j["relations"] = p.relation_strings();
    return j;
}

Json to_json(const StarHom& h) {
    Json images = Json::object();
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        Json img = Json::array();
        for (std::size_t k : h.images[i]) {
            img.push_back(h.target->generators[k]);
        }
        images[h.source->generators[i]] = img;
    }
    return {{"source", h.source->origin}, {"target", h.target->origin}, {"label", h.label}, {"images", images}};
}

Json to_json(const HomReport& r) {
    Json j{{"ok", r.ok}};
    if (!r.ok) {
        j["relation"] = r.relation;
        j["witness"] = r.witness;
    }
    return j;
}

Json to_json(const FinDendroidalSet& x) {
    const OmegaTruncation& omega = x.omega();
    Json values = Json::object();
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        values[omega.code(o)] = x.values(o);
    }
    Json actions = Json::array();
    for (std::size_t g = 0; g < omega.generators().size(); ++g) {
        const auto& gen = omega.generators()[g];
        if (x.values(gen.ref.target).empty()) {
            continue;
        }
        const TreeMorphism& m = omega.morphism(gen.ref);
        Json table = Json::object();
        for (std::size_t y = 0; y < x.table(g).size(); ++y) {
            table[x.values(gen.ref.target)[y]] = x.values(gen.ref.source)[x.table(g)[y]];
        }
        actions.push_back({{"from", omega.code(gen.ref.source)},
                           {"to", omega.code(gen.ref.target)},
                           {"map_kind", to_string(gen.kind)},
                           {"site", gen.site},
                           {"edge_map", edge_map_json(m.source(), m.target(), m.edge_map())},
                           {"table", table}});
    }
    return {{"bound", x.bound()}, {"name", x.name()}, {"values", values}, {"actions", actions}};
}

std::shared_ptr<const FinDendroidalSet> presheaf_from_json(const Json& j) {
    const Json& b = member(j, "bound", "$");
    if (!b.is_number_unsigned()) {
        bad("$.bound", "expected a nonnegative integer");
    }
    auto omega = OmegaTruncation::get(b.get<std::size_t>());
    std::vector<std::vector<std::string>> values(omega->object_count());
    const Json& vj = member(j, "values", "$");
    if (!vj.is_object()) {
        bad("$.values", "expected an object");
    }
    for (const auto& [code, ids] : vj.items()) {
        auto o = omega->find_object(code);
        if (!o) {
            bad("$.values", "'" + code + "' is not a tree code within the bound");
        }
        if (!ids.is_array()) {
            bad("$.values." + code, "expected an array");
        }
        for (const auto& id : ids) {
            values[*o].push_back(string_at(id, "$.values." + code));
        }
    }
    std::vector<std::vector<std::size_t>> tables(omega->generators().size());
    std::vector<bool> given(tables.size(), false);
    const Json& aj = member(j, "actions", "$");
    if (!aj.is_array()) {
        bad("$.actions", "expected an array");
    }
    for (std::size_t i = 0; i < aj.size(); ++i) {
        std::string const path = "$.actions[" + std::to_string(i) + "]";
        const Json& a = aj[i];
        auto s = omega->find_object(string_at(member(a, "from", path), path + ".from"));
        auto t = omega->find_object(string_at(member(a, "to", path), path + ".to"));
        if (!s || !t) {
            bad(path, "unknown tree code");
        }
        EdgeMap const map = edge_map_from_json(member(a, "edge_map", path), omega->object(*s), omega->object(*t),
                                               path + ".edge_map");
        auto ref = omega->find(*s, *t, map);
        auto g = ref ? omega->generator_index(*ref) : std::nullopt;
        if (!g) {
            bad(path, "not a generating arrow");
        }
        if (given[*g]) {
            bad(path, "duplicate action");
        }
        const Json& table = member(a, "table", path);
        if (!table.is_object()) {
            bad(path + ".table", "expected an object");
        }
        tables[*g].assign(values[*t].size(), 0);
        std::vector<bool> covered(values[*t].size(), false);
        for (const auto& [from, to] : table.items()) {
            auto it = std::find(values[*t].begin(), values[*t].end(), from);
            auto jt = std::find(values[*s].begin(), values[*s].end(), string_at(to, path + ".table"));
            if (it == values[*t].end() || jt == values[*s].end()) {
                bad(path + ".table", "unknown element");
            }
            auto const x = static_cast<std::size_t>(it - values[*t].begin());
            tables[*g][x] = static_cast<std::size_t>(jt - values[*s].begin());
            covered[x] = true;
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
            bad(path + ".table", "does not cover every element");
        }
        given[*g] = true;
    }
    for (std::size_t g = 0; g < tables.size(); ++g) {
        MorphismRef const r = omega->generators()[g].ref;
        if (!given[g] && !values[r.target].empty()) {
            bad("$.actions", "no action for the generator " + omega->code(r.source) + " -> " + omega->code(r.target) +
                                 " (" + std::string(to_string(omega->generators()[g].kind)) + " " +
                                 omega->generators()[g].site + ")");
        }
    }
    std::string name = j.contains("name") ? string_at(j["name"], "$.name") : std::string("presheaf");
    return FinDendroidalSet::from_tables(std::move(omega), std::move(values), std::move(tables), std::move(name));
}

Json to_json(const Drawing& d) {
    const OmegaTruncation& omega = d.index.presheaf->omega();
    Json presentations = Json::object();
    Json nodes = Json::array();
    for (std::size_t i = 0; i < d.index.objects.size(); ++i) {
        const auto& o = d.index.objects[i];
        std::string const& code = omega.code(o.tree);
        if (!presentations.contains(code)) {
            presentations[code] = to_json(*d.nodes[i]);
        }
        nodes.push_back({{"id", i},
                         {"tree", code},
                         {"element", d.index.presheaf->values(o.tree)[o.element]},
                         {"degenerate", d.index.presheaf->is_degenerate(o.tree, o.element)}});
    }
    Json arrows = Json::array();
    for (std::size_t i = 0; i < d.arrows.size(); ++i) {
        const auto& a = d.index.arrows[i];
        const TreeMorphism& m = omega.morphism(a.ref);
        Json images = to_json(d.arrows[i])["images"];
        arrows.push_back({{"source", a.to},
                          {"target", a.from},
                          {"kind", d.kinds[i]},
                          {"tree_map", edge_map_json(m.source(), m.target(), m.edge_map())},
                          {"images", images}});
    }
    return {{"presheaf", d.index.presheaf->name()},
            {"include_degenerate", d.index.include_degenerate},
            {"metadata",
             {{"diagram", "the colimit of this diagram is the drawing; it is not evaluated"},
              {"arrows", "each arrow is the hom induced from the presentation at source to the one at target"}}},
            {"presentations", presentations},
            {"nodes", nodes},
            {"arrows", arrows}};
}

Json to_json(const DrawingReport& r) {
    Json j{{"ok", r.ok}, {"arrows_checked", r.arrows_checked}, {"squares_checked", r.squares_checked}};
    if (!r.ok) {
        j["failure"] = r.message;
    }
    return j;
}

Json to_json(const DirectedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"name", e.name}, {"source", g.vertices[e.source]}, {"range", g.vertices[e.range]}});
    }
    return {{"vertices", g.vertices}, {"edges", edges}};
}

DirectedGraph graph_from_json(const Json& j) {
    DirectedGraph g;
    const Json& vs = member(j, "vertices", "$");
    if (!vs.is_array()) {
        bad("$.vertices", "expected an array");
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        g.vertices.push_back(string_at(vs[i], "$.vertices[" + std::to_string(i) + "]"));
        index.emplace(g.vertices.back(), i);
    }
    const Json& es = member(j, "edges", "$");
    if (!es.is_array()) {
        bad("$.edges", "expected an array");
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::string const path = "$.edges[" + std::to_string(i) + "]";
        auto endpoint = [&](const char* key) {
            std::string const v = string_at(member(es[i], key, path), path + "." + key);
            auto it = index.find(v);
            if (it == index.end()) {
                bad(path + "." + key, "unknown vertex '" + v + "'");
            }
            return it->second;
        };
        g.edges.push_back({string_at(member(es[i], "name", path), path + ".name"), endpoint("source"),
                           endpoint("range")});
    }
    g.validate();
    return g;
}

Json to_json(const CKPresentation& p) {
    std::vector<std::string> ck2;
    for (std::size_t v : p.ck2_vertices) {
        ck2.push_back(p.graph.vertices[v]);
    }
    return {{"graph", to_json(p.graph)},
            {"projections", p.projections},
            {"isometries", p.isometries},
            {"ck2_vertices", ck2},
            {"unital", p.unital},
            {"relations", string_list(p.relation_strings())}};
}

Json to_json(const MatrixAssignment& m) {
    Json mats = Json::object();
    for (std::size_t k = 0; k < m.names.size(); ++k) {
        const Matrix& x = m.matrices[k];
        Json rows = Json::array();
        for (std::size_t i = 0; i < x.n; ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < x.n; ++c) {
                row.push_back({x(i, c).numerator(), x(i, c).denominator()});
            }
            rows.push_back(row);
        }
        mats[m.names[k]] = rows;
    }
    return {{"dimension", m.dimension}, {"matrices", mats}};
}

Json to_json(const MatrixReport& r) {
    Json j{{"ok", r.ok}};
    if (!r.ok) {
        j["relation"] = r.relation;
        j["witness"] = r.witness;
    }
    return j;
}

Json to_json(const IdentityReport& r) {
    Json checked = Json::object();
    for (std::size_t k = 0; k < r.checked.size(); ++k) {
        checked[identity_label(static_cast<IdentityKind>(k + 1))] = r.checked[k];
    }
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json fj{{"identity", identity_label(f.kind)}, {"instance", f.description}};
        if (!f.existence_failure.empty()) {
            fj["existence"] = f.existence_failure;
        }
        failures.push_back(fj);
    }
    return {{"ok", r.ok()}, {"trees", r.trees}, {"instances", r.total()}, {"checked", checked}, {"failures", failures}};
}

}  // namespace dendrex
