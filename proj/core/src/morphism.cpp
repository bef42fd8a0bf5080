#include "dendrex/morphism.hpp"

#include "dendrex/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dendrex {

namespace {

// The face of t rooted at `root` spanned by the vertices flagged in `in_v`,
// with the edges flagged in `contracted` collapsed. Empty flags give η_root.
Tree build_face(const Tree& t, EdgeId root, const std::vector<bool>& in_v,
                const std::vector<bool>& contracted) {
    auto member = [](const std::vector<bool>& flags, EdgeId e) {
        return e < flags.size() && flags[e];
    };
    std::function<TreeNode(EdgeId)> build;
    std::function<void(EdgeId, std::vector<TreeNode>&)> collect = [&](EdgeId v,
                                                                      std::vector<TreeNode>& out) {
        for (EdgeId c : t.inputs(v)) {
            if (member(contracted, c)) {
                collect(c, out);
            } else {
                out.push_back(build(c));
            }
        }
    };
    build = [&](EdgeId e) {
        if (!t.has_vertex(e) || !member(in_v, e)) {
            return TreeNode::leaf(t.name(e));
        }
        std::vector<TreeNode> children;
        collect(e, children);
        return TreeNode::vertex(t.name(e), std::move(children));
    };
    return Tree::from_node(build(root));
}

EdgeMap inclusion_map(const Tree& sub, const Tree& t) {
    EdgeMap map(sub.edge_count());
    for (EdgeId e = 0; e < sub.edge_count(); ++e) {
        map[e] = t.at(sub.name(e));
    }
    return map;
}

TreeMorphism inclusion(Tree sub, const Tree& t) {
    EdgeMap map = inclusion_map(sub, t);
    return TreeMorphism::trusted(std::make_shared<const Tree>(std::move(sub)),
                                 std::make_shared<const Tree>(t), std::move(map));
}

struct Collapse {
    Tree tree;
    EdgeMap map;  // original edges -> collapsed edges
    std::vector<ElementaryMap> steps;
};

// Applies degeneracies at `vertices` (edges of s), lowest first.
Collapse collapse(const Tree& s, std::vector<EdgeId> vertices, bool record_steps) {
    std::sort(vertices.begin(), vertices.end(), [&](EdgeId a, EdgeId b) {
        std::size_t const da = s.depth(a);
        std::size_t const db = s.depth(b);
        return da != db ? da < db : a < b;
    });
    Collapse out{s, {}, {}};
    out.map.resize(s.edge_count());
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
        out.map[e] = e;
    }
    for (EdgeId v : vertices) {
        std::string const site = out.tree.name(out.map[v]);
        TreeMorphism step = degeneracy(out.tree, site);
        for (EdgeId& m : out.map) {
            m = step(m);
        }
        out.tree = step.target();
        if (record_steps) {
            out.steps.push_back({MapKind::degeneracy, site, std::move(step)});
        }
    }
    return out;
}

// Vertices of s whose two edges share an image under `map`.
std::vector<EdgeId> collapsed_vertices(const Tree& s, const EdgeMap& map) {
    std::vector<EdgeId> out;
    for (EdgeId v : s.vertices()) {
        if (s.is_unary(v) && map[s.inputs(v)[0]] == map[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::optional<NormalForm> factor(const std::shared_ptr<const Tree>& sp,
                                 const std::shared_ptr<const Tree>& tp, const EdgeMap& map) {
    const Tree& s = *sp;
    const Tree& t = *tp;
    if (map.size() != s.edge_count()) {
        return std::nullopt;
    }
    for (EdgeId x : map) {
        if (x >= t.edge_count()) {
            return std::nullopt;
        }
    }
    Collapse col = collapse(s, collapsed_vertices(s, map), true);
    const Tree& s1 = col.tree;

    // Induced map on the collapsed tree; must be well defined and injective.
    std::vector<std::optional<EdgeId>> induced(s1.edge_count());
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
        auto& slot = induced[col.map[e]];
        if (slot && *slot != map[e]) {
            return std::nullopt;
        }
        slot = map[e];
    }
    std::vector<bool> hit(t.edge_count(), false);
    std::vector<std::string> names(s1.edge_count());
    for (EdgeId x = 0; x < s1.edge_count(); ++x) {
        if (hit[*induced[x]]) {
            return std::nullopt;
        }
        hit[*induced[x]] = true;
        names[x] = t.name(*induced[x]);
    }
    Tree image = s1.renamed(names);
    if (!is_face(image, t)) {
        return std::nullopt;
    }

    auto s1p = std::make_shared<const Tree>(s1);
    auto imagep = std::make_shared<const Tree>(image);
    EdgeMap iso(s1.edge_count());
    for (EdgeId x = 0; x < s1.edge_count(); ++x) {
        iso[x] = image.at(names[x]);
    }

    // Peel faces off the target until only the image is left.
    std::vector<ElementaryMap> faces;
    Tree current = t;
    while (!(current == image)) {
        bool found = false;
        for (ElementaryMap& f : elementary_faces(current)) {
            if (is_face(image, f.map.source())) {
                current = f.map.source();
                faces.push_back(std::move(f));
                found = true;
                break;
            }
        }
        if (!found) {
            throw InternalError("normal_form: face chain stalled");
        }
    }
    std::reverse(faces.begin(), faces.end());

    return NormalForm{std::move(col.steps), TreeMorphism::trusted(s1p, imagep, std::move(iso)),
                      std::move(faces)};
}

}  // namespace

TreeMorphism TreeMorphism::trusted(std::shared_ptr<const Tree> source,
                                   std::shared_ptr<const Tree> target, EdgeMap map) {
    return TreeMorphism(std::move(source), std::move(target), std::move(map));
}

std::optional<TreeMorphism> TreeMorphism::try_from_edge_map(Tree source, Tree target, EdgeMap map) {
    auto sp = std::make_shared<const Tree>(std::move(source));
    auto tp = std::make_shared<const Tree>(std::move(target));
    if (!factor(sp, tp, map)) {
        return std::nullopt;
    }
    return TreeMorphism(std::move(sp), std::move(tp), std::move(map));
}

TreeMorphism TreeMorphism::from_edge_map(Tree source, Tree target, EdgeMap map) {
    auto m = try_from_edge_map(std::move(source), std::move(target), std::move(map));
    if (!m) {
        throw PreconditionError("edge map is not induced by a tree morphism");
    }
    return *std::move(m);
}

TreeMorphism TreeMorphism::identity(const Tree& t) {
    auto p = std::make_shared<const Tree>(t);
    EdgeMap map(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        map[e] = e;
    }
    return TreeMorphism(p, p, std::move(map));
}

bool TreeMorphism::is_identity() const {
    if (!(source() == target())) {
        return false;
    }
    for (EdgeId e = 0; e < map_.size(); ++e) {
        if (map_[e] != e) {
            return false;
        }
    }
    return true;
}

bool TreeMorphism::is_injective() const {
    std::vector<bool> hit(target().edge_count(), false);
    for (EdgeId x : map_) {
        if (hit[x]) {
            return false;
        }
        hit[x] = true;
    }
    return true;
}

bool TreeMorphism::is_isomorphism() const {
    const Tree& s = source();
    const Tree& t = target();
    if (s.edge_count() != t.edge_count() || !is_injective()) {
        return false;
    }
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
        EdgeId const f = map_[e];
        if (s.has_vertex(e) != t.has_vertex(f)) {
            return false;
        }
        auto sp = s.parent(e);
        auto tp = t.parent(f);
        if (sp.has_value() != tp.has_value() || (sp && map_[*sp] != *tp)) {
            return false;
        }
    }
    return true;
}

bool operator==(const TreeMorphism& a, const TreeMorphism& b) {
    return a.map_ == b.map_ && (a.source_ == b.source_ || *a.source_ == *b.source_) &&
           (a.target_ == b.target_ || *a.target_ == *b.target_);
}

std::string_view to_string(MapKind kind) {
    switch (kind) {
        case MapKind::inner_face:
            return "inner_face";
        case MapKind::outer_face:
            return "outer_face";
        case MapKind::corolla_face:
            return "corolla_face";
        case MapKind::degeneracy:
            return "degeneracy";
        case MapKind::isomorphism:
            return "isomorphism";
    }
    return "unknown";
}

TreeMorphism NormalForm::composite() const {
    TreeMorphism out = degeneracies.empty() ? TreeMorphism::identity(isomorphism.source())
                                            : degeneracies.front().map;
    for (std::size_t i = 1; i < degeneracies.size(); ++i) {
        out = compose(degeneracies[i].map, out);
    }
    out = compose(isomorphism, out);
    for (const ElementaryMap& f : faces) {
        out = compose(f.map, out);
    }
    return out;
}

TreeMorphism inner_face(const Tree& t, std::string_view edge) {
    EdgeId const e = t.at(edge);
    if (!t.is_inner(e)) {
        throw PreconditionError("inner_face: '" + std::string(edge) + "' is not an inner edge");
    }
    std::vector<bool> all = std::vector<bool>(t.edge_count(), true);
    std::vector<bool> contracted(t.edge_count(), false);
    contracted[e] = true;
    return inclusion(build_face(t, t.root(), all, contracted), t);
}

bool has_outer_face(const Tree& t, EdgeId vertex) {
    return t.vertex_count() >= 2 && t.has_vertex(vertex) && t.inner_degree(vertex) == 1;
}

TreeMorphism outer_face(const Tree& t, std::string_view vertex) {
    EdgeId const v = t.at(vertex);
    if (!t.has_vertex(v)) {
        throw PreconditionError("outer_face: '" + std::string(vertex) + "' carries no vertex");
    }
    if (t.vertex_count() < 2) {
        throw UnsupportedCaseError("outer_face: single-vertex trees have no outer faces");
    }
    if (t.inner_degree(v) != 1) {
        throw PreconditionError("outer_face: vertex '" + std::string(vertex) +
                                "' does not carry exactly one inner edge");
    }
    std::vector<bool> in_v(t.edge_count(), false);
    for (EdgeId u : t.vertices()) {
        in_v[u] = u != v;
    }
    EdgeId root = t.root();
    if (v == t.root()) {
        for (EdgeId c : t.inputs(v)) {
            if (t.has_vertex(c)) {
                root = c;
            }
        }
    }
    return inclusion(build_face(t, root, in_v, {}), t);
}

TreeMorphism corolla_face(const Tree& t, std::string_view edge) {
    if (t.vertex_count() != 1) {
        throw PreconditionError("corolla_face: tree must have exactly one vertex");
    }
    return inclusion(Tree::unit(t.name(t.at(edge))), t);
}

std::string merged_edge_name(std::string_view upper, std::string_view lower) {
    std::string out(upper);
    out += '~';
    out += lower;
    return out;
}

TreeMorphism degeneracy(const Tree& t, std::string_view vertex) {
    EdgeId const v = t.at(vertex);
    if (!t.is_unary(v)) {
        throw PreconditionError("degeneracy: vertex '" + std::string(vertex) + "' is not unary");
    }
    EdgeId const upper = t.inputs(v)[0];
    std::string const merged = merged_edge_name(t.name(upper), t.name(v));
    std::function<TreeNode(EdgeId)> build = [&](EdgeId e) {
        if (e == v) {
            TreeNode node = build(upper);
            node.edge = merged;
            return node;
        }
        TreeNode node{t.name(e), std::nullopt};
        if (t.has_vertex(e)) {
            std::vector<TreeNode> children;
            for (EdgeId c : t.inputs(e)) {
                children.push_back(build(c));
            }
            node.inputs = std::move(children);
        }
        return node;
    };
    Tree target = Tree::from_node(build(t.root()));
    EdgeMap map(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        map[e] = target.at(e == v || e == upper ? merged : t.name(e));
    }
    return TreeMorphism::trusted(std::make_shared<const Tree>(t),
                                 std::make_shared<const Tree>(std::move(target)), std::move(map));
}

std::vector<ElementaryMap> elementary_faces(const Tree& t) {
    std::vector<ElementaryMap> out;
    bool const single = t.vertex_count() == 1;
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (t.is_inner(e)) {
            out.push_back({MapKind::inner_face, t.name(e), inner_face(t, t.name(e))});
        }
        if (has_outer_face(t, e)) {
            out.push_back({MapKind::outer_face, t.name(e), outer_face(t, t.name(e))});
        }
        if (single) {
            out.push_back({MapKind::corolla_face, t.name(e), corolla_face(t, t.name(e))});
        }
    }
    return out;
}

std::vector<ElementaryMap> elementary_degeneracies(const Tree& t) {
    std::vector<ElementaryMap> out;
    for (EdgeId v : t.vertices()) {
        if (t.is_unary(v)) {
            out.push_back({MapKind::degeneracy, t.name(v), degeneracy(t, t.name(v))});
        }
    }
    return out;
}

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f) {
    if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source())) {
        throw PreconditionError("compose: target of the first map is not the source of the second");
    }
    EdgeMap map(f.edge_map().size());
    for (EdgeId e = 0; e < map.size(); ++e) {
        map[e] = g(f(e));
    }
    return TreeMorphism::trusted(f.source_ptr(), g.target_ptr(), std::move(map));
}

NormalForm normal_form(const TreeMorphism& m) {
    auto nf = factor(m.source_ptr(), m.target_ptr(), m.edge_map());
    if (!nf) {
        throw InternalError("normal_form: stored morphism does not factor");
    }
    return *std::move(nf);
}

Tree face_part(const TreeMorphism& m) {
    NormalForm nf = normal_form(m);
    return nf.isomorphism.target();
}

bool is_face(const Tree& candidate, const Tree& t) {
    for (const std::string& n : candidate.edge_names()) {
        if (!t.find(n)) {
            return false;
        }
    }
    EdgeId const root = t.at(candidate.name(candidate.root()));
    if (candidate.edge_count() == 1 && !candidate.has_vertex(candidate.root())) {
        return true;
    }
    if (!t.has_vertex(root)) {
        return false;
    }
    std::vector<bool> in_v(t.edge_count(), false);
    std::vector<bool> contracted(t.edge_count(), false);
    std::vector<EdgeId> stack{root};
    while (!stack.empty()) {
        EdgeId const v = stack.back();
        stack.pop_back();
        in_v[v] = true;
        for (EdgeId c : t.inputs(v)) {
            if (auto cc = candidate.find(t.name(c))) {
                if (candidate.has_vertex(*cc)) {
                    if (!t.has_vertex(c)) {
                        return false;
                    }
                    stack.push_back(c);
                }
            } else if (t.has_vertex(c)) {
                contracted[c] = true;
                stack.push_back(c);
            } else {
                return false;
            }
        }
    }
    return build_face(t, root, in_v, contracted) == candidate;
}

TreeMorphism face_inclusion(const Tree& candidate, const Tree& t) {
    if (!is_face(candidate, t)) {
        throw PreconditionError("face_inclusion: not a face of the target");
    }
    return inclusion(candidate, t);
}

std::vector<Tree> all_faces(const Tree& t) {
    std::map<std::string, Tree> found;
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        Tree u = Tree::unit(t.name(e));
        found.emplace(labeled_code(u), std::move(u));
    }
    // Connected vertex sets whose lowest vertex is v.
    std::function<std::vector<std::vector<EdgeId>>(EdgeId)> upward = [&](EdgeId v) {
        std::vector<std::vector<EdgeId>> sets{{v}};
        for (EdgeId c : t.inputs(v)) {
            if (!t.has_vertex(c)) {
                continue;
            }
            auto const above = upward(c);
            std::size_t const n = sets.size();
            for (std::size_t i = 0; i < n; ++i) {
                for (const auto& a : above) {
                    auto merged = sets[i];
                    merged.insert(merged.end(), a.begin(), a.end());
                    sets.push_back(std::move(merged));
                }
            }
        }
        return sets;
    };
    for (EdgeId v : t.vertices()) {
        for (const auto& set : upward(v)) {
            std::vector<bool> in_v(t.edge_count(), false);
            std::vector<EdgeId> inner;
            for (EdgeId u : set) {
                in_v[u] = true;
                if (u != v) {
                    inner.push_back(u);
                }
            }
            for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
                std::vector<bool> contracted(t.edge_count(), false);
                for (std::size_t i = 0; i < inner.size(); ++i) {
                    contracted[inner[i]] = ((mask >> i) & 1U) != 0;
                }
                Tree f = build_face(t, v, in_v, contracted);
                found.emplace(labeled_code(f), std::move(f));
            }
        }
    }
    std::vector<Tree> out;
    out.reserve(found.size());
    for (auto& [code, f] : found) {
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<TreeMorphism> hom_set(const Tree& s, const Tree& t) {
    auto sp = std::make_shared<const Tree>(s);
    auto tp = std::make_shared<const Tree>(t);
    std::multimap<std::string, Tree> faces_by_code;
    for (Tree& f : all_faces(t)) {
        std::string code = canonical_code(f);
        faces_by_code.emplace(std::move(code), std::move(f));
    }
    std::vector<EdgeId> unary;
    for (EdgeId v : s.vertices()) {
        if (s.is_unary(v)) {
            unary.push_back(v);
        }
    }
    std::set<EdgeMap> maps;
    for (std::size_t mask = 0; mask < (std::size_t{1} << unary.size()); ++mask) {
        std::vector<EdgeId> chosen;
        for (std::size_t i = 0; i < unary.size(); ++i) {
            if ((mask >> i) & 1U) {
                chosen.push_back(unary[i]);
            }
        }
        Collapse const col = collapse(s, chosen, false);
        auto [lo, hi] = faces_by_code.equal_range(canonical_code(col.tree));
        for (auto it = lo; it != hi; ++it) {
            EdgeMap const incl = inclusion_map(it->second, t);
            for (const EdgeMap& iso : all_isomorphisms(col.tree, it->second)) {
                EdgeMap map(s.edge_count());
                for (EdgeId e = 0; e < s.edge_count(); ++e) {
                    map[e] = incl[iso[col.map[e]]];
                }
                maps.insert(std::move(map));
            }
        }
    }
    std::vector<TreeMorphism> out;
    out.reserve(maps.size());
    for (const EdgeMap& m : maps) {
        out.push_back(TreeMorphism::trusted(sp, tp, m));
    }
    return out;
}

}  // namespace dendrex
