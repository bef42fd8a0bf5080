#include "dendrex/tree.hpp"

#include "dendrex/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace dendrex {

namespace {

struct FlatEdge {
    std::string name;
    std::optional<std::size_t> parent;  // index into the flat list
    bool has_vertex = false;
};

void flatten(const TreeNode& node, std::optional<std::size_t> parent, std::vector<FlatEdge>& out) {
    std::size_t const self = out.size();
    out.push_back({node.edge, parent, node.inputs.has_value()});
    if (node.inputs) {
        for (const TreeNode& child : *node.inputs) {
            flatten(child, self, out);
        }
    }
}

std::vector<std::string> all_codes(const Tree& t) {
    std::vector<std::string> codes(t.edge_count());
    // Deepest edges first, so children are encoded before their parents.
    std::vector<EdgeId> order(t.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::vector<std::size_t> depth(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        depth[e] = t.depth(e);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return depth[a] > depth[b]; });
    for (EdgeId e : order) {
        std::string code = "(e";
        if (t.has_vertex(e)) {
            std::vector<std::string> children;
            for (EdgeId c : t.inputs(e)) {
                children.push_back(codes[c]);
            }
            std::sort(children.begin(), children.end());
            code += '[';
            for (const auto& c : children) {
                code += c;
            }
            code += ']';
        }
        code += ')';
        codes[e] = std::move(code);
    }
    return codes;
}

std::vector<EdgeId> sorted_children(const Tree& t, EdgeId v, const std::vector<std::string>& codes) {
    std::vector<EdgeId> children(t.inputs(v).begin(), t.inputs(v).end());
    std::sort(children.begin(), children.end(), [&](EdgeId a, EdgeId b) {
        if (codes[a] != codes[b]) {
            return codes[a] < codes[b];
        }
        return a < b;
    });
    return children;
}

// Enumerates every code-respecting bijection between two sorted child lists.
void child_matchings(const std::vector<EdgeId>& src, std::vector<EdgeId> tgt,
                     const std::vector<std::string>& src_codes,
                     const std::vector<std::string>& tgt_codes,
                     std::vector<std::vector<std::pair<EdgeId, EdgeId>>>& out) {
    // Group boundaries (both lists share the same code sequence).
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < src.size();) {
        std::size_t j = i;
        while (j < src.size() && src_codes[src[j]] == src_codes[src[i]]) {
            ++j;
        }
        groups.emplace_back(i, j);
        i = j;
    }
    for (auto [lo, hi] : groups) {
        std::sort(tgt.begin() + static_cast<std::ptrdiff_t>(lo),
                  tgt.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            std::vector<std::pair<EdgeId, EdgeId>> pairs;
            for (std::size_t i = 0; i < src.size(); ++i) {
                pairs.emplace_back(src[i], tgt[i]);
            }
            out.push_back(std::move(pairs));
            return;
        }
        auto [lo, hi] = groups[g];
        auto first = tgt.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last = tgt.begin() + static_cast<std::ptrdiff_t>(hi);
        std::vector<EdgeId> saved(first, last);
        do {
            rec(g + 1);
        } while (std::next_permutation(first, last));
        std::copy(saved.begin(), saved.end(), first);
    };
    (void)tgt_codes;
    rec(0);
}

void extend_isomorphisms(const Tree& s, const Tree& t, const std::vector<std::string>& s_codes,
                         const std::vector<std::string>& t_codes,
                         std::vector<std::pair<EdgeId, EdgeId>> pending, EdgeMap& current,
                         std::vector<EdgeMap>& out) {
    if (pending.empty()) {
        out.push_back(current);
        return;
    }
    auto [a, b] = pending.back();
    pending.pop_back();
    current[a] = b;
    if (!s.has_vertex(a) || s.inputs(a).empty()) {
        extend_isomorphisms(s, t, s_codes, t_codes, std::move(pending), current, out);
        return;
    }
    std::vector<EdgeId> const sc = sorted_children(s, a, s_codes);
    std::vector<EdgeId> const tc = sorted_children(t, b, t_codes);
    std::vector<std::vector<std::pair<EdgeId, EdgeId>>> matchings;
    child_matchings(sc, tc, s_codes, t_codes, matchings);
    for (const auto& m : matchings) {
        auto next = pending;
        next.insert(next.end(), m.begin(), m.end());
        extend_isomorphisms(s, t, s_codes, t_codes, std::move(next), current, out);
    }
}

}  // namespace

Tree Tree::from_node(const TreeNode& root) {
    std::vector<FlatEdge> flat;
    flatten(root, std::nullopt, flat);
    std::vector<std::size_t> order(flat.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return flat[a].name < flat[b].name; });
    std::vector<EdgeId> index_of(flat.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        index_of[order[i]] = i;
        if (flat[order[i]].name.empty()) {
            throw ValidationError("tree: empty edge name");
        }
        if (i > 0 && flat[order[i]].name == flat[order[i - 1]].name) {
            throw ValidationError("tree: duplicate edge name '" + flat[order[i]].name + "'");
        }
    }
    Tree t;
    std::size_t const n = flat.size();
    t.names_.resize(n);
    t.parent_.resize(n);
    t.has_vertex_.resize(n);
    t.inputs_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        EdgeId const e = index_of[k];
        t.names_[e] = flat[k].name;
        t.has_vertex_[e] = flat[k].has_vertex;
        if (flat[k].parent) {
            EdgeId const p = index_of[*flat[k].parent];
            t.parent_[e] = p;
            t.inputs_[p].push_back(e);
        } else {
            t.root_ = e;
        }
    }
    for (auto& in : t.inputs_) {
        std::sort(in.begin(), in.end());
    }
    return t;
}

Tree Tree::unit(std::string edge) { return from_node(TreeNode::leaf(std::move(edge))); }

TreeNode Tree::to_node() const {
    std::function<TreeNode(EdgeId)> build = [&](EdgeId e) {
        TreeNode node{names_[e], std::nullopt};
        if (has_vertex_[e]) {
            std::vector<TreeNode> children;
            for (EdgeId c : inputs_[e]) {
                children.push_back(build(c));
            }
            node.inputs = std::move(children);
        }
        return node;
    };
    return build(root_);
}

std::size_t Tree::vertex_count() const {
    return static_cast<std::size_t>(std::count(has_vertex_.begin(), has_vertex_.end(), true));
}

std::optional<EdgeId> Tree::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == names_.end() || *it != name) {
        return std::nullopt;
    }
    return static_cast<EdgeId>(it - names_.begin());
}

EdgeId Tree::at(std::string_view name) const {
    if (auto e = find(name)) {
        return *e;
    }
    throw PreconditionError("tree has no edge named '" + std::string(name) + "'");
}

std::vector<EdgeId> Tree::vertices() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (has_vertex_[e]) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<EdgeId> Tree::leaves() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (!has_vertex_[e]) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<EdgeId> Tree::inner_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (is_inner(e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::size_t Tree::inner_degree(EdgeId v) const {
    std::size_t n = is_inner(v) ? 1 : 0;
    for (EdgeId c : inputs_[v]) {
        if (is_inner(c)) {
            ++n;
        }
    }
    return n;
}

std::size_t Tree::depth(EdgeId e) const {
    std::size_t d = 0;
    while (parent_[e]) {
        e = *parent_[e];
        ++d;
    }
    return d;
}

bool Tree::is_below_or_equal(EdgeId lower, EdgeId upper) const {
    std::optional<EdgeId> cur = upper;
    while (cur) {
        if (*cur == lower) {
            return true;
        }
        cur = parent_[*cur];
    }
    return false;
}

Tree Tree::renamed(std::span<const std::string> new_names) const {
    if (new_names.size() != edge_count()) {
        throw PreconditionError("renamed: name list has wrong length");
    }
    std::function<TreeNode(EdgeId)> build = [&](EdgeId e) {
        TreeNode node{new_names[e], std::nullopt};
        if (has_vertex_[e]) {
            std::vector<TreeNode> children;
            for (EdgeId c : inputs_[e]) {
                children.push_back(build(c));
            }
            node.inputs = std::move(children);
        }
        return node;
    };
    return from_node(build(root_));
}

std::string subtree_code(const Tree& t, EdgeId e) { return all_codes(t)[e]; }

std::string canonical_code(const Tree& t) { return all_codes(t)[t.root()]; }

std::string labeled_code(const Tree& t) {
    std::function<std::string(EdgeId)> rec = [&](EdgeId e) {
        std::string out = "(" + t.name(e);
        if (t.has_vertex(e)) {
            out += '[';
            for (EdgeId c : t.inputs(e)) {
                out += rec(c);
            }
            out += ']';
        }
        return out + ")";
    };
    return rec(t.root());
}

CanonicalTree canonicalize(const Tree& t) {
    std::vector<std::string> const codes = all_codes(t);
    CanonicalTree out{t, codes[t.root()], {}};
    out.child_order.resize(t.edge_count());
    for (EdgeId v : t.vertices()) {
        out.child_order[v] = sorted_children(t, v, codes);
    }
    return out;
}

Tree canonical_representative(const Tree& t) {
    std::vector<std::string> const codes = all_codes(t);
    std::vector<std::string> names(t.edge_count());
    std::size_t next = 0;
    std::function<void(EdgeId)> visit = [&](EdgeId e) {
        names[e] = "e" + std::to_string(next++);
        if (t.has_vertex(e)) {
            for (EdgeId c : sorted_children(t, e, codes)) {
                visit(c);
            }
        }
    };
    visit(t.root());
    return t.renamed(names);
}

std::optional<EdgeMap> isomorphism(const Tree& s, const Tree& t) {
    if (s.edge_count() != t.edge_count()) {
        return std::nullopt;
    }
    std::vector<std::string> const sc = all_codes(s);
    std::vector<std::string> const tc = all_codes(t);
    if (sc[s.root()] != tc[t.root()]) {
        return std::nullopt;
    }
    EdgeMap map(s.edge_count());
    std::function<void(EdgeId, EdgeId)> pair = [&](EdgeId a, EdgeId b) {
        map[a] = b;
        if (!s.has_vertex(a)) {
            return;
        }
        std::vector<EdgeId> const ca = sorted_children(s, a, sc);
        std::vector<EdgeId> const cb = sorted_children(t, b, tc);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            pair(ca[i], cb[i]);
        }
    };
    pair(s.root(), t.root());
    return map;
}

std::vector<EdgeMap> all_isomorphisms(const Tree& s, const Tree& t) {
    std::vector<EdgeMap> out;
    if (s.edge_count() != t.edge_count()) {
        return out;
    }
    std::vector<std::string> const sc = all_codes(s);
    std::vector<std::string> const tc = all_codes(t);
    if (sc[s.root()] != tc[t.root()]) {
        return out;
    }
    EdgeMap current(s.edge_count());
    extend_isomorphisms(s, t, sc, tc, {{s.root(), t.root()}}, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeMap> automorphisms(const Tree& t) { return all_isomorphisms(t, t); }

std::size_t max_edges_ceiling() {
    if (const char* env = std::getenv("DENDREX_MAX_EDGES")) {
        char* end = nullptr;
        unsigned long const v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return 8;
}

std::vector<CanonicalTree> enumerate_trees(std::size_t max_edges) {
    if (max_edges == 0) {
        throw PreconditionError("enumerate_trees: max_edges must be positive");
    }
    if (max_edges > max_edges_ceiling()) {
        throw ResourceError("enumerate_trees: " + std::to_string(max_edges) +
                            " edges exceeds the ceiling of " +
                            std::to_string(max_edges_ceiling()) +
                            " (set DENDREX_MAX_EDGES to raise it)");
    }
    // by_size[n] holds shapes with n edges; names are placeholders until the
    // final canonical relabelling.
    std::vector<std::vector<TreeNode>> by_size(max_edges + 1);
    by_size[1] = {TreeNode::leaf("x"), TreeNode::vertex("x", {})};
    for (std::size_t n = 2; n <= max_edges; ++n) {
        // Multisets of child shapes with total size n - 1, as nondecreasing
        // sequences of (size, index) pairs.
        std::vector<std::pair<std::size_t, std::size_t>> chosen;
        std::function<void(std::size_t, std::pair<std::size_t, std::size_t>)> rec =
            [&](std::size_t remaining, std::pair<std::size_t, std::size_t> min) {
                if (remaining == 0) {
                    std::vector<TreeNode> children;
                    for (auto [sz, idx] : chosen) {
                        children.push_back(by_size[sz][idx]);
                    }
                    by_size[n].push_back(TreeNode::vertex("x", std::move(children)));
                    return;
                }
                for (std::size_t sz = min.first; sz <= remaining; ++sz) {
                    std::size_t const start = sz == min.first ? min.second : 0;
                    for (std::size_t idx = start; idx < by_size[sz].size(); ++idx) {
                        chosen.emplace_back(sz, idx);
                        rec(remaining - sz, {sz, idx});
                        chosen.pop_back();
                    }
                }
            };
        rec(n - 1, {1, 0});
    }
    std::vector<CanonicalTree> out;
    for (std::size_t n = 1; n <= max_edges; ++n) {
        std::map<std::string, CanonicalTree> level;
        for (TreeNode& shape : by_size[n]) {
            // Placeholder names must be unique before from_node accepts them.
            std::size_t counter = 0;
            std::function<void(TreeNode&)> name = [&](TreeNode& node) {
                node.edge = "x" + std::to_string(counter++);
                if (node.inputs) {
                    for (TreeNode& c : *node.inputs) {
                        name(c);
                    }
                }
            };
            name(shape);
            CanonicalTree ct = canonicalize(canonical_representative(Tree::from_node(shape)));
            level.emplace(ct.code, std::move(ct));
        }
        for (auto& [code, ct] : level) {
            out.push_back(std::move(ct));
        }
    }
    return out;
}

bool is_open(const Tree& t) {
    for (EdgeId v : t.vertices()) {
        if (t.is_stump(v)) {
            return false;
        }
    }
    return true;
}

Tree standard_tree(StandardTreeSpec spec) {
    switch (spec.shape) {
        case StandardShape::unit:
            return Tree::unit("e0");
        case StandardShape::linear: {
            TreeNode node = TreeNode::leaf("e" + std::to_string(spec.n));
            for (std::size_t i = spec.n; i-- > 0;) {
                node = TreeNode::vertex("e" + std::to_string(i), {std::move(node)});
            }
            return Tree::from_node(node);
        }
        case StandardShape::corolla: {
            std::vector<TreeNode> leaves;
            for (std::size_t i = 1; i <= spec.n; ++i) {
                leaves.push_back(TreeNode::leaf("e" + std::to_string(i)));
            }
            return Tree::from_node(TreeNode::vertex("e0", std::move(leaves)));
        }
    }
    throw PreconditionError("standard_tree: unknown shape");
}

}  // namespace dendrex
