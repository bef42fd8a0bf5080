#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dendrex {

/// Index of an edge inside one Tree. Edges are indexed in ascending name order.
using EdgeId = std::size_t;

/// Map between the edge sets of two trees, indexed by source EdgeId.
using EdgeMap = std::vector<EdgeId>;

/// Recursive, order-free description of a tree, used to build one.
///
/// `inputs` is empty-optional for a leaf edge, and an empty vector for an edge
/// whose top vertex is a stump. The order of `inputs` carries no meaning.
struct TreeNode {
    std::string edge;
    std::optional<std::vector<TreeNode>> inputs;

    static TreeNode leaf(std::string name) { return {std::move(name), std::nullopt}; }
    static TreeNode vertex(std::string name, std::vector<TreeNode> children) {
        return {std::move(name), std::move(children)};
    }
};

/// A non-planar rooted tree with named edges: an object of the tree category.
///
/// A vertex is identified with its (unique) output edge, so "vertex e" means
/// the vertex sitting on top of edge e. Leaves are edges with no vertex above
/// them; the root is the unique edge with no vertex below it.
class Tree {
public:
    /// Builds and validates a tree. Throws ValidationError on duplicate or
    /// empty edge names.
    static Tree from_node(const TreeNode& root);
    static Tree unit(std::string edge = "e0");

    TreeNode to_node() const;

    std::size_t edge_count() const { return names_.size(); }
    std::size_t vertex_count() const;
    std::span<const std::string> edge_names() const { return names_; }
    const std::string& name(EdgeId e) const { return names_[e]; }

    std::optional<EdgeId> find(std::string_view name) const;
    /// Like find(), but throws PreconditionError for an unknown name.
    EdgeId at(std::string_view name) const;

    EdgeId root() const { return root_; }
    bool has_vertex(EdgeId e) const { return has_vertex_[e]; }
    bool is_leaf(EdgeId e) const { return !has_vertex_[e]; }
    bool is_root(EdgeId e) const { return e == root_; }
    /// Attached to two vertices.
    bool is_inner(EdgeId e) const { return has_vertex_[e] && parent_[e].has_value(); }
    bool is_stump(EdgeId vertex) const { return has_vertex_[vertex] && inputs_[vertex].empty(); }
    bool is_unary(EdgeId vertex) const { return has_vertex_[vertex] && inputs_[vertex].size() == 1; }

    /// The edge directly below e (output of the vertex e feeds into).
    std::optional<EdgeId> parent(EdgeId e) const { return parent_[e]; }
    /// Input edges of vertex `v`, ascending. Empty for leaves and stumps.
    std::span<const EdgeId> inputs(EdgeId v) const { return inputs_[v]; }

    /// Output edges of all vertices, ascending.
    std::vector<EdgeId> vertices() const;
    std::vector<EdgeId> leaves() const;
    std::vector<EdgeId> inner_edges() const;
    /// Number of inner edges attached to vertex `v`.
    std::size_t inner_degree(EdgeId v) const;

    std::size_t depth(EdgeId e) const;
    /// True iff `lower` lies on the path from `upper` down to the root.
    bool is_below_or_equal(EdgeId lower, EdgeId upper) const;
    /// Comparable under the ancestor order.
    bool comparable(EdgeId a, EdgeId b) const {
        return is_below_or_equal(a, b) || is_below_or_equal(b, a);
    }

    /// Same shape with edge `e` renamed to `new_names[e]`.
    Tree renamed(std::span<const std::string> new_names) const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::optional<EdgeId>> parent_;
    std::vector<bool> has_vertex_;
    std::vector<std::vector<EdgeId>> inputs_;
    EdgeId root_ = 0;
};

/// A tree together with a total order on every vertex's inputs and the
/// isomorphism-invariant code of its shape.
struct CanonicalTree {
    Tree tree;
    std::string code;
    /// child_order[v] lists the inputs of vertex v sorted by (subtree code, name).
    std::vector<std::vector<EdgeId>> child_order;

    friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;
};

CanonicalTree canonicalize(const Tree& t);
std::string canonical_code(const Tree& t);
/// Like the canonical code but keeping edge names, so equal keys mean equal
/// trees. Handy as a map key.
std::string labeled_code(const Tree& t);
/// Code of the subtree standing on edge `e`.
std::string subtree_code(const Tree& t, EdgeId e);

/// The representative of t's isomorphism class: edges renamed e0, e1, ... in
/// preorder with inputs visited in canonical order.
Tree canonical_representative(const Tree& t);

/// A root- and shape-preserving edge bijection s -> t, if one exists. Inputs are
/// paired in (subtree code, edge name) order, so the choice is deterministic and
/// isomorphism(t, t) is the identity.
std::optional<EdgeMap> isomorphism(const Tree& s, const Tree& t);
/// Every isomorphism s -> t, in ascending lexicographic order.
std::vector<EdgeMap> all_isomorphisms(const Tree& s, const Tree& t);
/// Every automorphism; the identity comes first.
std::vector<EdgeMap> automorphisms(const Tree& t);

/// Safety ceiling for enumerate_trees: 8, or the value of DENDREX_MAX_EDGES.
std::size_t max_edges_ceiling();

/// One canonical representative per isomorphism class of trees with at most
/// `max_edges` edges, ordered by edge count and then by code. Throws
/// ResourceError above max_edges_ceiling().
std::vector<CanonicalTree> enumerate_trees(std::size_t max_edges);

/// No vertex is a stump.
bool is_open(const Tree& t);

enum class StandardShape { unit, linear, corolla };

struct StandardTreeSpec {
    StandardShape shape = StandardShape::unit;
    std::size_t n = 0;
};

/// L_n (edges e0 = root, ..., en = top leaf), the n-corolla (root e0, leaves
/// e1..en) or the unit tree (e0). linear 0 is the unit tree.
Tree standard_tree(StandardTreeSpec spec);
inline Tree linear_tree(std::size_t n) { return standard_tree({StandardShape::linear, n}); }
inline Tree corolla(std::size_t n) { return standard_tree({StandardShape::corolla, n}); }

}  // namespace dendrex
