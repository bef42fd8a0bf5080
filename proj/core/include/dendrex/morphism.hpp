#pragma once

#include "dendrex/tree.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dendrex {

/// An arrow of the tree category, stored as its effect on edges.
///
/// Two morphisms are equal iff source, target and edge map agree. Every
/// instance is valid: public constructors check the map via its normal form.
class TreeMorphism {
public:
    /// Throws PreconditionError when `map` is not induced by any arrow.
    static TreeMorphism from_edge_map(Tree source, Tree target, EdgeMap map);
    static std::optional<TreeMorphism> try_from_edge_map(Tree source, Tree target, EdgeMap map);
    static TreeMorphism identity(const Tree& t);

    const Tree& source() const { return *source_; }
    const Tree& target() const { return *target_; }
    const std::shared_ptr<const Tree>& source_ptr() const { return source_; }
    const std::shared_ptr<const Tree>& target_ptr() const { return target_; }
    const EdgeMap& edge_map() const { return map_; }
    EdgeId operator()(EdgeId e) const { return map_[e]; }

    bool is_identity() const;
    /// Bijective on edges and compatible with the tree structure.
    bool is_isomorphism() const;
    /// No two edges share an image.
    bool is_injective() const;

    friend bool operator==(const TreeMorphism& a, const TreeMorphism& b);

    /// Skips validation. Only for maps known to be arrows by construction.
    static TreeMorphism trusted(std::shared_ptr<const Tree> source,
                                std::shared_ptr<const Tree> target, EdgeMap map);

private:
    TreeMorphism(std::shared_ptr<const Tree> s, std::shared_ptr<const Tree> t, EdgeMap map)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

    std::shared_ptr<const Tree> source_;
    std::shared_ptr<const Tree> target_;
    EdgeMap map_;
};

enum class MapKind { inner_face, outer_face, corolla_face, degeneracy, isomorphism };

std::string_view to_string(MapKind kind);

/// A generating arrow with the edge (or vertex) it is attached to.
///
/// `site` is the contracted edge of an inner face, the deleted vertex of an
/// outer face, the kept edge of a corolla face and the deleted vertex of a
/// degeneracy. Vertices are named by their output edge.
struct ElementaryMap {
    MapKind kind;
    std::string site;
    TreeMorphism map;
};

/// m = faces ∘ iso ∘ degeneracies. Both lists are in application order.
struct NormalForm {
    std::vector<ElementaryMap> degeneracies;
    TreeMorphism isomorphism;
    std::vector<ElementaryMap> faces;

    TreeMorphism composite() const;
};

/// Contracts the inner edge `edge`.
TreeMorphism inner_face(const Tree& t, std::string_view edge);
/// Deletes a vertex carrying exactly one inner edge, with its outer edges.
/// UnsupportedCaseError for trees with fewer than two vertices.
TreeMorphism outer_face(const Tree& t, std::string_view vertex);
/// The inclusion of one edge of a single-vertex tree. Those trees have no
/// outer faces, so these arrows stand in for them.
TreeMorphism corolla_face(const Tree& t, std::string_view edge);
/// Deletes a unary vertex, merging its two edges.
TreeMorphism degeneracy(const Tree& t, std::string_view vertex);

/// Name given to the edge produced by merging `upper` into `lower`.
std::string merged_edge_name(std::string_view upper, std::string_view lower);

bool has_outer_face(const Tree& t, EdgeId vertex);

/// All generating faces into t, ordered by site and then kind.
std::vector<ElementaryMap> elementary_faces(const Tree& t);
std::vector<ElementaryMap> elementary_degeneracies(const Tree& t);

/// g ∘ f. PreconditionError if target(f) differs from source(g).
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);

/// Degeneracies bottom-up, the forced isomorphism, then faces peeled from the
/// target in site order.
NormalForm normal_form(const TreeMorphism& m);

/// Image tree of m: the face of target(m) that m factors through.
Tree face_part(const TreeMorphism& m);

/// Every subtree of t reachable by composing faces, t included, sorted by
/// labeled code.
std::vector<Tree> all_faces(const Tree& t);
bool is_face(const Tree& candidate, const Tree& t);
/// The inclusion candidate -> t. PreconditionError if not a face.
TreeMorphism face_inclusion(const Tree& candidate, const Tree& t);

/// Every arrow s -> t, sorted by edge map.
std::vector<TreeMorphism> hom_set(const Tree& s, const Tree& t);

}  // namespace dendrex
