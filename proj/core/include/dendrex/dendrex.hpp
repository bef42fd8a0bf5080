#pragma once

#include "dendrex/morphism.hpp"
#include "dendrex/presentation.hpp"

#include <span>
#include <string>
#include <vector>

namespace dendrex {

/// A tree redrawn as a directed graph: a vertex is added on top of every leaf
/// and one below the root, so every edge has both endpoints. Edges point
/// toward the root: source is the upper vertex, range the lower one.
struct DecoratedGraph {
    struct Edge {
        std::string name;
        std::size_t source;
        std::size_t range;
    };
    std::vector<std::string> vertices;
    std::vector<bool> inserted;
    std::vector<Edge> edges;
};

DecoratedGraph modify(const Tree& t);

/// True iff the edges lie on one directed path of modify(t), i.e. they form a
/// chain under the ancestor order. PreconditionError for an empty set or an
/// unknown edge.
bool coherent(const Tree& t, std::span<const std::string> edges);
bool coherent(const Tree& t, std::span<const EdgeId> edges);

/// One positive generator per edge (in edge order), summing to 1, with every
/// incoherent pair of edges multiplying to zero.
StarPresentation dendrex_presentation(const Tree& t);
/// The same relations with commuting generators.
StarPresentation abelian_dendrex(const Tree& t);

/// The contravariant image of f: a hom D(target f) -> D(source f), built by
/// composing the rules for the degeneracies, isomorphism and faces of f's
/// normal form, then verified.
StarHom induced_hom(const TreeMorphism& f);

/// Identity on generators D(t) -> D^ab(t).
StarHom abelianization(const Tree& t);

struct FunctorialityReport {
    std::size_t trees = 0;
    std::size_t morphisms = 0;
    std::size_t pairs = 0;
    /// First failure, empty when everything held.
    std::string failure;

    bool ok() const { return failure.empty(); }
};

/// Over every composable pair among shapes with <= max_edges edges, checks
/// that induced homs pass verify_hom and that D(g∘f) = D(f)∘D(g).
FunctorialityReport check_functoriality(std::size_t max_edges);

/// Identity hom on a presentation.
StarHom identity_hom(std::shared_ptr<const StarPresentation> p);

}  // namespace dendrex
