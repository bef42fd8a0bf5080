#pragma once

#include "dendrex/dendrex.hpp"
#include "dendrex/presheaf.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dendrex {

/// The diagram whose colimit is the drawing of a dendroidal set: D(T) at
/// every element (T, x), and the induced hom D(T) -> D(S) on every arrow
/// (S, x_S) -> (T, x_T) of the category of elements.
struct Drawing {
    ElementCategory index;
    /// One presentation per index object; objects over the same tree share it.
    std::vector<std::shared_ptr<const StarPresentation>> nodes;
    /// One hom per index arrow, from nodes[arrow.to] to nodes[arrow.from].
    std::vector<StarHom> arrows;
    /// Short description of each arrow's normal form, e.g. "degeneracy+face".
    std::vector<std::string> kinds;
};

Drawing draw(std::shared_ptr<const FinDendroidalSet> x, bool include_degenerate = true);

struct DrawingReport {
    bool ok = true;
    std::string message;
    std::size_t arrows_checked = 0;
    std::size_t squares_checked = 0;
};

/// Re-checks every arrow (endpoints, relations, identities) and every
/// composable pair of arrows. Reports the first failure.
DrawingReport verify_drawing(const Drawing& d);

struct DiagramMapReport {
    bool ok = true;
    std::string message;
    std::vector<std::size_t> object_map;
    std::vector<std::size_t> arrow_map;
};

/// The map of diagrams draw(X) -> draw(Y) induced by an inclusion X -> Y.
/// Checks that it is defined, injective on objects and arrows, and carries
/// the same presentations and homs.
DiagramMapReport induced_diagram_map(const Drawing& sub, const Drawing& super, const Inclusion& inc);

/// Normal-form summary of an arrow: "identity", or the parts present among
/// "degeneracy", "isomorphism" and "face", joined by '+'.
std::string arrow_kind(const TreeMorphism& m);

/// Graphviz rendering. Nodes are labelled by tree code and element, edges
/// point along the homs and are labelled by arrow kind.
std::string to_dot(const Drawing& d);

/// What edge_homs enumerates, for output metadata.
inline constexpr std::string_view edge_hom_scope =
    "edge homs only: every generator goes to 0 or a sum of distinct target generators; "
    "general *-homomorphisms are not enumerated";

/// Every assignment from a's generators to 0/1 sums of b's generators that
/// passes verify_hom, in ascending order of images. Both presentations must
/// have a single unit sum over all generators.
std::vector<StarHom> edge_homs(std::shared_ptr<const StarPresentation> a,
                               std::shared_ptr<const StarPresentation> b);

/// Readable id of an edge hom, e.g. "e0>e0+e1,e1>0".
std::string edge_hom_id(const StarHom& h);

/// T -> edge_homs(a, D(T)) on the truncation, acted on by composing with
/// induced homs. Validated like any table-built presheaf.
std::shared_ptr<const FinDendroidalSet> dendraw_probe(std::shared_ptr<const StarPresentation> a,
                                                      std::size_t bound);

}  // namespace dendrex
