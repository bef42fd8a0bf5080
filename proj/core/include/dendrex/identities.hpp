#pragma once

#include "dendrex/morphism.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dendrex {

/// The seven face/degeneracy identities, numbered I to VII.
enum class IdentityKind { I = 1, II, III, IV, V, VI, VII };

std::string identity_label(IdentityKind kind);

/// One concrete instance: two composable paths that must agree.
///
/// Paths are in application order. For VII the right side is the renaming
/// isomorphism T' -> T\v, since the two trees agree only up to the name of
/// the merged edge.
struct IdentityInstance {
    IdentityKind kind;
    std::string description;
    std::vector<TreeMorphism> lhs;
    std::vector<TreeMorphism> rhs;
    /// Set when the instance is an existence claim that failed (IV).
    std::string existence_failure;

    TreeMorphism lhs_composite() const;
    TreeMorphism rhs_composite() const;
    bool holds() const;
};

/// Every applicable instance on t. Outer-face identities need at least three
/// vertices, as stated; IV with fewer vertices is an existence check only.
std::vector<IdentityInstance> identity_instances(const Tree& t);

struct IdentityReport {
    std::array<std::size_t, 7> checked{};
    std::vector<IdentityInstance> failures;
    std::size_t trees = 0;

    std::size_t total() const;
    bool ok() const { return failures.empty(); }
};

IdentityReport check_identities(const Tree& t);
/// Runs every instance on one representative per shape with <= max_edges
/// edges.
IdentityReport check_identities_up_to(std::size_t max_edges);

}  // namespace dendrex
