#pragma once

#include "dendrex/tree.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dendrex {

/// A unital *-algebra given by positive generators, unit-sum relations and
/// monomial-vanishing relations.
///
/// Monomials vanish according to a list of generator pairs: a monomial is zero
/// iff the set of generators it uses contains one of the pairs. That makes the
/// predicate depend only on the set and keeps it monotone.
struct StarPresentation {
    std::vector<std::string> generators;
    std::vector<bool> positive;
    /// Each generator satisfies ||q|| <= norm_bound.
    std::vector<int> norm_bound;
    /// Each entry lists generators whose sum is the unit.
    std::vector<std::vector<std::size_t>> unit_sums;
    /// Sorted pairs (i < j) with q_i q_j = q_j q_i = 0 in every monomial.
    std::vector<std::pair<std::size_t, std::size_t>> zero_pairs;
    bool commutative = false;
    /// Where the presentation came from, e.g. "dendrex" with the tree.
    std::string origin;
    std::optional<Tree> tree;

    std::size_t size() const { return generators.size(); }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t at(std::string_view name) const;
    bool is_zero_pair(std::size_t a, std::size_t b) const;
    /// True iff the monomial in these generators is forced to vanish.
    bool is_zero_monomial(std::span<const std::size_t> sequence) const;
    /// Pretty relation list, one per line.
    std::vector<std::string> relation_strings() const;

    friend bool operator==(const StarPresentation&, const StarPresentation&) = default;
};

/// Assignment of each source generator to a 0/1 sum of target generators.
struct StarHom {
    std::shared_ptr<const StarPresentation> source;
    std::shared_ptr<const StarPresentation> target;
    /// images[i] lists target indices (ascending, distinct); empty means 0.
    std::vector<std::vector<std::size_t>> images;
    std::string label;

    /// Same generator names on both sides and the same images by name.
    bool same_assignment(const StarHom& other) const;
    std::string image_string(std::size_t generator) const;
};

struct HomReport {
    bool ok = true;
    /// "positivity", "unit", "zero-monomial" or "commutativity".
    std::string relation;
    std::string witness;

    std::string message() const;
};

/// Checks that the assignment respects every defining relation of the
/// source, by expanding images into sums of target monomials. Zero sets of
/// size 2 up to `max_zero_length` are tried.
HomReport verify_hom(const StarHom& h, std::size_t max_zero_length = 3);

/// g ∘ f. Throws PreconditionError if the presentations do not match or a
/// coefficient would exceed 1.
StarHom compose(const StarHom& g, const StarHom& f);

/// Every target generator occurs in some image.
bool is_generator_surjective(const StarHom& h);

}  // namespace dendrex
