#pragma once

#include "dendrex/morphism.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dendrex {

/// Address of an arrow between canonical trees: the index pair of its
/// endpoints and its position in the (edge-map sorted) hom set.
struct MorphismRef {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const MorphismRef&, const MorphismRef&) = default;
};

/// The full subcategory of the tree category on one representative per shape
/// with at most `bound` edges. Hom sets and decompositions are computed on
/// first use and cached; all accessors are thread-safe.
class OmegaTruncation {
public:
    struct Generator {
        MorphismRef ref;
        MapKind kind;
        std::string site;  // as named in the target (faces) or source (degeneracies)
    };

    /// Shared instance per bound.
    static std::shared_ptr<const OmegaTruncation> get(std::size_t bound);

    explicit OmegaTruncation(std::size_t bound);

    std::size_t bound() const { return bound_; }
    std::size_t object_count() const { return objects_.size(); }
    const Tree& object(std::size_t i) const { return objects_[i]; }
    const std::string& code(std::size_t i) const { return codes_[i]; }
    std::optional<std::size_t> find_object(std::string_view code) const;
    /// Index of t's shape. PreconditionError if t exceeds the bound.
    std::size_t object_of(const Tree& t) const;

    std::size_t hom_size(std::size_t s, std::size_t t) const;
    const TreeMorphism& morphism(MorphismRef r) const;
    std::optional<MorphismRef> find(std::size_t s, std::size_t t, const EdgeMap& map) const;
    MorphismRef identity(std::size_t object) const;
    MorphismRef compose(MorphismRef g, MorphismRef f) const;
    /// All automorphisms of an object, identity first.
    std::vector<MorphismRef> automorphisms(std::size_t object) const;

    const std::vector<Generator>& generators() const { return generators_; }
    /// Generator indices whose composite is r, in application order.
    const std::vector<std::size_t>& decomposition(MorphismRef r) const;
    /// Index of the generator with this ref, if it is one.
    std::optional<std::size_t> generator_index(MorphismRef r) const;

    /// Transports an arbitrary arrow to canonical endpoints: the returned ref
    /// is iso(t) ∘ m ∘ iso(s)⁻¹ with iso(x) the deterministic isomorphism
    /// from x to its representative.
    MorphismRef canonical(const TreeMorphism& m) const;
    /// The deterministic isomorphism object(object_of(t)) -> t.
    TreeMorphism from_canonical(const Tree& t) const;

private:
    const std::vector<TreeMorphism>& block(std::size_t s, std::size_t t) const;

    std::size_t bound_;
    std::vector<Tree> objects_;
    std::vector<std::string> codes_;
    std::map<std::string, std::size_t, std::less<>> by_code_;
    std::vector<Generator> generators_;
    std::map<MorphismRef, std::size_t> generator_by_ref_;

    mutable std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<TreeMorphism>>> blocks_;
    mutable std::map<MorphismRef, std::unique_ptr<std::vector<std::size_t>>> decompositions_;
};

}  // namespace dendrex
