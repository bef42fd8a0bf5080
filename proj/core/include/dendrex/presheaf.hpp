#pragma once

#include "dendrex/omega.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dendrex {

/// A dendroidal set truncated to trees with at most `bound` edges.
///
/// Values live on the canonical objects of the truncation. Elements are
/// indices into values(obj); their ids are opaque strings. The structure is
/// fixed by one table per generating arrow g: S -> T, mapping X(T) to X(S).
class FinDendroidalSet {
public:
    /// Checks the tables with presheaf_failure() and throws ValidationError
    /// naming the first failure.
    static std::shared_ptr<const FinDendroidalSet> from_tables(
        std::shared_ptr<const OmegaTruncation> omega, std::vector<std::vector<std::string>> values,
        std::vector<std::vector<std::size_t>> tables, std::string name);
    /// No checks beyond table shapes. For tables built from actual arrows.
    static std::shared_ptr<const FinDendroidalSet> trusted(
        std::shared_ptr<const OmegaTruncation> omega, std::vector<std::vector<std::string>> values,
        std::vector<std::vector<std::size_t>> tables, std::string name);

    const OmegaTruncation& omega() const { return *omega_; }
    std::shared_ptr<const OmegaTruncation> omega_ptr() const { return omega_; }
    std::size_t bound() const { return omega_->bound(); }
    const std::string& name() const { return name_; }

    const std::vector<std::string>& values(std::size_t object) const { return values_[object]; }
    std::optional<std::size_t> find_value(std::size_t object, std::string_view id) const;
    std::size_t total_size() const;
    const std::vector<std::size_t>& table(std::size_t generator) const { return tables_[generator]; }
    const std::vector<std::vector<std::string>>& all_values() const { return values_; }
    const std::vector<std::vector<std::size_t>>& all_tables() const { return tables_; }

    /// X(f)(x) for f: S -> T and x in X(T).
    std::size_t act(MorphismRef f, std::size_t x) const;
    /// x lies in the image of a degeneracy.
    bool is_degenerate(std::size_t object, std::size_t x) const;

private:
    FinDendroidalSet() = default;

    std::shared_ptr<const OmegaTruncation> omega_;
    std::vector<std::vector<std::string>> values_;
    std::vector<std::vector<std::size_t>> tables_;
    std::string name_;
};

/// Empty if the tables form a presheaf, otherwise a description of the first
/// failure: a shape problem, an identity instance, or a composite g then h
/// whose action differs from the two actions in turn.
std::optional<std::string> presheaf_failure(const OmegaTruncation& omega,
                                            const std::vector<std::vector<std::string>>& values,
                                            const std::vector<std::vector<std::size_t>>& tables);

/// Element-wise inclusion X -> Y: map[obj][x] is the index of x in Y(obj).
struct Inclusion {
    std::shared_ptr<const FinDendroidalSet> sub;
    std::shared_ptr<const FinDendroidalSet> super;
    std::vector<std::vector<std::size_t>> map;
};

/// Checks injectivity and compatibility with every action. Throws
/// PreconditionError on a containment violation.
Inclusion make_inclusion(std::shared_ptr<const FinDendroidalSet> sub,
                         std::shared_ptr<const FinDendroidalSet> super,
                         std::vector<std::vector<std::size_t>> map);

/// Omega[t]: values are hom sets into t, acted on by precomposition.
std::shared_ptr<const FinDendroidalSet> representable(const Tree& t, std::size_t bound);
/// The arrow of Omega[t] at object S as an actual morphism into t.
TreeMorphism yoneda_element(const FinDendroidalSet& rep, const Tree& t, std::size_t object,
                            std::size_t x);

/// The union of the images of all elementary faces of t, inside Omega[t].
/// PreconditionError for the unit tree.
Inclusion boundary(const Tree& t, std::size_t bound);
/// As boundary, leaving out the inner face at `edge`. PreconditionError
/// unless the edge is inner.
Inclusion inner_horn(const Tree& t, std::string_view edge, std::size_t bound);
/// The sub-presheaf with no elements.
Inclusion empty_sub(std::shared_ptr<const FinDendroidalSet> super);

struct NormalityReport {
    bool ok = true;
    std::string object;     // canonical code
    std::string element;
    std::string automorphism;  // edge map of the stabilizing automorphism
};

/// Aut(T) acts freely on Y(T) minus X(T) for every T in the bound.
NormalityReport is_normal_mono(const Inclusion& inc);

/// The category of elements. Objects are (object, element) pairs, arrows
/// every f: S -> T with X(f)(x_T) = x_S. With include_degenerate false only
/// nondegenerate elements and the arrows between them are kept.
struct ElementCategory {
    struct Object {
        std::size_t tree;
        std::size_t element;
    };
    struct Arrow {
        MorphismRef ref;
        std::size_t from;
        std::size_t to;
    };
    std::shared_ptr<const FinDendroidalSet> presheaf;
    bool include_degenerate = true;
    std::vector<Object> objects;
    std::vector<Arrow> arrows;

    std::optional<std::size_t> find_object(std::size_t tree, std::size_t element) const;
    std::string object_label(std::size_t i) const;
};

ElementCategory category_of_elements(std::shared_ptr<const FinDendroidalSet> x,
                                     bool include_degenerate = true);

/// Readable id of an edge map between two named trees, e.g. "e0>r,e1>a".
std::string edge_map_id(const Tree& s, const Tree& t, const EdgeMap& map);

}  // namespace dendrex
