#include "dendrex/presheaf.hpp"

#include "dendrex/error.hpp"
#include "dendrex/identities.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace dendrex {

namespace {

using Tables = std::vector<std::vector<std::size_t>>;
using Values = std::vector<std::vector<std::string>>;

std::size_t act_on(const OmegaTruncation& omega, const Tables& tables, MorphismRef f, std::size_t x) {
    const auto& word = omega.decomposition(f);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        x = tables[*it][x];
    }
    return x;
}

std::optional<std::string> shape_failure(const OmegaTruncation& omega, const Values& values,
                                         const Tables& tables) {
    if (values.size() != omega.object_count()) {
        return "expected values for " + std::to_string(omega.object_count()) + " trees";
    }
    for (std::size_t o = 0; o < values.size(); ++o) {
        std::set<std::string_view> seen;
        for (const auto& id : values[o]) {
            if (!seen.insert(id).second) {
                return "duplicate element '" + id + "' at " + omega.code(o);
            }
        }
    }
    if (tables.size() != omega.generators().size()) {
        return "expected " + std::to_string(omega.generators().size()) + " action tables";
    }
    for (std::size_t g = 0; g < tables.size(); ++g) {
        MorphismRef const r = omega.generators()[g].ref;
        if (tables[g].size() != values[r.target].size()) {
            return "table " + std::to_string(g) + " has the wrong length";
        }
        for (std::size_t y : tables[g]) {
            if (y >= values[r.source].size()) {
                return "table " + std::to_string(g) + " points outside the values at " +
                       omega.code(r.source);
            }
        }
    }
    return std::nullopt;
}

std::string arrow_string(const OmegaTruncation& omega, MorphismRef r) {
    const TreeMorphism& m = omega.morphism(r);
    return omega.code(r.source) + " -> " + omega.code(r.target) + " [" +
           edge_map_id(m.source(), m.target(), m.edge_map()) + "]";
}

// Restriction of Omega[t] to the elements flagged in `keep`.
Inclusion restrict_to(std::shared_ptr<const FinDendroidalSet> super,
                      const std::vector<std::vector<bool>>& keep, std::string name) {
    const OmegaTruncation& omega = super->omega();
    Values values(omega.object_count());
    std::vector<std::vector<std::size_t>> map(omega.object_count());
    std::vector<std::vector<std::size_t>> index(omega.object_count());
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        index[o].assign(super->values(o).size(), SIZE_MAX);
        for (std::size_t y = 0; y < super->values(o).size(); ++y) {
            if (keep[o][y]) {
                index[o][y] = map[o].size();
                map[o].push_back(y);
                values[o].push_back(super->values(o)[y]);
            }
        }
    }
    Tables tables(omega.generators().size());
    for (std::size_t g = 0; g < tables.size(); ++g) {
        MorphismRef const r = omega.generators()[g].ref;
        for (std::size_t y : map[r.target]) {
            std::size_t const img = index[r.source][super->table(g)[y]];
            if (img == SIZE_MAX) {
                throw InternalError("sub-presheaf is not closed under the action");
            }
            tables[g].push_back(img);
        }
    }
    auto sub = FinDendroidalSet::trusted(super->omega_ptr(), std::move(values), std::move(tables),
                                         std::move(name));
    return Inclusion{std::move(sub), std::move(super), std::move(map)};
}

Inclusion face_union(const Tree& t, std::size_t bound, std::optional<EdgeId> skip_inner,
                     std::string name) {
    auto super = representable(t, bound);
    const OmegaTruncation& omega = super->omega();
    std::vector<ElementaryMap> faces;
    for (ElementaryMap& f : elementary_faces(t)) {
        if (skip_inner && f.kind == MapKind::inner_face && f.site == t.name(*skip_inner)) {
            continue;
        }
        faces.push_back(std::move(f));
    }
    std::vector<std::vector<bool>> keep(omega.object_count());
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        keep[o].assign(super->values(o).size(), false);
        if (super->values(o).empty()) {
            continue;
        }
        std::vector<TreeMorphism> const homs = hom_set(omega.object(o), t);
        for (const ElementaryMap& f : faces) {
            for (const TreeMorphism& h : hom_set(omega.object(o), f.map.source())) {
                EdgeMap map(h.edge_map().size());
                for (EdgeId e = 0; e < map.size(); ++e) {
                    map[e] = f.map(h(e));
                }
                auto it = std::lower_bound(homs.begin(), homs.end(), map,
                                           [](const TreeMorphism& m, const EdgeMap& key) {
                                               return m.edge_map() < key;
                                           });
                keep[o][static_cast<std::size_t>(it - homs.begin())] = true;
            }
        }
    }
    return restrict_to(std::move(super), keep, std::move(name));
}

}  // namespace

std::optional<std::string> presheaf_failure(const OmegaTruncation& omega, const Values& values,
                                            const Tables& tables) {
    if (auto bad = shape_failure(omega, values, tables)) {
        return bad;
    }
    // Named identity instances first, for a readable report.
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        for (const IdentityInstance& inst : identity_instances(omega.object(o))) {
            if (!inst.existence_failure.empty()) {
                continue;
            }
            auto run = [&](const std::vector<TreeMorphism>& path, std::size_t x) {
                for (auto it = path.rbegin(); it != path.rend(); ++it) {
                    x = act_on(omega, tables, omega.canonical(*it), x);
                }
                return x;
            };
            std::size_t const top = omega.object_of(inst.lhs.back().target());
            for (std::size_t x = 0; x < values[top].size(); ++x) {
                if (run(inst.lhs, x) != run(inst.rhs, x)) {
                    return "identity " + identity_label(inst.kind) + " fails on " + inst.description +
                           " at element '" + values[top][x] + "'";
                }
            }
        }
    }
    // Every composite h . g with g a generator acts as g after h. By induction
    // on word length this makes the action a functor.
    for (std::size_t g = 0; g < tables.size(); ++g) {
        MorphismRef const gr = omega.generators()[g].ref;
        for (std::size_t c = 0; c < omega.object_count(); ++c) {
            if (values[c].empty()) {
                continue;
            }
            for (std::size_t i = 0; i < omega.hom_size(gr.target, c); ++i) {
                MorphismRef const h{gr.target, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(i)};
                MorphismRef const hg = omega.compose(h, gr);
                for (std::size_t x = 0; x < values[c].size(); ++x) {
                    if (act_on(omega, tables, hg, x) != tables[g][act_on(omega, tables, h, x)]) {
                        return "composite of " + arrow_string(omega, gr) + " then " + arrow_string(omega, h) +
                               " acts inconsistently on '" + values[c][x] + "'";
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::shared_ptr<const FinDendroidalSet> FinDendroidalSet::from_tables(
    std::shared_ptr<const OmegaTruncation> omega, Values values, Tables tables, std::string name) {
    if (auto bad = presheaf_failure(*omega, values, tables)) {
        throw ValidationError("not a presheaf: " + *bad);
    }
    return trusted(std::move(omega), std::move(values), std::move(tables), std::move(name));
}

std::shared_ptr<const FinDendroidalSet> FinDendroidalSet::trusted(
    std::shared_ptr<const OmegaTruncation> omega, Values values, Tables tables, std::string name) {
    if (auto bad = shape_failure(*omega, values, tables)) {
        throw ValidationError("malformed presheaf tables: " + *bad);
    }
    std::shared_ptr<FinDendroidalSet> x(new FinDendroidalSet());
    x->omega_ = std::move(omega);
    x->values_ = std::move(values);
    x->tables_ = std::move(tables);
    x->name_ = std::move(name);
    return x;
}

std::optional<std::size_t> FinDendroidalSet::find_value(std::size_t object, std::string_view id) const {
    const auto& v = values_.at(object);
    auto it = std::find(v.begin(), v.end(), id);
    if (it == v.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - v.begin());
}

std::size_t FinDendroidalSet::total_size() const {
    std::size_t n = 0;
    for (const auto& v : values_) {
        n += v.size();
    }
    return n;
}

std::size_t FinDendroidalSet::act(MorphismRef f, std::size_t x) const {
    if (x >= values_.at(f.target).size()) {
        throw PreconditionError("act: element index out of range");
    }
    return act_on(*omega_, tables_, f, x);
}

bool FinDendroidalSet::is_degenerate(std::size_t object, std::size_t x) const {
    const auto& gens = omega_->generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].kind == MapKind::degeneracy && gens[g].ref.source == object) {
            const auto& t = tables_[g];
            if (std::find(t.begin(), t.end(), x) != t.end()) {
                return true;
            }
        }
    }
    return false;
}

Inclusion make_inclusion(std::shared_ptr<const FinDendroidalSet> sub,
                         std::shared_ptr<const FinDendroidalSet> super,
                         std::vector<std::vector<std::size_t>> map) {
    if (sub->omega_ptr() != super->omega_ptr()) {
        throw PreconditionError("inclusion: presheaves have different bounds");
    }
    const OmegaTruncation& omega = super->omega();
    if (map.size() != omega.object_count()) {
        throw PreconditionError("inclusion: one map per tree is required");
    }
    for (std::size_t o = 0; o < map.size(); ++o) {
        if (map[o].size() != sub->values(o).size()) {
            throw PreconditionError("inclusion: map at " + omega.code(o) + " has the wrong length");
        }
        std::set<std::size_t> seen;
        for (std::size_t y : map[o]) {
            if (y >= super->values(o).size() || !seen.insert(y).second) {
                throw PreconditionError("inclusion: map at " + omega.code(o) + " is not injective");
            }
        }
    }
    for (std::size_t g = 0; g < omega.generators().size(); ++g) {
        MorphismRef const r = omega.generators()[g].ref;
        for (std::size_t x = 0; x < map[r.target].size(); ++x) {
            if (super->table(g)[map[r.target][x]] != map[r.source][sub->table(g)[x]]) {
                throw PreconditionError("inclusion: not compatible with " + arrow_string(omega, r) +
                                        " at '" + sub->values(r.target)[x] + "'");
            }
        }
    }
    return Inclusion{std::move(sub), std::move(super), std::move(map)};
}

std::string edge_map_id(const Tree& s, const Tree& t, const EdgeMap& map) {
    std::string out;
    for (EdgeId e = 0; e < map.size(); ++e) {
        out += (e ? "," : "") + s.name(e) + ">" + t.name(map[e]);
    }
    return out;
}

std::shared_ptr<const FinDendroidalSet> representable(const Tree& t, std::size_t bound) {
    if (t.edge_count() > bound) {
        throw PreconditionError("representable: tree has more edges than the bound");
    }
    auto omega = OmegaTruncation::get(bound);
    std::vector<std::vector<TreeMorphism>> homs;
    Values values;
    for (std::size_t o = 0; o < omega->object_count(); ++o) {
        homs.push_back(hom_set(omega->object(o), t));
        values.emplace_back();
        for (const TreeMorphism& m : homs.back()) {
            values.back().push_back(edge_map_id(m.source(), t, m.edge_map()));
        }
    }
    Tables tables;
    for (const auto& gen : omega->generators()) {
        const TreeMorphism& g = omega->morphism(gen.ref);
        const auto& into = homs[gen.ref.source];
        tables.emplace_back();
        for (const TreeMorphism& m : homs[gen.ref.target]) {
            EdgeMap map(g.edge_map().size());
            for (EdgeId e = 0; e < map.size(); ++e) {
                map[e] = m(g(e));
            }
            auto it = std::lower_bound(into.begin(), into.end(), map,
                                       [](const TreeMorphism& a, const EdgeMap& key) { return a.edge_map() < key; });
            tables.back().push_back(static_cast<std::size_t>(it - into.begin()));
        }
    }
    return FinDendroidalSet::trusted(std::move(omega), std::move(values), std::move(tables),
                                     "representable " + labeled_code(t));
}

TreeMorphism yoneda_element(const FinDendroidalSet& rep, const Tree& t, std::size_t object, std::size_t x) {
    std::vector<TreeMorphism> homs = hom_set(rep.omega().object(object), t);
    if (x >= homs.size() || rep.values(object).size() != homs.size()) {
        throw PreconditionError("yoneda_element: not an element of the representable on this tree");
    }
    return std::move(homs[x]);
}

Inclusion boundary(const Tree& t, std::size_t bound) {
    if (t.vertex_count() == 0) {
        throw PreconditionError("boundary: the unit tree has no faces");
    }
    return face_union(t, bound, std::nullopt, "boundary " + labeled_code(t));
}

Inclusion inner_horn(const Tree& t, std::string_view edge, std::size_t bound) {
    auto e = t.find(edge);
    if (!e || !t.is_inner(*e)) {
        throw PreconditionError("inner_horn: '" + std::string(edge) + "' is not an inner edge");
    }
    return face_union(t, bound, e, "horn " + std::string(edge) + " " + labeled_code(t));
}

Inclusion empty_sub(std::shared_ptr<const FinDendroidalSet> super) {
    std::vector<std::vector<bool>> keep;
    for (std::size_t o = 0; o < super->omega().object_count(); ++o) {
        keep.emplace_back(super->values(o).size(), false);
    }
    std::string name = "empty in " + super->name();
    return restrict_to(std::move(super), keep, std::move(name));
}

NormalityReport is_normal_mono(const Inclusion& inc) {
    const FinDendroidalSet& y = *inc.super;
    const OmegaTruncation& omega = y.omega();
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        std::vector<bool> inside(y.values(o).size(), false);
        for (std::size_t x : inc.map[o]) {
            inside[x] = true;
        }
        auto auts = omega.automorphisms(o);
        for (std::size_t x = 0; x < inside.size(); ++x) {
            if (inside[x]) {
                continue;
            }
            for (std::size_t a = 1; a < auts.size(); ++a) {
                if (y.act(auts[a], x) == x) {
                    const TreeMorphism& m = omega.morphism(auts[a]);
                    return {false, omega.code(o), y.values(o)[x], edge_map_id(m.source(), m.target(), m.edge_map())};
                }
            }
        }
    }
    return {};
}

std::optional<std::size_t> ElementCategory::find_object(std::size_t tree, std::size_t element) const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i].tree == tree && objects[i].element == element) {
            return i;
        }
    }
    return std::nullopt;
}

std::string ElementCategory::object_label(std::size_t i) const {
    const Object& o = objects.at(i);
    return presheaf->omega().code(o.tree) + " : " + presheaf->values(o.tree)[o.element];
}

ElementCategory category_of_elements(std::shared_ptr<const FinDendroidalSet> x, bool include_degenerate) {
    ElementCategory cat;
    cat.presheaf = x;
    cat.include_degenerate = include_degenerate;
    const OmegaTruncation& omega = x->omega();
    std::vector<std::vector<std::size_t>> id(omega.object_count());
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        id[o].assign(x->values(o).size(), SIZE_MAX);
        for (std::size_t e = 0; e < x->values(o).size(); ++e) {
            if (include_degenerate || !x->is_degenerate(o, e)) {
                id[o][e] = cat.objects.size();
                cat.objects.push_back({o, e});
            }
        }
    }
    for (std::size_t s = 0; s < omega.object_count(); ++s) {
        if (x->values(s).empty()) {
            continue;
        }
        for (std::size_t t = 0; t < omega.object_count(); ++t) {
            if (x->values(t).empty()) {
                continue;
            }
            for (std::size_t i = 0; i < omega.hom_size(s, t); ++i) {
                MorphismRef const r{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                                    static_cast<std::uint32_t>(i)};
                for (std::size_t xt = 0; xt < x->values(t).size(); ++xt) {
                    std::size_t const from = id[s][x->act(r, xt)];
                    std::size_t const to = id[t][xt];
                    if (from != SIZE_MAX && to != SIZE_MAX) {
                        cat.arrows.push_back({r, from, to});
                    }
                }
            }
        }
    }
    return cat;
}

}  // namespace dendrex
