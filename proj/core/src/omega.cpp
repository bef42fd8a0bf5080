#include "dendrex/omega.hpp"

#include "dendrex/error.hpp"

#include <algorithm>

namespace dendrex {

namespace {

std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex m;
    return m;
}

EdgeMap invert(const EdgeMap& iso) {
    EdgeMap inv(iso.size());
    for (EdgeId e = 0; e < iso.size(); ++e) {
        inv[iso[e]] = e;
    }
    return inv;
}

}  // namespace

std::shared_ptr<const OmegaTruncation> OmegaTruncation::get(std::size_t bound) {
    static std::map<std::size_t, std::shared_ptr<const OmegaTruncation>> cache;
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(bound);
    if (it == cache.end()) {
        it = cache.emplace(bound, std::make_shared<const OmegaTruncation>(bound)).first;
    }
    return it->second;
}

OmegaTruncation::OmegaTruncation(std::size_t bound) : bound_(bound) {
    for (CanonicalTree& ct : enumerate_trees(bound)) {
        by_code_.emplace(ct.code, objects_.size());
        codes_.push_back(std::move(ct.code));
        objects_.push_back(std::move(ct.tree));
    }
    auto add = [&](MorphismRef ref, MapKind kind, std::string site) {
        if (generator_by_ref_.emplace(ref, generators_.size()).second) {
            generators_.push_back({ref, kind, std::move(site)});
        }
    };
    for (std::size_t t = 0; t < objects_.size(); ++t) {
        const Tree& tree = objects_[t];
        for (const ElementaryMap& f : elementary_faces(tree)) {
            std::size_t const s = object_of(f.map.source());
            TreeMorphism const theta = from_canonical(f.map.source());
            EdgeMap map(theta.edge_map().size());
            for (EdgeId e = 0; e < map.size(); ++e) {
                map[e] = f.map(theta(e));
            }
            add(*find(s, t, map), f.kind, f.site);
        }
        for (const ElementaryMap& d : elementary_degeneracies(tree)) {
            std::size_t const u = object_of(d.map.target());
            EdgeMap const back = invert(from_canonical(d.map.target()).edge_map());
            EdgeMap map(tree.edge_count());
            for (EdgeId e = 0; e < map.size(); ++e) {
                map[e] = back[d.map(e)];
            }
            add(*find(t, u, map), MapKind::degeneracy, d.site);
        }
        for (const EdgeMap& a : dendrex::automorphisms(tree)) {
            auto ref = *find(t, t, a);
            if (ref != identity(t)) {
                add(ref, MapKind::isomorphism, "");
            }
        }
    }
}

std::optional<std::size_t> OmegaTruncation::find_object(std::string_view code) const {
    auto it = by_code_.find(code);
    if (it == by_code_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t OmegaTruncation::object_of(const Tree& t) const {
    if (t.edge_count() > bound_) {
        throw PreconditionError("tree with " + std::to_string(t.edge_count()) +
                                " edges exceeds the bound " + std::to_string(bound_));
    }
    return *find_object(canonical_code(t));
}

const std::vector<TreeMorphism>& OmegaTruncation::block(std::size_t s, std::size_t t) const {
    std::lock_guard lock(cache_mutex());
    auto& slot = blocks_[{s, t}];
    if (!slot) {
        slot = std::make_unique<std::vector<TreeMorphism>>(hom_set(objects_[s], objects_[t]));
    }
    return *slot;
}

std::size_t OmegaTruncation::hom_size(std::size_t s, std::size_t t) const { return block(s, t).size(); }

const TreeMorphism& OmegaTruncation::morphism(MorphismRef r) const {
    return block(r.source, r.target).at(r.index);
}

std::optional<MorphismRef> OmegaTruncation::find(std::size_t s, std::size_t t, const EdgeMap& map) const {
    const auto& b = block(s, t);
    auto it = std::lower_bound(b.begin(), b.end(), map,
                               [](const TreeMorphism& m, const EdgeMap& key) { return m.edge_map() < key; });
    if (it == b.end() || it->edge_map() != map) {
        return std::nullopt;
    }
    return MorphismRef{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                       static_cast<std::uint32_t>(it - b.begin())};
}

MorphismRef OmegaTruncation::identity(std::size_t object) const {
    EdgeMap map(objects_[object].edge_count());
    for (EdgeId e = 0; e < map.size(); ++e) {
        map[e] = e;
    }
    return *find(object, object, map);
}

MorphismRef OmegaTruncation::compose(MorphismRef g, MorphismRef f) const {
    if (f.target != g.source) {
        throw PreconditionError("compose: arrows are not composable");
    }
    const TreeMorphism& mf = morphism(f);
    const TreeMorphism& mg = morphism(g);
    EdgeMap map(mf.edge_map().size());
    for (EdgeId e = 0; e < map.size(); ++e) {
        map[e] = mg(mf(e));
    }
    auto r = find(f.source, g.target, map);
    if (!r) {
        throw InternalError("compose: composite missing from hom set");
    }
    return *r;
}

std::vector<MorphismRef> OmegaTruncation::automorphisms(std::size_t object) const {
    std::vector<MorphismRef> out{identity(object)};
    for (const EdgeMap& a : dendrex::automorphisms(objects_[object])) {
        auto r = *find(object, object, a);
        if (r != out.front()) {
            out.push_back(r);
        }
    }
    return out;
}

std::optional<std::size_t> OmegaTruncation::generator_index(MorphismRef r) const {
    auto it = generator_by_ref_.find(r);
    if (it == generator_by_ref_.end()) {
        return std::nullopt;
    }
    return it->second;
}

TreeMorphism OmegaTruncation::from_canonical(const Tree& t) const {
    const Tree& c = objects_[object_of(t)];
    auto iso = isomorphism(c, t);
    if (!iso) {
        throw InternalError("from_canonical: representative is not isomorphic");
    }
    return TreeMorphism::trusted(std::make_shared<const Tree>(c), std::make_shared<const Tree>(t),
                                 std::move(*iso));
}

MorphismRef OmegaTruncation::canonical(const TreeMorphism& m) const {
    std::size_t const s = object_of(m.source());
    std::size_t const t = object_of(m.target());
    EdgeMap const in = from_canonical(m.source()).edge_map();
    EdgeMap const out = invert(from_canonical(m.target()).edge_map());
    EdgeMap map(in.size());
    for (EdgeId e = 0; e < map.size(); ++e) {
        map[e] = out[m(in[e])];
    }
    auto r = find(s, t, map);
    if (!r) {
        throw InternalError("canonical: transported arrow missing from hom set");
    }
    return *r;
}

const std::vector<std::size_t>& OmegaTruncation::decomposition(MorphismRef r) const {
    std::lock_guard lock(cache_mutex());
    if (auto it = decompositions_.find(r); it != decompositions_.end()) {
        return *it->second;
    }
    std::vector<std::size_t> out;
    const TreeMorphism& m = morphism(r);
    const Tree& s = objects_[r.source];
    if (auto g = generator_index(r)) {
        out = {*g};
    } else if (m.is_identity()) {
        // empty word
    } else if (!m.is_injective()) {
        // Peel the lowest collapsed vertex first.
        std::optional<EdgeId> lowest;
        for (EdgeId v : s.vertices()) {
            if (s.is_unary(v) && m(s.inputs(v)[0]) == m(v) &&
                (!lowest || s.depth(v) < s.depth(*lowest))) {
                lowest = v;
            }
        }
        TreeMorphism const sigma = degeneracy(s, s.name(*lowest));
        std::size_t const u = object_of(sigma.target());
        EdgeMap const back = invert(from_canonical(sigma.target()).edge_map());
        EdgeMap first(s.edge_count());
        EdgeMap rest(objects_[u].edge_count());
        for (EdgeId e = 0; e < s.edge_count(); ++e) {
            first[e] = back[sigma(e)];
            rest[first[e]] = m(e);
        }
        auto g = generator_index(*find(r.source, u, first));
        if (!g) {
            throw InternalError("decomposition: degeneracy is not a generator");
        }
        out.push_back(*g);
        const auto& tail = decomposition(*find(u, r.target, rest));
        out.insert(out.end(), tail.begin(), tail.end());
    } else if (!m.is_isomorphism()) {
        // Split off the outermost face of the normal form.
        NormalForm const nf = normal_form(m);
        const TreeMorphism& face = nf.faces.back().map;
        std::size_t const f = object_of(face.source());
        TreeMorphism const theta = from_canonical(face.source());
        EdgeMap const back = invert(theta.edge_map());
        EdgeMap gen_map(theta.edge_map().size());
        for (EdgeId e = 0; e < gen_map.size(); ++e) {
            gen_map[e] = face(theta(e));
        }
        std::vector<std::optional<EdgeId>> face_pre(objects_[r.target].edge_count());
        for (EdgeId e = 0; e < face.source().edge_count(); ++e) {
            face_pre[face(e)] = e;
        }
        EdgeMap rest(s.edge_count());
        for (EdgeId e = 0; e < s.edge_count(); ++e) {
            rest[e] = back[*face_pre[m(e)]];
        }
        auto g = generator_index(*find(f, r.target, gen_map));
        if (!g) {
            throw InternalError("decomposition: face is not a generator");
        }
        const auto& head = decomposition(*find(r.source, f, rest));
        out.assign(head.begin(), head.end());
        out.push_back(*g);
    } else {
        throw InternalError("decomposition: automorphism missing from generators");
    }
    auto& slot = decompositions_[r];
    slot = std::make_unique<std::vector<std::size_t>>(std::move(out));
    return *slot;
}

}  // namespace dendrex
