#include "dendrex/drawing.hpp"

#include "dendrex/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace dendrex {

namespace {

using ArrowKey = std::tuple<MorphismRef, std::size_t, std::size_t>;

std::string arrow_label(const Drawing& d, std::size_t i) {
    const auto& a = d.index.arrows[i];
    return "arrow " + std::to_string(i) + " (" + d.index.object_label(a.from) + " -> " +
           d.index.object_label(a.to) + ")";
}

bool is_identity_assignment(const StarHom& h) {
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        if (h.images[i] != std::vector<std::size_t>{i}) {
            return false;
        }
    }
    return true;
}

bool has_single_full_unit(const StarPresentation& p) {
    if (p.unit_sums.size() != 1) {
        return false;
    }
    auto sum = p.unit_sums.front();
    std::sort(sum.begin(), sum.end());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (sum[i] != i) {
            return false;
        }
    }
    return sum.size() == p.size();
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

}  // namespace

std::string arrow_kind(const TreeMorphism& m) {
    if (m.is_identity()) {
        return "identity";
    }
    NormalForm const nf = normal_form(m);
    std::vector<std::string> parts;
    if (!nf.degeneracies.empty()) {
        parts.emplace_back("degeneracy");
    }
    if (!nf.isomorphism.is_identity()) {
        parts.emplace_back("isomorphism");
    }
    if (!nf.faces.empty()) {
        parts.emplace_back("face");
    }
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : "+") + p;
    }
    return out;
}

Drawing draw(std::shared_ptr<const FinDendroidalSet> x, bool include_degenerate) {
    Drawing d;
    d.index = category_of_elements(x, include_degenerate);
    const OmegaTruncation& omega = x->omega();
    std::map<std::size_t, std::shared_ptr<const StarPresentation>> by_tree;
    for (const auto& o : d.index.objects) {
        auto& p = by_tree[o.tree];
        if (!p) {
            p = std::make_shared<const StarPresentation>(dendrex_presentation(omega.object(o.tree)));
        }
        d.nodes.push_back(p);
    }
    std::map<MorphismRef, std::pair<StarHom, std::string>> cache;
    for (const auto& a : d.index.arrows) {
        auto it = cache.find(a.ref);
        if (it == cache.end()) {
            const TreeMorphism& m = omega.morphism(a.ref);
            StarHom h = induced_hom(m);
            h.source = by_tree.at(a.ref.target);
            h.target = by_tree.at(a.ref.source);
            it = cache.emplace(a.ref, std::make_pair(std::move(h), arrow_kind(m))).first;
        }
        d.arrows.push_back(it->second.first);
        d.kinds.push_back(it->second.second);
    }
    return d;
}

DrawingReport verify_drawing(const Drawing& d) {
    DrawingReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.message = std::move(msg);
        return r;
    };
    if (d.nodes.size() != d.index.objects.size() || d.arrows.size() != d.index.arrows.size()) {
        return fail("drawing has the wrong number of nodes or arrows");
    }
    if (d.index.arrows.empty()) {
        return r;
    }
    const OmegaTruncation& omega = d.index.presheaf->omega();
    std::map<ArrowKey, std::size_t> lookup;
    std::map<MorphismRef, std::size_t> first_with_ref;
    for (std::size_t i = 0; i < d.arrows.size(); ++i) {
        const auto& a = d.index.arrows[i];
        const StarHom& h = d.arrows[i];
        if (!(*h.source == *d.nodes[a.to]) || !(*h.target == *d.nodes[a.from])) {
            return fail(arrow_label(d, i) + ": hom endpoints do not match the nodes");
        }
        HomReport const hr = verify_hom(h);
        if (!hr.ok) {
            return fail(arrow_label(d, i) + ": " + hr.message());
        }
        if (a.ref == omega.identity(a.ref.source) && !is_identity_assignment(h)) {
            return fail(arrow_label(d, i) + ": identity arrow carries a non-identity hom");
        }
        // Homs depend on the arrow of the tree category only.
        auto [it, fresh] = first_with_ref.emplace(a.ref, i);
        if (!fresh && !d.arrows[it->second].same_assignment(h)) {
            return fail(arrow_label(d, i) + ": differs from " + arrow_label(d, it->second) +
                        " over the same tree map");
        }
        lookup.emplace(ArrowKey{a.ref, a.from, a.to}, i);
        ++r.arrows_checked;
    }
    std::vector<std::vector<std::size_t>> outgoing(d.index.objects.size());
    for (std::size_t i = 0; i < d.index.arrows.size(); ++i) {
        outgoing[d.index.arrows[i].from].push_back(i);
    }
    // With homs a function of the tree map, one square per pair of maps.
    std::map<std::pair<MorphismRef, MorphismRef>, bool> done;
    for (std::size_t i = 0; i < d.index.arrows.size(); ++i) {
        const auto& f = d.index.arrows[i];
        for (std::size_t j : outgoing[f.to]) {
            const auto& g = d.index.arrows[j];
            if (!done.emplace(std::make_pair(f.ref, g.ref), true).second) {
                continue;
            }
            MorphismRef const gf = omega.compose(g.ref, f.ref);
            auto it = lookup.find(ArrowKey{gf, f.from, g.to});
            if (it == lookup.end()) {
                return fail("composite of " + arrow_label(d, i) + " and " + arrow_label(d, j) +
                            " is missing from the index");
            }
            StarHom const expected = compose(d.arrows[i], d.arrows[j]);
            if (!expected.same_assignment(d.arrows[it->second])) {
                return fail(arrow_label(d, it->second) + ": hom is not the composite of " + arrow_label(d, i) +
                            " and " + arrow_label(d, j));
            }
            ++r.squares_checked;
        }
    }
    return r;
}

DiagramMapReport induced_diagram_map(const Drawing& sub, const Drawing& super, const Inclusion& inc) {
    DiagramMapReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.message = std::move(msg);
        return r;
    };
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> super_objects;
    for (std::size_t i = 0; i < super.index.objects.size(); ++i) {
        super_objects.emplace(std::make_pair(super.index.objects[i].tree, super.index.objects[i].element), i);
    }
    std::vector<bool> hit(super.index.objects.size(), false);
    for (std::size_t i = 0; i < sub.index.objects.size(); ++i) {
        const auto& o = sub.index.objects[i];
        auto it = super_objects.find({o.tree, inc.map.at(o.tree).at(o.element)});
        if (it == super_objects.end()) {
            return fail("object " + sub.index.object_label(i) + " has no image");
        }
        if (hit[it->second]) {
            return fail("two objects map to " + super.index.object_label(it->second));
        }
        hit[it->second] = true;
        if (!(*sub.nodes[i] == *super.nodes[it->second])) {
            return fail("object " + sub.index.object_label(i) + " changes its presentation");
        }
        r.object_map.push_back(it->second);
    }
    std::map<ArrowKey, std::size_t> super_arrows;
    for (std::size_t i = 0; i < super.index.arrows.size(); ++i) {
        const auto& a = super.index.arrows[i];
        super_arrows.emplace(ArrowKey{a.ref, a.from, a.to}, i);
    }
    std::vector<bool> used(super.index.arrows.size(), false);
    for (std::size_t i = 0; i < sub.index.arrows.size(); ++i) {
        const auto& a = sub.index.arrows[i];
        auto it = super_arrows.find(ArrowKey{a.ref, r.object_map[a.from], r.object_map[a.to]});
        if (it == super_arrows.end()) {
            return fail(arrow_label(sub, i) + " has no image");
        }
        if (used[it->second]) {
            return fail("two arrows map to " + arrow_label(super, it->second));
        }
        used[it->second] = true;
        if (!sub.arrows[i].same_assignment(super.arrows[it->second])) {
            return fail(arrow_label(sub, i) + " changes its hom");
        }
        r.arrow_map.push_back(it->second);
    }
    return r;
}

std::string to_dot(const Drawing& d) {
    std::ostringstream out;
    out << "digraph drawing {\n";
    for (std::size_t i = 0; i < d.index.objects.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(d.index.object_label(i)) << "\"];\n";
    }
    for (std::size_t i = 0; i < d.index.arrows.size(); ++i) {
        const auto& a = d.index.arrows[i];
        out << "  n" << a.to << " -> n" << a.from << " [label=\"" << d.kinds[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string edge_hom_id(const StarHom& h) {
    std::string out;
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        out += (i ? "," : "") + h.source->generators[i] + ">";
        if (h.images[i].empty()) {
            out += "0";
        }
        for (std::size_t k = 0; k < h.images[i].size(); ++k) {
            out += (k ? "+" : "") + h.target->generators[h.images[i][k]];
        }
    }
    return out;
}

std::vector<StarHom> edge_homs(std::shared_ptr<const StarPresentation> a,
                               std::shared_ptr<const StarPresentation> b) {
    if (!has_single_full_unit(*a) || !has_single_full_unit(*b)) {
        throw PreconditionError("edge_homs: presentations need one unit sum over all generators");
    }
    // The unit must go to the unit, and images are 0/1 sums, so the images
    // partition b's generators: enumerate the owner of each target generator.
    std::size_t const na = a->size();
    std::size_t const nb = b->size();
    double const count = std::pow(static_cast<double>(na), static_cast<double>(nb));
    if (count > 1e7) {
        throw ResourceError("edge_homs: search space too large");
    }
    std::vector<StarHom> out;
    std::vector<std::size_t> owner(nb, 0);
    while (true) {
        StarHom h{a, b, std::vector<std::vector<std::size_t>>(na), "edge"};
        for (std::size_t j = 0; j < nb; ++j) {
            h.images[owner[j]].push_back(j);
        }
        if (verify_hom(h).ok) {
            out.push_back(std::move(h));
        }
        std::size_t j = 0;
        while (j < nb && ++owner[j] == na) {
            owner[j++] = 0;
        }
        if (j == nb) {
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const StarHom& x, const StarHom& y) { return x.images < y.images; });
    return out;
}

std::shared_ptr<const FinDendroidalSet> dendraw_probe(std::shared_ptr<const StarPresentation> a,
                                                      std::size_t bound) {
    auto omega = OmegaTruncation::get(bound);
    std::vector<std::vector<StarHom>> homs;
    std::vector<std::map<std::vector<std::vector<std::size_t>>, std::size_t>> by_images;
    std::vector<std::vector<std::string>> values;
    for (std::size_t o = 0; o < omega->object_count(); ++o) {
        auto b = std::make_shared<const StarPresentation>(dendrex_presentation(omega->object(o)));
        homs.push_back(edge_homs(a, b));
        values.emplace_back();
        by_images.emplace_back();
        for (const StarHom& h : homs.back()) {
            by_images.back().emplace(h.images, values.back().size());
            values.back().push_back(edge_hom_id(h));
        }
    }
    std::vector<std::vector<std::size_t>> tables;
    for (const auto& gen : omega->generators()) {
        StarHom const pull = induced_hom(omega->morphism(gen.ref));
        tables.emplace_back();
        for (const StarHom& h : homs[gen.ref.target]) {
            StarHom const moved = compose(pull, h);
            auto it = by_images[gen.ref.source].find(moved.images);
            if (it == by_images[gen.ref.source].end()) {
                throw InternalError("dendraw_probe: pulled-back hom is not an edge hom");
            }
            tables.back().push_back(it->second);
        }
    }
    return FinDendroidalSet::from_tables(std::move(omega), std::move(values), std::move(tables),
                                         "dendraw probe " + a->origin);
}

}  // namespace dendrex
