#include "dendrex/dendrex.hpp"

#include "dendrex/error.hpp"

#include <algorithm>

namespace dendrex {

namespace {

std::shared_ptr<const StarPresentation> shared_dendrex(const Tree& t) {
    return std::make_shared<const StarPresentation>(dendrex_presentation(t));
}

// D(target) -> D(source) for one generating map, from its kind alone.
StarHom elementary_hom(MapKind kind, const TreeMorphism& m,
                       std::shared_ptr<const StarPresentation> d_source,
                       std::shared_ptr<const StarPresentation> d_target) {
    const Tree& s = m.source();
    const Tree& t = m.target();
    StarHom h{std::move(d_target), std::move(d_source), {}, std::string(to_string(kind))};
    h.images.resize(t.edge_count());
    switch (kind) {
        case MapKind::degeneracy: {
            // The merged edge goes to the sum of the two edges it replaced.
            for (EdgeId x = 0; x < t.edge_count(); ++x) {
                if (auto same = s.find(t.name(x))) {
                    h.images[x] = {*same};
                }
            }
            for (EdgeId e = 0; e < s.edge_count(); ++e) {
                auto& img = h.images[m(e)];
                if (s.name(e) != t.name(m(e))) {
                    img.push_back(e);
                }
            }
            for (auto& img : h.images) {
                std::sort(img.begin(), img.end());
            }
            break;
        }
        case MapKind::inner_face:
        case MapKind::outer_face:
        case MapKind::corolla_face:
            // Removed edges go to zero, survivors to themselves.
            for (EdgeId x = 0; x < t.edge_count(); ++x) {
                if (auto kept = s.find(t.name(x))) {
                    h.images[x] = {*kept};
                }
            }
            break;
        case MapKind::isomorphism: {
            std::vector<EdgeId> inverse(t.edge_count());
            for (EdgeId e = 0; e < s.edge_count(); ++e) {
                inverse[m(e)] = e;
            }
            for (EdgeId x = 0; x < t.edge_count(); ++x) {
                h.images[x] = {inverse[x]};
            }
            break;
        }
    }
    return h;
}

StarPresentation base_presentation(const Tree& t) {
    StarPresentation p;
    std::size_t const n = t.edge_count();
    p.generators.assign(t.edge_names().begin(), t.edge_names().end());
    p.positive.assign(n, true);
    p.norm_bound.assign(n, 1);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = i;
    }
    p.unit_sums.push_back(std::move(all));
    for (EdgeId a = 0; a < n; ++a) {
        for (EdgeId b = a + 1; b < n; ++b) {
            if (!t.comparable(a, b)) {
                p.zero_pairs.emplace_back(a, b);
            }
        }
    }
    p.tree = t;
    return p;
}

}  // namespace

DecoratedGraph modify(const Tree& t) {
    DecoratedGraph g;
    std::vector<std::size_t> top(t.edge_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        top[e] = g.vertices.size();
        if (t.has_vertex(e)) {
            g.vertices.push_back("v(" + t.name(e) + ")");
            g.inserted.push_back(false);
        } else {
            g.vertices.push_back("tip(" + t.name(e) + ")");
            g.inserted.push_back(true);
        }
    }
    std::size_t const bottom = g.vertices.size();
    g.vertices.emplace_back("base");
    g.inserted.push_back(true);
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        auto p = t.parent(e);
        g.edges.push_back({t.name(e), top[e], p ? top[*p] : bottom});
    }
    return g;
}

bool coherent(const Tree& t, std::span<const EdgeId> edges) {
    if (edges.empty()) {
        throw PreconditionError("coherent: empty edge set");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] >= t.edge_count()) {
            throw PreconditionError("coherent: edge index out of range");
        }
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!t.comparable(edges[i], edges[j])) {
                return false;
            }
        }
    }
    return true;
}

bool coherent(const Tree& t, std::span<const std::string> edges) {
    std::vector<EdgeId> ids;
    for (const auto& n : edges) {
        ids.push_back(t.at(n));
    }
    return coherent(t, std::span<const EdgeId>(ids));
}

StarPresentation dendrex_presentation(const Tree& t) {
    StarPresentation p = base_presentation(t);
    p.origin = "dendrex " + labeled_code(t);
    return p;
}

StarPresentation abelian_dendrex(const Tree& t) {
    StarPresentation p = base_presentation(t);
    p.commutative = true;
    p.origin = "abelian_dendrex " + labeled_code(t);
    return p;
}

StarHom identity_hom(std::shared_ptr<const StarPresentation> p) {
    StarHom h{p, p, {}, "identity"};
    h.images.resize(p->size());
    for (std::size_t i = 0; i < p->size(); ++i) {
        h.images[i] = {i};
    }
    return h;
}

StarHom induced_hom(const TreeMorphism& f) {
    NormalForm const nf = normal_form(f);
    // Walk f's factors from the target back to the source, composing
    // contravariantly.
    auto current = shared_dendrex(f.target());
    StarHom out = identity_hom(current);
    auto step = [&](MapKind kind, const TreeMorphism& m) {
        auto d_source = shared_dendrex(m.source());
        StarHom const h = elementary_hom(kind, m, d_source, current);
        out = compose(h, out);
        current = d_source;
    };
    for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it) {
        step(it->kind, it->map);
    }
    step(MapKind::isomorphism, nf.isomorphism);
    for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it) {
        step(it->kind, it->map);
    }
    out.label = "induced";
    // The intermediate trees are rebuilt from f's own endpoints.
    out.source = shared_dendrex(f.target());
    out.target = shared_dendrex(f.source());
    HomReport const r = verify_hom(out);
    if (!r.ok) {
        throw InternalError("induced_hom failed verification: " + r.message());
    }
    return out;
}

StarHom abelianization(const Tree& t) {
    StarHom h = identity_hom(std::make_shared<const StarPresentation>(dendrex_presentation(t)));
    h.target = std::make_shared<const StarPresentation>(abelian_dendrex(t));
    h.label = "abelianization";
    return h;
}

}  // namespace dendrex

namespace dendrex {

namespace {

std::string describe(const TreeMorphism& f) {
    std::string out = canonical_code(f.source()) + " -> " + canonical_code(f.target()) + " {";
    for (EdgeId e = 0; e < f.edge_map().size(); ++e) {
        out += (e ? "," : "") + f.source().name(e) + ">" + f.target().name(f(e));
    }
    return out + "}";
}

}  // namespace

FunctorialityReport check_functoriality(std::size_t max_edges) {
    FunctorialityReport report;
    std::vector<Tree> trees;
    for (auto& c : enumerate_trees(max_edges)) {
        trees.push_back(std::move(c.tree));
    }
    report.trees = trees.size();
    std::size_t const n = trees.size();
    // homs[a][b] and their images under D, computed once.
    std::vector<std::vector<std::vector<TreeMorphism>>> homs(n, std::vector<std::vector<TreeMorphism>>(n));
    std::vector<std::vector<std::vector<StarHom>>> images(n, std::vector<std::vector<StarHom>>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            homs[a][b] = hom_set(trees[a], trees[b]);
            for (const auto& f : homs[a][b]) {
                StarHom h = induced_hom(f);
                HomReport const r = verify_hom(h);
                if (!r.ok && report.ok()) {
                    report.failure = "D(" + describe(f) + ") fails: " + r.message();
                }
                images[a][b].push_back(std::move(h));
            }
            report.morphisms += homs[a][b].size();
        }
    }
    for (std::size_t a = 0; a < n && report.ok(); ++a) {
        for (std::size_t b = 0; b < n && report.ok(); ++b) {
            for (std::size_t c = 0; c < n && report.ok(); ++c) {
                for (std::size_t i = 0; i < homs[a][b].size() && report.ok(); ++i) {
                    for (std::size_t j = 0; j < homs[b][c].size(); ++j) {
                        StarHom const lhs = induced_hom(compose(homs[b][c][j], homs[a][b][i]));
                        StarHom const rhs = compose(images[a][b][i], images[b][c][j]);
                        ++report.pairs;
                        if (!lhs.same_assignment(rhs)) {
                            report.failure = "D(g∘f) != D(f)∘D(g) for f = " + describe(homs[a][b][i]) +
                                             ", g = " + describe(homs[b][c][j]);
                            break;
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace dendrex
