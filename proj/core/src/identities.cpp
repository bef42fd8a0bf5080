#include "dendrex/identities.hpp"

#include "dendrex/error.hpp"

namespace dendrex {

namespace {

TreeMorphism compose_path(const std::vector<TreeMorphism>& path) {
    if (path.empty()) {
        throw InternalError("identity instance with an empty path");
    }
    TreeMorphism out = path.front();
    for (std::size_t i = 1; i < path.size(); ++i) {
        out = compose(path[i], out);
    }
    return out;
}

bool has_outer(const Tree& t, std::string_view v) {
    auto id = t.find(v);
    return id && has_outer_face(t, *id);
}

// The vertex on the other end of inner edge e from v.
EdgeId other_vertex(const Tree& t, EdgeId e, EdgeId v) { return e == v ? *t.parent(e) : e; }

// The map T' -> T\v that keeps every name except `survivor`, which becomes
// the merged edge.
TreeMorphism renaming(const Tree& from, const Tree& to, std::string_view survivor,
                      std::string_view merged) {
    EdgeMap map(from.edge_count());
    for (EdgeId e = 0; e < from.edge_count(); ++e) {
        map[e] = to.at(from.name(e) == survivor ? merged : std::string_view(from.name(e)));
    }
    auto m = TreeMorphism::trusted(std::make_shared<const Tree>(from),
                                   std::make_shared<const Tree>(to), std::move(map));
    if (!m.is_isomorphism()) {
        throw InternalError("renaming is not an isomorphism");
    }
    return m;
}

void add_inner_pairs(const Tree& t, std::vector<IdentityInstance>& out) {
    auto const inner = t.inner_edges();
    for (std::size_t i = 0; i < inner.size(); ++i) {
        for (std::size_t j = i + 1; j < inner.size(); ++j) {
            std::string const& e = t.name(inner[i]);
            std::string const& f = t.name(inner[j]);
            TreeMorphism const de = inner_face(t, e);
            TreeMorphism const df = inner_face(t, f);
            out.push_back({IdentityKind::I, "inner " + e + ", inner " + f,
                           {inner_face(de.source(), f), de},
                           {inner_face(df.source(), e), df},
                           {}});
        }
    }
}

void add_outer_pairs(const Tree& t, std::vector<IdentityInstance>& out) {
    if (t.vertex_count() < 3) {
        return;
    }
    std::vector<EdgeId> outer;
    for (EdgeId v : t.vertices()) {
        if (has_outer_face(t, v)) {
            outer.push_back(v);
        }
    }
    for (std::size_t i = 0; i < outer.size(); ++i) {
        for (std::size_t j = i + 1; j < outer.size(); ++j) {
            std::string const& v = t.name(outer[i]);
            std::string const& w = t.name(outer[j]);
            TreeMorphism const dv = outer_face(t, v);
            TreeMorphism const dw = outer_face(t, w);
            IdentityInstance inst{IdentityKind::II, "outer " + v + ", outer " + w, {}, {}, {}};
            if (!has_outer(dv.source(), w) || !has_outer(dw.source(), v)) {
                inst.existence_failure = "second outer face missing";
                inst.lhs = {dv};
                inst.rhs = {dv};
            } else {
                inst.lhs = {outer_face(dv.source(), w), dv};
                inst.rhs = {outer_face(dw.source(), v), dw};
            }
            out.push_back(std::move(inst));
        }
    }
}

void add_inner_outer(const Tree& t, std::vector<IdentityInstance>& out) {
    for (EdgeId v : t.vertices()) {
        if (!has_outer_face(t, v)) {
            continue;
        }
        std::string const& vn = t.name(v);
        TreeMorphism const dv = outer_face(t, vn);
        for (EdgeId e : t.inner_edges()) {
            std::string const& en = t.name(e);
            TreeMorphism const de = inner_face(t, en);
            bool const adjacent = e == v || t.parent(e) == v;
            if (!adjacent) {
                // III. (T/v)/e = (T/e)/v.
                IdentityInstance inst{IdentityKind::III, "inner " + en + ", outer " + vn, {}, {}, {}};
                if (!has_outer(de.source(), vn)) {
                    inst.existence_failure = "outer face lost after contraction";
                    inst.lhs = {de};
                    inst.rhs = {de};
                } else {
                    inst.lhs = {inner_face(dv.source(), en), dv};
                    inst.rhs = {outer_face(de.source(), vn), de};
                }
                out.push_back(std::move(inst));
                continue;
            }
            // IV. z is the merged vertex of T/e, named by its output edge.
            EdgeId const w = other_vertex(t, e, v);
            std::string const& wn = t.name(w);
            std::string const& zn = t.name(e == v ? w : v);
            bool const z_exists = has_outer(de.source(), zn);
            bool const w_exists = has_outer(dv.source(), wn);
            IdentityInstance inst{IdentityKind::IV,
                                  "inner " + en + " between " + vn + " and " + wn, {}, {}, {}};
            if (z_exists != w_exists) {
                inst.existence_failure = z_exists ? "z exists but w does not" : "w exists but z does not";
                inst.lhs = {de};
                inst.rhs = {de};
            } else if (z_exists) {
                inst.lhs = {outer_face(de.source(), zn), de};
                inst.rhs = {outer_face(dv.source(), wn), dv};
            } else {
                // Neither face exists; the instance is the matching absence.
                inst.lhs = {de};
                inst.rhs = {de};
            }
            out.push_back(std::move(inst));
        }
    }
}

void add_degeneracy_pairs(const Tree& t, std::vector<IdentityInstance>& out) {
    std::vector<EdgeId> unary;
    for (EdgeId v : t.vertices()) {
        if (t.is_unary(v)) {
            unary.push_back(v);
        }
    }
    for (std::size_t i = 0; i < unary.size(); ++i) {
        for (std::size_t j = i + 1; j < unary.size(); ++j) {
            std::string const& v = t.name(unary[i]);
            std::string const& w = t.name(unary[j]);
            TreeMorphism const sv = degeneracy(t, v);
            TreeMorphism const sw = degeneracy(t, w);
            std::string const w_after = sv.target().name(sv(unary[j]));
            std::string const v_after = sw.target().name(sw(unary[i]));
            out.push_back({IdentityKind::V, "degeneracies " + v + ", " + w,
                           {sv, degeneracy(sv.target(), w_after)},
                           {sw, degeneracy(sw.target(), v_after)},
                           {}});
        }
    }
}

void add_degeneracy_face(const Tree& t, std::vector<IdentityInstance>& out) {
    for (EdgeId v : t.vertices()) {
        if (!t.is_unary(v)) {
            continue;
        }
        std::string const& vn = t.name(v);
        std::string const& un = t.name(t.inputs(v)[0]);
        TreeMorphism const sv = degeneracy(t, vn);
        std::string const merged = sv.target().name(sv(v));

        // VI: faces keeping v with both of its edges.
        for (const Tree& f : all_faces(t)) {
            if (f == t) {
                continue;
            }
            auto fv = f.find(vn);
            auto fu = f.find(un);
            if (!fv || !fu || !f.is_unary(*fv) || f.inputs(*fv)[0] != *fu) {
                continue;
            }
            TreeMorphism const d = face_inclusion(f, t);
            TreeMorphism const sf = degeneracy(f, vn);
            out.push_back({IdentityKind::VI, "degeneracy " + vn + ", face " + labeled_code(f),
                           {d, sv},
                           {sf, face_inclusion(sf.target(), sv.target())},
                           {}});
        }

        // VII: faces removing one of v's edges, or v itself.
        auto add_vii = [&](const TreeMorphism& d, const std::string& label, const std::string& survivor) {
            out.push_back({IdentityKind::VII, "degeneracy " + vn + ", " + label,
                           {d, sv},
                           {renaming(d.source(), sv.target(), survivor, merged)},
                           {}});
        };
        if (t.is_inner(v)) {
            add_vii(inner_face(t, vn), "inner " + vn, un);
        }
        if (t.is_inner(t.inputs(v)[0])) {
            add_vii(inner_face(t, un), "inner " + un, vn);
        }
        if (has_outer_face(t, v)) {
            // The surviving edge is the inner one.
            add_vii(outer_face(t, vn), "outer " + vn, t.is_inner(v) ? vn : un);
        }
        if (t.vertex_count() == 1) {
            add_vii(corolla_face(t, vn), "corolla " + vn, vn);
            add_vii(corolla_face(t, un), "corolla " + un, un);
        }
    }
}

}  // namespace

std::string identity_label(IdentityKind kind) {
    static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
    return names[static_cast<int>(kind) - 1];
}

TreeMorphism IdentityInstance::lhs_composite() const { return compose_path(lhs); }
TreeMorphism IdentityInstance::rhs_composite() const { return compose_path(rhs); }

bool IdentityInstance::holds() const {
    return existence_failure.empty() && lhs_composite() == rhs_composite();
}

std::vector<IdentityInstance> identity_instances(const Tree& t) {
    std::vector<IdentityInstance> out;
    add_inner_pairs(t, out);
    add_outer_pairs(t, out);
    add_inner_outer(t, out);
    add_degeneracy_pairs(t, out);
    add_degeneracy_face(t, out);
    return out;
}

std::size_t IdentityReport::total() const {
    std::size_t n = 0;
    for (std::size_t c : checked) {
        n += c;
    }
    return n;
}

IdentityReport check_identities(const Tree& t) {
    IdentityReport report;
    report.trees = 1;
    for (IdentityInstance& inst : identity_instances(t)) {
        ++report.checked[static_cast<std::size_t>(inst.kind) - 1];
        if (!inst.holds()) {
            report.failures.push_back(std::move(inst));
        }
    }
    return report;
}

IdentityReport check_identities_up_to(std::size_t max_edges) {
    IdentityReport total;
    for (const CanonicalTree& ct : enumerate_trees(max_edges)) {
        IdentityReport r = check_identities(ct.tree);
        for (std::size_t k = 0; k < total.checked.size(); ++k) {
            total.checked[k] += r.checked[k];
        }
        total.trees += 1;
        for (auto& f : r.failures) {
            total.failures.push_back(std::move(f));
        }
    }
    return total;
}

}  // namespace dendrex
