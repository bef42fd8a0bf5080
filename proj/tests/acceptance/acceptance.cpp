// One line per acceptance criterion. Exit status is nonzero if any fails.

#include "cli.hpp"
#include "dendrex/drawing.hpp"
#include "dendrex/graphalg.hpp"
#include "dendrex/identities.hpp"
#include "dendrex/json_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "presheaf_fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <unistd.h>

using namespace dendrex;

namespace {

// Collects the first failure of a criterion.
struct Outcome {
    std::string failure;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && failure.empty()) {
            failure = what;
        }
    }
};

std::optional<std::size_t> linear_length(const Tree& t) {
    for (EdgeId v : t.vertices()) {
        if (!t.is_unary(v)) {
            return std::nullopt;
        }
    }
    return t.edge_count() - 1;
}

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix to_int(const Matrix& m) {
    IntMatrix out(m.n, std::vector<long>(m.n));
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) {
            out[i][j] = m(i, j).denominator() == 1 ? m(i, j).numerator() : 1000000;
        }
    }
    return out;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    std::size_t const n = x.size();
    IntMatrix out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += x[i][k] * y[k][j];
            }
        }
    }
    return out;
}

IntMatrix transpose(IntMatrix x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::swap(x[i][j], x[j][i]);
        }
    }
    return x;
}

IntMatrix diag_unit(std::size_t n, std::size_t i) {
    IntMatrix out(n, std::vector<long>(n, 0));
    out[i][i] = 1;
    return out;
}

Outcome identities() {
    Outcome o;
    auto const start = std::chrono::steady_clock::now();
    IdentityReport const r = check_identities_up_to(6);
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(r.ok(), r.ok() ? "" : identity_label(r.failures.front().kind) + ": " + r.failures.front().description);
    std::uint64_t shapes = 0;
    for (auto c : oracle::shape_counts(6)) {
        shapes += c;
    }
    o.require(r.trees == shapes, "shape count " + std::to_string(r.trees) + " != " + std::to_string(shapes));
    o.require(secs < 60, "took " + std::to_string(secs) + " s");
    std::ostringstream d;
    d << r.trees << " shapes, " << r.total() << " instances, " << std::fixed;
    d.precision(1);
    d << secs << " s";
    o.detail = d.str();
    return o;
}

Outcome functoriality() {
    Outcome o;
    FunctorialityReport const r = check_functoriality(4);
    o.require(r.ok(), r.failure);
    // Images against the preimage rule, computed without the library.
    std::size_t checked = 0;
    auto const trees = enumerate_trees(4);
    for (const auto& a : trees) {
        for (const auto& b : trees) {
            for (const auto& f : hom_set(a.tree, b.tree)) {
                StarHom const h = induced_hom(f);
                for (EdgeId x = 0; x < b.tree.edge_count(); ++x) {
                    o.require(h.images[x] == oracle::preimage(f.edge_map(), x), "preimage rule");
                }
                ++checked;
            }
        }
    }
    o.require(checked == r.morphisms, "morphism count");
    o.detail = std::to_string(r.morphisms) + " arrows, " + std::to_string(r.pairs) + " composable pairs";
    return o;
}

Outcome branch_stump() {
    Outcome o;
    Tree const t = fixture::branch_stump_tree();
    std::vector<std::string> const zero{"l2", "e1", "e2"};
    std::vector<std::string> const root_path{"r", "e1", "l1"};
    std::vector<std::string> const pair{"e1", "l2"};
    o.require(!coherent(t, zero), "{l2,e1,e2} coherent");
    o.require(coherent(t, root_path), "{r,e1,l1} incoherent");
    o.require(coherent(t, pair), "{e1,l2} incoherent");
    StarPresentation const p = dendrex_presentation(t);
    auto idx = [&](const char* n) { return p.at(n); };
    std::vector<std::size_t> const w1{idx("l2"), idx("e1"), idx("e2")};
    std::vector<std::size_t> const w2{idx("r"), idx("e1"), idx("l1")};
    std::vector<std::size_t> const w3{idx("e1"), idx("l2"), idx("e1")};
    o.require(p.is_zero_monomial(w1), "q_l2 q_e1 q_e2 not zero");
    o.require(!p.is_zero_monomial(w2), "q_r q_e1 q_l1 zero");
    o.require(!p.is_zero_monomial(w3), "q_e1 q_l2 q_e1 zero");
    o.detail = "3 coherence values and 3 monomials";
    return o;
}

Outcome unit_tree() {
    Outcome o;
    StarPresentation const p = dendrex_presentation(Tree::unit());
    o.require(p.size() == 1, "generator count");
    o.require(p.unit_sums == std::vector<std::vector<std::size_t>>{{0}}, "unit relation");
    o.require(p.zero_pairs.empty(), "zero pairs");
    // The 1x1 assignment q = 1 satisfies it, and nothing else does.
    MatrixAssignment m{1, p.generators, {Matrix::identity(1)}};
    o.require(verify_matrix_assignment(p, m).ok, "q = 1 rejected");
    m.matrices[0](0, 0) = Rational(1, 2);
    o.require(!verify_matrix_assignment(p, m).ok, "q = 1/2 accepted");
    o.detail = "one generator, q = 1";
    return o;
}

Outcome simplicial() {
    Outcome o;
    std::size_t homs = 0;
    for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
            std::size_t const got = hom_set(linear_tree(m), linear_tree(n)).size();
            std::uint64_t const want = oracle::binomial(n + m + 1, m + 1);
            o.require(got == want, "|Omega(L_" + std::to_string(m) + ", L_" + std::to_string(n) +
                                       ")| = " + std::to_string(got) + ", expected " + std::to_string(want));
            ++homs;
        }
    }
    std::size_t compared = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        Tree const t = linear_tree(n);
        std::vector<std::pair<Inclusion, std::optional<std::size_t>>> cases;
        cases.emplace_back(boundary(t, 4), std::nullopt);
        for (std::size_t k = 1; k < n; ++k) {
            cases.emplace_back(inner_horn(t, "e" + std::to_string(k), 4), k);
        }
        for (const auto& [inc, k] : cases) {
            const auto& omega = inc.sub->omega();
            for (std::size_t ob = 0; ob < omega.object_count(); ++ob) {
                auto m = linear_length(omega.object(ob));
                if (!m) {
                    o.require(inc.sub->values(ob).empty(), "element over a non-linear tree");
                    continue;
                }
                std::set<std::vector<std::size_t>> got;
                for (std::size_t x = 0; x < inc.sub->values(ob).size(); ++x) {
                    got.insert(yoneda_element(*inc.super, t, ob, inc.map[ob][x]).edge_map());
                }
                std::set<std::vector<std::size_t>> want;
                for (auto& f : oracle::monotone_maps(*m, n)) {
                    if (k ? oracle::in_horn(f, n, *k) : !oracle::surjective(f, n)) {
                        want.insert(f);
                    }
                }
                o.require(got == want, "L_" + std::to_string(n) + (k ? " horn" : " boundary") + " at L_" +
                                           std::to_string(*m));
                ++compared;
            }
        }
    }
    o.detail = std::to_string(homs) + " hom counts, " + std::to_string(compared) + " value sets";
    return o;
}

Outcome zigzag() {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
        std::string const at = " at n = " + std::to_string(n);
        StarPresentation const p = dendrex_presentation(linear_graph_tree(n));
        MatrixAssignment const s = matrix_rep_s(n);
        o.require(s.dimension == n, "matrix_rep_s dimension" + at);
        o.require(verify_matrix_assignment(p, s).ok, "matrix_rep_s" + at);

        CKPresentation const ck = ck_presentation(linear_graph(n));
        MatrixAssignment const m = linear_graph_ck_matrices(n);
        o.require(m.dimension == n + 1, "CK dimension" + at);
        o.require(verify_matrix_assignment(ck, m).ok, "CK relations" + at);
        // Integer re-check of CK1 and CK2.
        for (std::size_t i = 1; i <= n; ++i) {
            IntMatrix const si = to_int(*m.find("S_e" + std::to_string(i)));
            o.require(mul(transpose(si), si) == to_int(*m.find("P_v" + std::to_string(i))), "CK1 oracle" + at);
            o.require(mul(si, transpose(si)) == to_int(*m.find("P_v" + std::to_string(i - 1))), "CK2 oracle" + at);
            o.require(mul(si, transpose(si)) == diag_unit(n + 1, i - 1), "range projection" + at);
        }
        StarHom const pi = pi_n(n);
        o.require(verify_hom(pi).ok, "pi_n" + at);
        o.require(is_generator_surjective(pi), "pi_n surjectivity" + at);
    }
    std::mt19937_64 rng(cli::default_seed);
    std::exponential_distribution<double> exp(1.0);
    std::size_t points = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int k = 0; k < 100; ++k) {
            std::vector<double> p(n + 1);
            double sum = 0;
            for (auto& x : p) {
                x = exp(rng);
                sum += x;
            }
            for (auto& x : p) {
                x /= sum;
            }
            o.require(verify_scalar_assignment(simplex_eval(n, p)).ok, "simplex point at n = " + std::to_string(n));
            ++points;
        }
    }
    o.detail = "n <= 8 exact, " + std::to_string(points) + " simplex points (seed " +
               std::to_string(cli::default_seed) + ")";
    return o;
}

Outcome normality() {
    Outcome o;
    std::size_t trees = 0;
    for (const auto& ct : enumerate_trees(5)) {
        if (ct.tree.vertex_count() == 0) {
            continue;
        }
        NormalityReport const r = is_normal_mono(boundary(ct.tree, 5));
        o.require(r.ok, "boundary of " + ct.code + " fixed by " + r.automorphism + " at " + r.element);
        ++trees;
    }
    Tree const c2 = standard_tree({StandardShape::corolla, 2});
    NormalityReport const bad = is_normal_mono(empty_sub(fixture::aut_quotient(c2, 3)));
    o.require(!bad.ok, "quotient fixture accepted");
    o.require(!bad.element.empty() && !bad.automorphism.empty(), "quotient rejected without a witness");
    o.detail = std::to_string(trees) + " boundaries; fixture witness " + bad.element;
    return o;
}

Outcome drawings() {
    Outcome o;
    std::size_t drawn = 0;
    std::size_t maps = 0;
    std::size_t face_arrows = 0;
    auto check = [&](const std::shared_ptr<const FinDendroidalSet>& x, const std::string& what) {
        Drawing const d = draw(x);
        DrawingReport const r = verify_drawing(d);
        o.require(r.ok, what + ": " + r.message);
        for (std::size_t i = 0; i < d.arrows.size(); ++i) {
            if (d.kinds[i].find("degeneracy") == std::string::npos) {
                o.require(is_generator_surjective(d.arrows[i]), what + ": face arrow not surjective");
                ++face_arrows;
            }
        }
        ++drawn;
        return d;
    };
    for (const auto& ct : enumerate_trees(4)) {
        Drawing const whole = check(representable(ct.tree, 4), "representable " + ct.code);
        if (ct.tree.vertex_count() == 0) {
            continue;
        }
        std::vector<std::pair<std::string, Inclusion>> subs;
        subs.emplace_back("boundary " + ct.code, boundary(ct.tree, 4));
        for (EdgeId e : ct.tree.inner_edges()) {
            subs.emplace_back("horn " + ct.code + " at " + ct.tree.name(e), inner_horn(ct.tree, ct.tree.name(e), 4));
        }
        for (const auto& [what, inc] : subs) {
            Drawing const d = check(inc.sub, what);
            DiagramMapReport const r = induced_diagram_map(d, whole, inc);
            o.require(r.ok, what + " diagram map: " + r.message);
            ++maps;
        }
    }
    o.detail = std::to_string(drawn) + " drawings, " + std::to_string(maps) + " diagram maps, " +
               std::to_string(face_arrows) + " face/iso arrows";
    return o;
}

Outcome cuntz() {
    Outcome o;
    DirectedGraph const g{{"v"}, {{"e1", 0, 0}, {"e2", 0, 0}}};
    auto rel = ck_presentation(g).relation_strings();
    std::vector<std::string> want{"P_v = P_v^* = P_v^2", "S_e1^* S_e1 = P_v", "S_e2^* S_e2 = P_v",
                                  "P_v = S_e1 S_e1^* + S_e2 S_e2^*"};
    std::sort(rel.begin(), rel.end());
    std::sort(want.begin(), want.end());
    o.require(rel == want, "relation strings differ");
    o.detail = std::to_string(rel.size()) + " relations";
    return o;
}

Outcome determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    fs::path const dir = fs::temp_directory_path() / ("dendrex_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream(dir / name, std::ios::binary) << text;
        return (dir / name).string();
    };
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int const s = cli::run(args, out, err);
        return std::to_string(s) + "\n" + out.str() + "\x1f" + err.str();
    };
    std::string const tree = write("t.json", to_json(fixture::branch_stump_tree()).dump());
    std::string const l2 = write("l2.json", to_json(linear_tree(2)).dump());
    std::string const l3 = write("l3.json", to_json(linear_tree(3)).dump());
    std::string const mor = write("m.json", to_json(inner_face(linear_tree(3), "e1")).dump());
    std::string const mor_src = write("ms.json", to_json(inner_face(linear_tree(3), "e1").source()).dump());
    std::string const rep = write("rep.json", to_json(*representable(linear_tree(2), 3)).dump());
    std::string const graph = write("g.json", to_json(DirectedGraph{{"v"}, {{"e1", 0, 0}, {"e2", 0, 0}}}).dump());
    std::vector<std::vector<std::string>> const commands{
        {"trees", "enum", "--max-edges", "5"},
        {"tree", "faces", tree},
        {"tree", "degeneracies", l3},
        {"tree", "auts", tree},
        {"omega", "hom", l2, l3},
        {"dendrex", "show", tree},
        {"dendrex", "show", tree, "--abelian"},
        {"dendrex", "map", mor_src, l3, "--morphism", mor},
        {"presheaf", "representable", tree, "--bound", "5"},
        {"presheaf", "boundary", tree, "--bound", "5"},
        {"presheaf", "horn", l3, "--bound", "4", "--edge", "e1"},
        {"draw", rep},
        {"draw", rep, "--no-degenerate"},
        {"--format", "dot", "draw", rep},
        {"graph", "ck", graph},
        {"graph", "linear", "4", "--matrices"},
        {"verify", "identities", "--max-edges", "5"},
        {"verify", "functoriality", "--max-edges", "3"},
        {"verify", "sm", "6"},
        {"verify", "sm", "6", "--seed", "123"},
        {"dendrex", "show", write("bad.json", "{\"edge\": ")},
    };
    for (const auto& c : commands) {
        std::string const a = run(c);
        std::string const b = run(c);
        std::string line;
        for (const auto& w : c) {
            line += w + " ";
        }
        o.require(a == b, "output differs: " + line);
    }
    fs::remove_all(dir);
    o.detail = std::to_string(commands.size()) + " commands run twice";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
        {"identity suite up to 6 edges", identities},
        {"functoriality of D up to 4 edges", functoriality},
        {"branch-and-stump tree coherence", branch_stump},
        {"D of the unit tree", unit_tree},
        {"simplicial consistency", simplicial},
        {"simplex/matrix zigzag", zigzag},
        {"normal monomorphisms", normality},
        {"drawing soundness", drawings},
        {"Cuntz algebra O_2", cuntz},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.failure = std::string("threw: ") + e.what();
        }
        bool const ok = o.failure.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << (ok ? o.detail : o.failure) << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
