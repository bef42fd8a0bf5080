#include <doctest.h>

#include "dendrex/drawing.hpp"
#include "dendrex/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <set>

using namespace dendrex;
using fixture::tree;

namespace {

std::shared_ptr<const StarPresentation> d_of(const Tree& t) {
    return std::make_shared<const StarPresentation>(dendrex_presentation(t));
}

// All edge homs by brute force over every 0/1 assignment, with the
// relations checked directly on the image sums.
std::set<std::vector<std::vector<std::size_t>>> brute_edge_homs(const Tree& a, const Tree& b) {
    std::set<std::vector<std::vector<std::size_t>>> out;
    std::size_t const na = a.edge_count();
    std::size_t const nb = b.edge_count();
    std::size_t const subsets = std::size_t{1} << nb;
    std::size_t total = 1;
    for (std::size_t i = 0; i < na; ++i) {
        total *= subsets;
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::vector<std::size_t>> images(na);
        std::size_t c = code;
        std::vector<int> cover(nb, 0);
        for (std::size_t i = 0; i < na; ++i) {
            std::size_t const mask = c % subsets;
            c /= subsets;
            for (std::size_t j = 0; j < nb; ++j) {
                if (mask >> j & 1U) {
                    images[i].push_back(j);
                    ++cover[j];
                }
            }
        }
        bool ok = std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
        // Incoherent pairs must go to sums of pairwise incoherent products.
        for (EdgeId x = 0; x < na && ok; ++x) {
            for (EdgeId y = x + 1; y < na && ok; ++y) {
                if (oracle::on_common_path(a, {x, y})) {
                    continue;
                }
                for (std::size_t i : images[x]) {
                    for (std::size_t j : images[y]) {
                        if (i == j || oracle::on_common_path(b, {i, j})) {
                            ok = false;
                        }
                    }
                }
            }
        }
        if (ok) {
            out.insert(images);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("drawing of a representable has a terminal node") {
    Tree const t = tree("r[a,b]");
    auto x = representable(t, 3);
    Drawing const d = draw(x);
    CHECK(verify_drawing(d).ok);
    std::size_t const o = x->omega().object_of(t);
    std::size_t terminal_like = 0;
    for (std::size_t i = 0; i < d.index.objects.size(); ++i) {
        if (d.index.objects[i].tree != o) {
            continue;
        }
        std::set<std::size_t> from;
        for (const auto& a : d.index.arrows) {
            if (a.to == i) {
                from.insert(a.from);
            }
        }
        terminal_like += from.size() == d.index.objects.size();
    }
    // Both automorphisms of the corolla are terminal elements.
    CHECK(terminal_like == 2);
}

TEST_CASE("drawing of the point is made of linear dendrices") {
    Drawing const d = draw(representable(Tree::unit(), 3));
    CHECK(verify_drawing(d).ok);
    for (const auto& p : d.nodes) {
        REQUIRE(p->tree);
        CHECK(p->zero_pairs.empty());
    }
    for (const auto& h : d.arrows) {
        CHECK(is_generator_surjective(h));
    }
}

TEST_CASE("drawing of the boundary of L_1") {
    Drawing const d = draw(boundary(linear_tree(1), 2).sub, false);
    CHECK(verify_drawing(d).ok);
    REQUIRE(d.nodes.size() == 2);
    for (const auto& p : d.nodes) {
        CHECK(p->size() == 1);
        CHECK(p->unit_sums == std::vector<std::vector<std::size_t>>{{0}});
    }
    for (const auto& a : d.index.arrows) {
        CHECK(a.from == a.to);
    }
}

TEST_CASE("a corrupted arrow is named") {
    Drawing d = draw(representable(corolla(2), 3));
    REQUIRE(verify_drawing(d).ok);
    std::size_t victim = d.arrows.size();
    for (std::size_t i = 0; i < d.arrows.size(); ++i) {
        if (d.arrows[i].images.size() >= 2) {
            victim = i;
            break;
        }
    }
    REQUIRE(victim < d.arrows.size());
    d.arrows[victim].images[1] = d.arrows[victim].images[0];
    DrawingReport const r = verify_drawing(d);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("arrow " + std::to_string(victim) + " ") != std::string::npos);
}

TEST_CASE("empty presheaf draws to the empty diagram") {
    Drawing const d = draw(empty_sub(representable(corolla(2), 3)).sub);
    CHECK(d.nodes.empty());
    CHECK(verify_drawing(d).ok);
}

TEST_CASE("inclusions give injective diagram maps") {
    Tree const t = tree("r[a[b],c]");
    Inclusion const b = boundary(t, 4);
    Drawing const sub = draw(b.sub);
    Drawing const super = draw(b.super);
    DiagramMapReport const r = induced_diagram_map(sub, super, b);
    CHECK(r.ok);
    CHECK(r.object_map.size() == sub.index.objects.size());
    CHECK(std::set<std::size_t>(r.arrow_map.begin(), r.arrow_map.end()).size() == r.arrow_map.size());
}

TEST_CASE("face and iso arrows give generator-surjective homs") {
    Drawing const d = draw(representable(tree("r[a[b],c]"), 4));
    std::size_t seen = 0;
    for (std::size_t i = 0; i < d.arrows.size(); ++i) {
        if (d.kinds[i].find("degeneracy") == std::string::npos) {
            CHECK(is_generator_surjective(d.arrows[i]));
            ++seen;
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("DOT export lists every node and arrow") {
    Drawing const d = draw(boundary(linear_tree(1), 2).sub, false);
    std::string const dot = to_dot(d);
    CHECK(dot.rfind("digraph drawing {", 0) == 0);
    CHECK(dot.find("n1 [label=") != std::string::npos);
    CHECK(dot.find("-> n0 [label=\"identity\"]") != std::string::npos);
}

TEST_CASE("edge homs") {
    auto unit = d_of(Tree::unit());
    for (auto& ct : enumerate_trees(3)) {
        auto homs = edge_homs(unit, d_of(ct.tree));
        REQUIRE(homs.size() == 1);
        CHECK(homs[0].images[0].size() == ct.tree.edge_count());
    }
    auto l1 = d_of(linear_tree(1));
    auto self = edge_homs(l1, l1);
    CHECK(self.size() == 4);
    std::set<std::string> ids;
    for (const auto& h : self) {
        ids.insert(edge_hom_id(h));
    }
    CHECK(ids == std::set<std::string>{"e0>e0,e1>e1", "e0>e1,e1>e0", "e0>e0+e1,e1>0", "e0>0,e1>e0+e1"});
}

TEST_CASE("edge homs agree with brute force") {
    auto trees = enumerate_trees(3);
    for (const auto& a : trees) {
        for (const auto& b : trees) {
            std::set<std::vector<std::vector<std::size_t>>> got;
            for (const auto& h : edge_homs(d_of(a.tree), d_of(b.tree))) {
                got.insert(h.images);
            }
            CHECK(got == brute_edge_homs(a.tree, b.tree));
        }
    }
}

TEST_CASE("induced homs are edge homs") {
    auto trees = enumerate_trees(3);
    for (const auto& s : trees) {
        for (const auto& t : trees) {
            auto homs = edge_homs(d_of(t.tree), d_of(s.tree));
            for (const TreeMorphism& f : hom_set(s.tree, t.tree)) {
                StarHom const h = induced_hom(f);
                bool const found = std::any_of(homs.begin(), homs.end(),
                                               [&](const StarHom& e) { return e.images == h.images; });
                CHECK(found);
            }
        }
    }
}

TEST_CASE("dendraw probes") {
    auto point = dendraw_probe(d_of(Tree::unit()), 3);
    for (std::size_t o = 0; o < point->omega().object_count(); ++o) {
        CHECK(point->values(o).size() == 1);
    }
    auto probe = dendraw_probe(d_of(linear_tree(1)), 2);
    std::size_t const l1 = probe->omega().object_of(linear_tree(1));
    CHECK(probe->values(l1).size() == 4);
    CHECK_FALSE(presheaf_failure(probe->omega(), probe->all_values(), probe->all_tables()).has_value());
}
