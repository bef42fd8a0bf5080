#pragma once

// Hand-built presheaves that the library has no constructor for.

#include "dendrex/presheaf.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace fixture {

// Omega[t] with elements identified along postcomposition by Aut(t). The
// class of id_t is fixed by every automorphism of t, so the empty
// sub-presheaf of this one is not a normal monomorphism when t is symmetric.
inline std::shared_ptr<const dendrex::FinDendroidalSet> aut_quotient(const dendrex::Tree& t, std::size_t bound) {
    using namespace dendrex;
    auto rep = representable(t, bound);
    const OmegaTruncation& omega = rep->omega();
    auto auts = automorphisms(t);
    std::vector<std::vector<std::size_t>> cls(omega.object_count());
    std::vector<std::vector<std::string>> values(omega.object_count());
    for (std::size_t o = 0; o < omega.object_count(); ++o) {
        std::map<std::size_t, std::size_t> rep_to_class;
        for (std::size_t x = 0; x < rep->values(o).size(); ++x) {
            EdgeMap const m = yoneda_element(*rep, t, o, x).edge_map();
            std::size_t least = x;
            for (const EdgeMap& a : auts) {
                EdgeMap am(m.size());
                for (std::size_t e = 0; e < m.size(); ++e) {
                    am[e] = a[m[e]];
                }
                auto y = rep->find_value(o, edge_map_id(omega.object(o), t, am));
                least = std::min(least, *y);
            }
            auto [it, fresh] = rep_to_class.emplace(least, values[o].size());
            if (fresh) {
                values[o].push_back("[" + rep->values(o)[least] + "]");
            }
            cls[o].push_back(it->second);
        }
    }
    std::vector<std::vector<std::size_t>> tables(omega.generators().size());
    for (std::size_t g = 0; g < tables.size(); ++g) {
        MorphismRef const r = omega.generators()[g].ref;
        tables[g].assign(values[r.target].size(), 0);
        for (std::size_t x = 0; x < rep->values(r.target).size(); ++x) {
            tables[g][cls[r.target][x]] = cls[r.source][rep->table(g)[x]];
        }
    }
    return FinDendroidalSet::from_tables(rep->omega_ptr(), std::move(values), std::move(tables),
                                         "quotient " + labeled_code(t));
}

}  // namespace fixture
