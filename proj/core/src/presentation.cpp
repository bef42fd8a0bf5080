#include "dendrex/presentation.hpp"

#include "dendrex/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dendrex {

namespace {

std::string gen(const StarPresentation& p, std::size_t i) { return "q_" + p.generators[i]; }

std::string monomial_string(const StarPresentation& p, const std::vector<std::size_t>& seq) {
    std::string out;
    for (std::size_t i : seq) {
        if (!out.empty()) {
            out += ' ';
        }
        out += gen(p, i);
    }
    return out;
}

bool same_names(const StarPresentation& a, const StarPresentation& b) {
    return a.generators == b.generators;
}

}  // namespace

std::optional<std::size_t> StarPresentation::find(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t StarPresentation::at(std::string_view name) const {
    if (auto i = find(name)) {
        return *i;
    }
    throw PreconditionError("presentation has no generator '" + std::string(name) + "'");
}

bool StarPresentation::is_zero_pair(std::size_t a, std::size_t b) const {
    auto key = std::minmax(a, b);
    return std::binary_search(zero_pairs.begin(), zero_pairs.end(),
                              std::pair<std::size_t, std::size_t>(key.first, key.second));
}

bool StarPresentation::is_zero_monomial(std::span<const std::size_t> sequence) const {
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        for (std::size_t j = i + 1; j < sequence.size(); ++j) {
            if (sequence[i] != sequence[j] && is_zero_pair(sequence[i], sequence[j])) {
                return true;
            }
        }
    }
    return false;
}

std::vector<std::string> StarPresentation::relation_strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (positive[i]) {
            out.push_back(gen(*this, i) + " >= 0");
        }
    }
    for (const auto& sum : unit_sums) {
        std::string s;
        for (std::size_t i : sum) {
            s += (s.empty() ? "" : " + ") + gen(*this, i);
        }
        out.push_back((s.empty() ? std::string("0") : s) + " = 1");
    }
    for (auto [a, b] : zero_pairs) {
        out.push_back(gen(*this, a) + " " + gen(*this, b) + " = 0");
    }
    if (commutative) {
        out.emplace_back("generators commute");
    }
    return out;
}

bool StarHom::same_assignment(const StarHom& other) const {
    if (!same_names(*source, *other.source) || !same_names(*target, *other.target)) {
        return false;
    }
    return images == other.images;
}

std::string StarHom::image_string(std::size_t generator) const {
    const auto& img = images[generator];
    if (img.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t j : img) {
        out += (out.empty() ? "" : " + ") + gen(*target, j);
    }
    return out;
}

std::string HomReport::message() const {
    if (ok) {
        return "pass";
    }
    return "fail (" + relation + "): " + witness;
}

HomReport verify_hom(const StarHom& h, std::size_t max_zero_length) {
    const StarPresentation& src = *h.source;
    const StarPresentation& tgt = *h.target;
    if (h.images.size() != src.size()) {
        throw PreconditionError("verify_hom: one image per source generator is required");
    }
    for (const auto& img : h.images) {
        for (std::size_t k = 0; k < img.size(); ++k) {
            if (img[k] >= tgt.size() || (k > 0 && img[k] <= img[k - 1])) {
                throw PreconditionError("verify_hom: images must be ascending distinct target indices");
            }
        }
    }

    // Positivity: a sum of positive generators is positive.
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (!src.positive[i]) {
            continue;
        }
        for (std::size_t j : h.images[i]) {
            if (!tgt.positive[j]) {
                return {false, "positivity", gen(src, i) + " -> " + h.image_string(i)};
            }
        }
    }

    // Unit sums: the images must add up to a unit sum of the target exactly.
    for (const auto& sum : src.unit_sums) {
        std::vector<std::size_t> total;
        for (std::size_t i : sum) {
            total.insert(total.end(), h.images[i].begin(), h.images[i].end());
        }
        std::sort(total.begin(), total.end());
        bool matched = false;
        for (auto target_sum : tgt.unit_sums) {
            std::sort(target_sum.begin(), target_sum.end());
            matched = matched || total == target_sum;
        }
        if (!matched) {
            std::map<std::size_t, int> counts;
            for (std::size_t j : total) {
                ++counts[j];
            }
            std::string w;
            for (auto [j, c] : counts) {
                w += (w.empty() ? "" : " + ") + (c > 1 ? std::to_string(c) + "*" : "") + gen(tgt, j);
            }
            return {false, "unit", "images sum to " + (w.empty() ? std::string("0") : w)};
        }
    }

    // Zero monomials: every generator set of size 2..max containing a zero
    // pair must expand to zero monomials only.
    std::vector<std::size_t> chosen;
    HomReport bad;
    std::function<bool(std::size_t)> subsets = [&](std::size_t start) {
        if (chosen.size() >= 2 && src.is_zero_monomial(chosen)) {
            // Expand the product of images.
            std::vector<std::size_t> mono;
            std::function<bool(std::size_t)> expand = [&](std::size_t k) {
                if (k == chosen.size()) {
                    if (!tgt.is_zero_monomial(mono)) {
                        bad = {false, "zero-monomial",
                               monomial_string(src, chosen) + " = 0 but its image contains " +
                                   monomial_string(tgt, mono)};
                        return false;
                    }
                    return true;
                }
                for (std::size_t j : h.images[chosen[k]]) {
                    mono.push_back(j);
                    bool const ok = expand(k + 1);
                    mono.pop_back();
                    if (!ok) {
                        return false;
                    }
                }
                return true;
            };
            if (!expand(0)) {
                return false;
            }
        }
        if (chosen.size() == max_zero_length) {
            return true;
        }
        for (std::size_t i = start; i < src.size(); ++i) {
            chosen.push_back(i);
            bool const ok = subsets(i + 1);
            chosen.pop_back();
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    if (!subsets(0)) {
        return bad;
    }

    // Commuting generators must land on commuting elements.
    if (src.commutative && !tgt.commutative) {
        std::vector<std::size_t> unit;
        if (!tgt.unit_sums.empty()) {
            unit = tgt.unit_sums.front();
            std::sort(unit.begin(), unit.end());
        }
        auto central = [&](const std::vector<std::size_t>& img) {
            return img.empty() || (!tgt.unit_sums.empty() && img == unit);
        };
        for (std::size_t i = 0; i < src.size(); ++i) {
            for (std::size_t j = i + 1; j < src.size(); ++j) {
                const auto& a = h.images[i];
                const auto& b = h.images[j];
                if (central(a) || central(b) || a == b) {
                    continue;
                }
                return {false, "commutativity",
                        gen(src, i) + " and " + gen(src, j) + " map to non-commuting " +
                            h.image_string(i) + ", " + h.image_string(j)};
            }
        }
    }
    return {};
}

StarHom compose(const StarHom& g, const StarHom& f) {
    if (!same_names(*f.target, *g.source)) {
        throw PreconditionError("compose: presentations do not match");
    }
    StarHom out{f.source, g.target, {}, g.label + " . " + f.label};
    out.images.resize(f.images.size());
    for (std::size_t i = 0; i < f.images.size(); ++i) {
        std::vector<std::size_t> img;
        for (std::size_t b : f.images[i]) {
            img.insert(img.end(), g.images[b].begin(), g.images[b].end());
        }
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
            throw PreconditionError("compose: coefficient exceeds 1");
        }
        out.images[i] = std::move(img);
    }
    return out;
}

bool is_generator_surjective(const StarHom& h) {
    std::vector<bool> hit(h.target->size(), false);
    for (const auto& img : h.images) {
        for (std::size_t j : img) {
            hit[j] = true;
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace dendrex
