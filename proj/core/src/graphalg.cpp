#include "dendrex/graphalg.hpp"

#include "dendrex/error.hpp"

#include <cmath>
#include <set>

namespace dendrex {

namespace {

// Mixed rational/int comparisons recurse forever in C++20 with some Boost
// versions, so compare against a rational zero.
const Rational zero_q{0};

std::string mat_gen(const std::string& prefix, const std::string& name) { return prefix + "_" + name; }

// Products of the named generators along every sequence of length 2 and 3
// that the presentation declares zero.
std::optional<std::string> zero_monomial_failure(const StarPresentation& p, const std::vector<const Matrix*>& m) {
    std::size_t const n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> pair{i, j};
            if (p.is_zero_monomial(pair) && !(*m[i] * *m[j]).is_zero()) {
                return "q_" + p.generators[i] + " q_" + p.generators[j];
            }
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<std::size_t> triple{i, j, k};
                if (p.is_zero_monomial(triple) && !(*m[i] * *m[j] * *m[k]).is_zero()) {
                    return "q_" + p.generators[i] + " q_" + p.generators[j] + " q_" + p.generators[k];
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

void DirectedGraph::validate() const {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size()) {
        throw ValidationError("graph: duplicate vertex names");
    }
    std::set<std::string> edge_names;
    for (const Edge& e : edges) {
        if (!edge_names.insert(e.name).second) {
            throw ValidationError("graph: duplicate edge name '" + e.name + "'");
        }
        if (e.source >= vertices.size() || e.range >= vertices.size()) {
            throw ValidationError("graph: edge '" + e.name + "' has an unknown endpoint");
        }
    }
}

DirectedGraph linear_graph(std::size_t n) {
    DirectedGraph g;
    for (std::size_t i = 0; i <= n; ++i) {
        g.vertices.push_back("v" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        g.edges.push_back({"e" + std::to_string(i), i, i - 1});
    }
    return g;
}

Tree linear_graph_tree(std::size_t n) {
    if (n == 0) {
        throw PreconditionError("linear_graph_tree: n must be positive");
    }
    TreeNode node = TreeNode::leaf("e" + std::to_string(n));
    for (std::size_t i = n - 1; i >= 1; --i) {
        node = TreeNode::vertex("e" + std::to_string(i), {std::move(node)});
    }
    return Tree::from_node(node);
}

std::vector<std::string> CKPresentation::relation_strings() const {
    std::vector<std::string> out;
    for (const auto& p : projections) {
        out.push_back(p + " = " + p + "^* = " + p + "^2");
    }
    for (std::size_t v = 0; v < projections.size(); ++v) {
        for (std::size_t w = v + 1; w < projections.size(); ++w) {
            out.push_back(projections[v] + " " + projections[w] + " = 0");
        }
    }
    for (std::size_t e = 0; e < isometries.size(); ++e) {
        const auto& s = isometries[e];
        out.push_back(s + "^* " + s + " = " + projections[graph.edges[e].source]);
    }
    for (std::size_t v : ck2_vertices) {
        std::string sum;
        for (std::size_t e = 0; e < graph.edges.size(); ++e) {
            if (graph.edges[e].range == v) {
                sum += (sum.empty() ? "" : " + ") + isometries[e] + " " + isometries[e] + "^*";
            }
        }
        out.push_back(projections[v] + " = " + sum);
    }
    return out;
}

CKPresentation ck_presentation(const DirectedGraph& g) {
    g.validate();
    CKPresentation p;
    p.graph = g;
    for (const auto& v : g.vertices) {
        p.projections.push_back(mat_gen("P", v));
    }
    std::vector<bool> receives(g.vertices.size(), false);
    for (const auto& e : g.edges) {
        p.isometries.push_back(mat_gen("S", e.name));
        receives[e.range] = true;
    }
    for (std::size_t v = 0; v < receives.size(); ++v) {
        if (receives[v]) {
            p.ck2_vertices.push_back(v);
        }
    }
    return p;
}

Matrix Matrix::zero(std::size_t n) { return Matrix{n, std::vector<Rational>(n * n)}; }

Matrix Matrix::identity(std::size_t n) {
    Matrix m = zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m = zero(n);
    m(i, j) = 1;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m = zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(j, i) = (*this)(i, j);
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a) {
        if (x != zero_q) {
            return false;
        }
    }
    return true;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) {
        throw PreconditionError("matrix dimensions differ");
    }
    Matrix m = x;
    for (std::size_t k = 0; k < m.a.size(); ++k) {
        m.a[k] += y.a[k];
    }
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) {
        throw PreconditionError("matrix dimensions differ");
    }
    Matrix m = Matrix::zero(x.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t k = 0; k < x.n; ++k) {
            if (x(i, k) == zero_q) {
                continue;
            }
            for (std::size_t j = 0; j < x.n; ++j) {
                m(i, j) += x(i, k) * y(k, j);
            }
        }
    }
    return m;
}

Rational determinant(const Matrix& m) {
    Matrix w = m;
    Rational det = 1;
    for (std::size_t c = 0; c < w.n; ++c) {
        std::size_t pivot = c;
        while (pivot < w.n && w(pivot, c) == zero_q) {
            ++pivot;
        }
        if (pivot == w.n) {
            return zero_q;
        }
        if (pivot != c) {
            for (std::size_t j = 0; j < w.n; ++j) {
                std::swap(w(pivot, j), w(c, j));
            }
            det = -det;
        }
        det *= w(c, c);
        for (std::size_t r = c + 1; r < w.n; ++r) {
            Rational const f = w(r, c) / w(c, c);
            if (f == zero_q) {
                continue;
            }
            for (std::size_t j = c; j < w.n; ++j) {
                w(r, j) -= f * w(c, j);
            }
        }
    }
    return det;
}

bool is_positive_semidefinite(const Matrix& m) {
    if (!(m == m.adjoint())) {
        return false;
    }
    if (m.n > 16) {
        throw ResourceError("is_positive_semidefinite: dimension too large for the minor test");
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << m.n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m.n; ++i) {
            if (mask >> i & 1U) {
                idx.push_back(i);
            }
        }
        Matrix sub = Matrix::zero(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = 0; j < idx.size(); ++j) {
                sub(i, j) = m(idx[i], idx[j]);
            }
        }
        if (determinant(sub) < zero_q) {
            return false;
        }
    }
    return true;
}

const Matrix* MatrixAssignment::find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return &matrices[i];
        }
    }
    return nullptr;
}

MatrixAssignment linear_graph_ck_matrices(std::size_t n) {
    if (n == 0) {
        throw PreconditionError("linear_graph_ck_matrices: n must be positive");
    }
    CKPresentation const p = ck_presentation(linear_graph(n));
    MatrixAssignment m{n + 1, {}, {}};
    for (std::size_t i = 0; i <= n; ++i) {
        m.names.push_back(p.projections[i]);
        m.matrices.push_back(Matrix::unit(n + 1, i, i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        m.names.push_back(p.isometries[i - 1]);
        m.matrices.push_back(Matrix::unit(n + 1, i - 1, i));
    }
    return m;
}

MatrixAssignment matrix_rep_s(std::size_t n) {
    if (n == 0) {
        throw PreconditionError("matrix_rep_s: n must be positive");
    }
    MatrixAssignment m{n, {}, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        m.names.push_back("e" + std::to_string(i));
        m.matrices.push_back(Matrix::unit(n, i - 1, i - 1));
    }
    return m;
}

StarHom pi_n(std::size_t n) {
    StarHom h = abelianization(linear_graph_tree(n));
    h.label = "pi_" + std::to_string(n);
    return h;
}

std::string MatrixReport::message() const {
    if (ok) {
        return "pass";
    }
    return "fail (" + relation + "): " + witness;
}

MatrixReport verify_matrix_assignment(const StarPresentation& p, const MatrixAssignment& m) {
    std::vector<const Matrix*> mats;
    for (const auto& g : p.generators) {
        const Matrix* x = m.find(g);
        if (!x) {
            throw PreconditionError("verify_matrix_assignment: generator '" + g + "' is not assigned");
        }
        if (x->n != m.dimension) {
            throw PreconditionError("verify_matrix_assignment: '" + g + "' has the wrong dimension");
        }
        mats.push_back(x);
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.positive[i] && !is_positive_semidefinite(*mats[i])) {
            return {false, "positivity", "q_" + p.generators[i] + " is not positive"};
        }
    }
    for (const auto& sum : p.unit_sums) {
        Matrix total = Matrix::zero(m.dimension);
        for (std::size_t i : sum) {
            total = total + *mats[i];
        }
        if (!(total == Matrix::identity(m.dimension))) {
            return {false, "unit", "the unit sum is not the identity"};
        }
    }
    if (auto bad = zero_monomial_failure(p, mats)) {
        return {false, "zero-monomial", *bad + " is nonzero"};
    }
    if (p.commutative) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                if (!(*mats[i] * *mats[j] == *mats[j] * *mats[i])) {
                    return {false, "commutativity", "q_" + p.generators[i] + " and q_" + p.generators[j]};
                }
            }
        }
    }
    return {};
}

MatrixReport verify_matrix_assignment(const CKPresentation& p, const MatrixAssignment& m) {
    auto get = [&](const std::string& name) {
        const Matrix* x = m.find(name);
        if (!x) {
            throw PreconditionError("verify_matrix_assignment: generator '" + name + "' is not assigned");
        }
        if (x->n != m.dimension) {
            throw PreconditionError("verify_matrix_assignment: '" + name + "' has the wrong dimension");
        }
        return *x;
    };
    std::vector<std::string> const rel = p.relation_strings();
    std::size_t r = 0;
    for (const auto& name : p.projections) {
        Matrix const x = get(name);
        if (!(x == x.adjoint()) || !(x * x == x)) {
            return {false, "projection", rel[r]};
        }
        ++r;
    }
    for (std::size_t v = 0; v < p.projections.size(); ++v) {
        for (std::size_t w = v + 1; w < p.projections.size(); ++w) {
            if (!(get(p.projections[v]) * get(p.projections[w])).is_zero()) {
                return {false, "orthogonality", rel[r]};
            }
            ++r;
        }
    }
    for (std::size_t e = 0; e < p.isometries.size(); ++e) {
        Matrix const s = get(p.isometries[e]);
        if (!(s.adjoint() * s == get(p.projections[p.graph.edges[e].source]))) {
            return {false, "CK1", rel[r]};
        }
        ++r;
    }
    for (std::size_t v : p.ck2_vertices) {
        Matrix sum = Matrix::zero(m.dimension);
        for (std::size_t e = 0; e < p.graph.edges.size(); ++e) {
            if (p.graph.edges[e].range == v) {
                Matrix const s = get(p.isometries[e]);
                sum = sum + s * s.adjoint();
            }
        }
        if (!(sum == get(p.projections[v]))) {
            return {false, "CK2", rel[r]};
        }
        ++r;
    }
    return {};
}

ScalarAssignment simplex_eval(std::size_t n, const std::vector<double>& p) {
    if (p.size() != n + 1) {
        throw PreconditionError("simplex_eval: expected " + std::to_string(n + 1) + " coordinates");
    }
    double sum = 0;
    for (double x : p) {
        if (!(x >= 0)) {
            throw PreconditionError("simplex_eval: negative coordinate");
        }
        sum += x;
    }
    if (std::abs(sum - 1) > simplex_tolerance) {
        throw PreconditionError("simplex_eval: coordinates do not sum to 1");
    }
    return {std::make_shared<const StarPresentation>(abelian_dendrex(linear_tree(n))), p};
}

MatrixReport verify_scalar_assignment(const ScalarAssignment& s, double tolerance) {
    const StarPresentation& p = *s.presentation;
    if (s.values.size() != p.size()) {
        throw PreconditionError("verify_scalar_assignment: one value per generator is required");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.positive[i] && s.values[i] < -tolerance) {
            return {false, "positivity", "q_" + p.generators[i] + " = " + std::to_string(s.values[i])};
        }
    }
    for (const auto& sum : p.unit_sums) {
        double total = 0;
        for (std::size_t i : sum) {
            total += s.values[i];
        }
        if (std::abs(total - 1) > tolerance) {
            return {false, "unit", "values sum to " + std::to_string(total)};
        }
    }
    for (auto [a, b] : p.zero_pairs) {
        if (std::abs(s.values[a] * s.values[b]) > tolerance) {
            return {false, "zero-monomial", "q_" + p.generators[a] + " q_" + p.generators[b]};
        }
    }
    return {};
}

}  // namespace dendrex
