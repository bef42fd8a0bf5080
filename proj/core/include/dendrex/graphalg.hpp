#pragma once

#include "dendrex/dendrex.hpp"
#include "dendrex/presentation.hpp"

#include <boost/rational.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dendrex {

/// A finite directed graph. Edge e runs from source(e) to range(e).
struct DirectedGraph {
    struct Edge {
        std::string name;
        std::size_t source;
        std::size_t range;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    /// ValidationError on duplicate names or endpoints out of range.
    void validate() const;
};

/// T_n: vertices v0..vn and edges e1..en with e_i running from v_i to
/// v_{i-1}.
DirectedGraph linear_graph(std::size_t n);
/// T_n read as a tree: edges e1..en stacked with e1 as the root.
Tree linear_graph_tree(std::size_t n);

/// Cuntz-Krieger generators and relation instances of a graph.
struct CKPresentation {
    DirectedGraph graph;
    std::vector<std::string> projections;  // P_v, by vertex
    std::vector<std::string> isometries;   // S_e, by edge
    /// Vertices receiving at least one edge, where CK2 applies.
    std::vector<std::size_t> ck2_vertices;
    bool unital = true;

    /// Projection, orthogonality, CK1 and CK2 instances, in that order.
    std::vector<std::string> relation_strings() const;
};

CKPresentation ck_presentation(const DirectedGraph& g);

using Rational = boost::rational<long long>;

/// Square matrix with exact rational entries.
struct Matrix {
    std::size_t n = 0;
    std::vector<Rational> a;

    static Matrix zero(std::size_t n);
    static Matrix identity(std::size_t n);
    /// e_ij
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

    Rational& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    Matrix adjoint() const;
    bool is_zero() const;
    friend Matrix operator+(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Exact determinant by Gaussian elimination.
Rational determinant(const Matrix& m);
/// Self-adjoint with every principal minor nonnegative.
bool is_positive_semidefinite(const Matrix& m);

/// A matrix for each named generator, all of one dimension.
struct MatrixAssignment {
    std::size_t dimension = 0;
    std::vector<std::string> names;
    std::vector<Matrix> matrices;

    const Matrix* find(std::string_view name) const;
};

/// P_{v_i} = e_ii and S_{e_i} = e_{i-1,i} in dimension n+1.
MatrixAssignment linear_graph_ck_matrices(std::size_t n);
/// q_{e_i} -> e_ii in dimension n, for D of linear_graph_tree(n).
MatrixAssignment matrix_rep_s(std::size_t n);
/// pi_n: the identity on generators D(T_n) -> D^ab(T_n).
StarHom pi_n(std::size_t n);

struct MatrixReport {
    bool ok = true;
    std::string relation;
    std::string witness;

    std::string message() const;
};

/// Checks positivity, unit sums, vanishing monomials of length 2 and 3 and
/// commutativity by exact multiplication. PreconditionError if a generator
/// is missing or a dimension differs.
MatrixReport verify_matrix_assignment(const StarPresentation& p, const MatrixAssignment& m);
/// Checks the projections, their orthogonality, CK1 and CK2 exactly.
MatrixReport verify_matrix_assignment(const CKPresentation& p, const MatrixAssignment& m);

/// Point evaluation of D^ab(L_n) at a point of the n-simplex.
struct ScalarAssignment {
    std::shared_ptr<const StarPresentation> presentation;
    std::vector<double> values;
};

inline constexpr double simplex_tolerance = 1e-12;

/// q_{e_i} -> p_i. PreconditionError for a negative coordinate, the wrong
/// number of coordinates, or a sum off 1 by more than the tolerance.
ScalarAssignment simplex_eval(std::size_t n, const std::vector<double>& p);
MatrixReport verify_scalar_assignment(const ScalarAssignment& s, double tolerance = simplex_tolerance);

}  // namespace dendrex
