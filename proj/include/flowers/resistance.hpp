#pragma once

#include <Eigen/Dense>

#include "flowers/graph.hpp"

namespace flowers {

/// Comparison policy shared by every oracle-vs-closed-form check:
/// |expected - observed| <= max(absolute, relative * |expected|).
/// With the defaults this is 1e-9 absolute up to magnitude 1e3 and
/// 1e-12 relative beyond.
struct Tolerance {
    double absolute = 1e-9;
    double relative = 1e-12;

    bool close(double expected, double observed) const;

    /// Default tolerance, with FLOWER_TOL (if set and parseable) replacing
    /// the absolute part.
    static Tolerance from_env();
};

/// Pairwise effective resistances of a connected graph.
class ResistanceMatrix {
public:
    explicit ResistanceMatrix(Eigen::MatrixXd entries);

    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    double operator()(Vertex i, Vertex j) const { return entries_(i, j); }
    const Eigen::MatrixXd& entries() const noexcept { return entries_; }

private:
    Eigen::MatrixXd entries_;
};

/// Reduced Laplacian with vertex 0 grounded, Cholesky-factored once.
/// Answers r(i, j) = (e_i - e_j)^T L^+ (e_i - e_j) through the
/// positive-definite grounded system.
class GroundedLaplacian {
public:
    explicit GroundedLaplacian(const Graph& g);

    int vertex_count() const noexcept { return vertex_count_; }
    /// Potentials phi with L phi = e_i - e_j and phi(0) = 0.
    Eigen::VectorXd potentials(Vertex i, Vertex j) const;
    double resistance(Vertex i, Vertex j) const;
    /// Inverse of the grounded Laplacian, padded with a zero row and
    /// column for the ground vertex.
    Eigen::MatrixXd grounded_inverse() const;

private:
    int vertex_count_;
    Eigen::LLT<Eigen::MatrixXd> factor_;
};

double resistance(const Graph& g, Vertex i, Vertex j);
ResistanceMatrix resistance_matrix(const Graph& g);

/// Half the sum of all entries.
double kirchhoff_numeric(const ResistanceMatrix& r);
/// d^T R d / (4q).
double kemeny_numeric(const Graph& g, const ResistanceMatrix& r);

struct MetricReport {
    double max_asymmetry = 0.0;
    double max_diagonal = 0.0;
    double min_off_diagonal = 0.0;
    double worst_triangle = 0.0;          // max of r(x,z) - r(x,y) - r(y,z)
    double worst_reverse_triangle = 0.0;  // max of |r(x,y) - r(y,z)| - r(x,z)

    bool passes(double tol) const;
};

MetricReport check_metric(const ResistanceMatrix& r);

}  // namespace flowers
