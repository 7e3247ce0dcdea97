#include "flowers/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace flowers {

bool Tolerance::close(double expected, double observed) const {
    return std::abs(expected - observed) <= std::max(absolute, relative * std::abs(expected));
}

Tolerance Tolerance::from_env() {
    Tolerance tol;
    if (const char* env = std::getenv("FLOWER_TOL")) {
        try {
            std::size_t used = 0;
            const double value = std::stod(env, &used);
            if (used > 0 && value > 0.0) {
                tol.absolute = value;
            }
        } catch (const std::exception&) {
            // unparseable: keep the default
        }
    }
    return tol;
}

ResistanceMatrix::ResistanceMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("ResistanceMatrix: matrix must be square");
    }
}

GroundedLaplacian::GroundedLaplacian(const Graph& g) : vertex_count_(g.vertex_count()) {
    const Eigen::MatrixXd full = laplacian(g).cast<double>();
    const int reduced = vertex_count_ - 1;
    factor_.compute(full.bottomRightCorner(reduced, reduced));
    if (factor_.info() != Eigen::Success) {
        throw std::runtime_error("GroundedLaplacian: reduced Laplacian is not positive definite");
    }
}

Eigen::VectorXd GroundedLaplacian::potentials(Vertex i, Vertex j) const {
    if (i < 0 || j < 0 || i >= vertex_count_ || j >= vertex_count_) {
        throw std::out_of_range("resistance: vertex index out of range");
    }
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(vertex_count_);
    if (i == j) {
        return phi;
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(vertex_count_ - 1);
    if (i != 0) rhs(i - 1) += 1.0;
    if (j != 0) rhs(j - 1) -= 1.0;
    phi.tail(vertex_count_ - 1) = factor_.solve(rhs);
    return phi;
}

double GroundedLaplacian::resistance(Vertex i, Vertex j) const {
    if (i == j) {
        if (i < 0 || i >= vertex_count_) {
            throw std::out_of_range("resistance: vertex index out of range");
        }
        return 0.0;
    }
    const Eigen::VectorXd phi = potentials(i, j);
    return phi(i) - phi(j);
}

Eigen::MatrixXd GroundedLaplacian::grounded_inverse() const {
    const int reduced = vertex_count_ - 1;
    Eigen::MatrixXd inverse = Eigen::MatrixXd::Zero(vertex_count_, vertex_count_);
    inverse.bottomRightCorner(reduced, reduced) =
        factor_.solve(Eigen::MatrixXd::Identity(reduced, reduced));
    return inverse;
}

double resistance(const Graph& g, Vertex i, Vertex j) {
    if (!g.contains(i) || !g.contains(j)) {
        throw std::out_of_range("resistance: vertex index out of range");
    }
    return GroundedLaplacian(g).resistance(i, j);
}

ResistanceMatrix resistance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    const Eigen::MatrixXd inv = GroundedLaplacian(g).grounded_inverse();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double value = inv(i, i) + inv(j, j) - inv(i, j) - inv(j, i);
            r(i, j) = value;
            r(j, i) = value;
        }
    }
    return ResistanceMatrix(std::move(r));
}

double kirchhoff_numeric(const ResistanceMatrix& r) {
    double sum = 0.0;
    for (int i = 0; i < r.size(); ++i) {
        for (int j = i + 1; j < r.size(); ++j) {
            sum += r(i, j);
        }
    }
    return sum;
}

double kemeny_numeric(const Graph& g, const ResistanceMatrix& r) {
    if (g.vertex_count() != r.size()) {
        throw std::invalid_argument("kemeny_numeric: graph and matrix sizes differ");
    }
    double sum = 0.0;
    for (int i = 0; i < r.size(); ++i) {
        for (int j = i + 1; j < r.size(); ++j) {
            sum += 2.0 * g.degree(i) * g.degree(j) * r(i, j);
        }
    }
    return sum / (4.0 * g.edge_count());
}

bool MetricReport::passes(double tol) const {
    return max_asymmetry == 0.0 && max_diagonal == 0.0 && min_off_diagonal > 0.0 &&
           worst_triangle <= tol && worst_reverse_triangle <= tol;
}

MetricReport check_metric(const ResistanceMatrix& r) {
    MetricReport report;
    const int n = r.size();
    report.min_off_diagonal = n > 1 ? std::numeric_limits<double>::infinity() : 0.0;
    report.worst_triangle = -std::numeric_limits<double>::infinity();
    report.worst_reverse_triangle = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        report.max_diagonal = std::max(report.max_diagonal, std::abs(r(i, i)));
        for (int j = 0; j < n; ++j) {
            report.max_asymmetry = std::max(report.max_asymmetry, std::abs(r(i, j) - r(j, i)));
            if (i != j) {
                report.min_off_diagonal = std::min(report.min_off_diagonal, r(i, j));
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                report.worst_triangle = std::max(report.worst_triangle, r(x, z) - r(x, y) - r(y, z));
                report.worst_reverse_triangle =
                    std::max(report.worst_reverse_triangle, std::abs(r(x, y) - r(y, z)) - r(x, z));
            }
        }
    }
    return report;
}

}  // namespace flowers
