#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qcent/grid.hpp"

namespace qcent {

// Entropies of a Schmidt spectrum.  Weights below 1e-14 are excluded from the
// log; small negative weights (>= -1e-10) are treated as zero, anything more
// negative is a numerical-integrity failure of the caller.
double spectrum_purity(std::span<const double> lambda);
double spectrum_linear_entropy(std::span<const double> lambda);
double spectrum_von_neumann(std::span<const double> lambda);

// One-axis reduced density matrix of a unit-norm field, discretized as
// M_ij = rho(x_i, x_j) dx so trace and eigenvalues are dimensionless Schmidt
// weights.  The spectrum is computed on construction; purity is verified
// against the Frobenius norm of M, which never touches the eigensolver.
class ReducedDensityMatrix {
  public:
    static ReducedDensityMatrix reduce_x(const ComplexField2D& f);
    static ReducedDensityMatrix reduce_y(const ComplexField2D& f);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    double dx() const { return dx_; }
    double trace() const { return trace_; }

    // Descending; sums to trace().
    const std::vector<double>& eigenvalues() const { return lambda_; }

    double purity() const { return purity_; }
    double purity_frobenius() const { return purity_frob_; }
    double linear_entropy() const { return 1.0 - purity_; }
    double von_neumann_entropy() const { return spectrum_von_neumann(lambda_); }

  private:
    ReducedDensityMatrix(Eigen::MatrixXcd m, double dx);

    Eigen::MatrixXcd m_;
    double dx_ = 0.0;
    double trace_ = 0.0;
    double purity_ = 0.0;
    double purity_frob_ = 0.0;
    std::vector<double> lambda_;
};

}  // namespace qcent
