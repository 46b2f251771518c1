#include "qcent/rdm.hpp"

#include <cmath>

#include "qcent/errors.hpp"

namespace qcent {

namespace {

constexpr double kLogFloor = 1e-14;
constexpr double kNegativeTol = 1e-10;

void check_weight(double l) {
    if (l < -kNegativeTol)
        throw IntegrityError("rdm.negative_eigenvalue",
                             "Schmidt weight " + std::to_string(l) + " below -1e-10");
}

}  // namespace

double spectrum_purity(std::span<const double> lambda) {
    double s = 0.0;
    for (const double l : lambda) {
        check_weight(l);
        s += l * l;
    }
    return s;
}

double spectrum_linear_entropy(std::span<const double> lambda) {
    return 1.0 - spectrum_purity(lambda);
}

double spectrum_von_neumann(std::span<const double> lambda) {
    double s = 0.0;
    for (const double l : lambda) {
        check_weight(l);
        if (l > kLogFloor) s -= l * std::log(l);
    }
    return s;
}

namespace {

using RowMajorField =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FieldMap = Eigen::Map<const RowMajorField>;

Eigen::MatrixXcd accumulate_rdm(const Eigen::MatrixXcd& amplitudes, double weight) {
    const auto n = amplitudes.rows();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    m.selfadjointView<Eigen::Lower>().rankUpdate(amplitudes, weight);
    // Mirror the computed triangle; M is then Hermitian by construction.
    m.triangularView<Eigen::StrictlyUpper>() = m.adjoint();
    return m;
}

}  // namespace

ReducedDensityMatrix ReducedDensityMatrix::reduce_x(const ComplexField2D& f) {
    const FieldMap psi(f.data(), f.nx(), f.ny());
    return ReducedDensityMatrix(accumulate_rdm(psi, f.cell_area()), f.grid_x().dx);
}

ReducedDensityMatrix ReducedDensityMatrix::reduce_y(const ComplexField2D& f) {
    const FieldMap psi(f.data(), f.nx(), f.ny());
    const Eigen::MatrixXcd psi_t = psi.transpose();
    return ReducedDensityMatrix(accumulate_rdm(psi_t, f.cell_area()), f.grid_y().dx);
}

ReducedDensityMatrix::ReducedDensityMatrix(Eigen::MatrixXcd m, double dx)
    : m_(std::move(m)), dx_(dx) {
    trace_ = m_.trace().real();
    if (std::abs(trace_ - 1.0) > 1e-6)
        throw IntegrityError("rdm.trace",
                             "reduced density matrix trace " + std::to_string(trace_));

    purity_frob_ = m_.squaredNorm();  // tr(M^2) for Hermitian M

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw IntegrityError("rdm.eigensolver", "eigendecomposition failed");
    const auto& ev = es.eigenvalues();
    lambda_.resize(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double l = ev(ev.size() - 1 - i);
        check_weight(l);
        if (l < 0.0) l = 0.0;
        lambda_[i] = l;
    }

    purity_ = spectrum_purity(lambda_);
    if (std::abs(purity_ - purity_frob_) > 1e-8)
        throw IntegrityError("rdm.purity",
                             "purity routes disagree: " + std::to_string(purity_) +
                                 " vs " + std::to_string(purity_frob_));
}

}  // namespace qcent
