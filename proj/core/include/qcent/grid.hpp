#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qcent/parallel.hpp"

namespace qcent {

// Uniform position lattice x_i = x_min + i dx (x_max excluded) together with
// its conjugate FFT momentum lattice.  dx dp n = 2 pi hbar exactly.
struct Grid1D {
    int n = 0;
    double x_min = 0.0;
    double dx = 0.0;
    double dp = 0.0;
    double hbar = 1.0;
    std::vector<double> x;  // sample points
    std::vector<double> p;  // FFT-ordered: 0, dp, ..., -n/2 dp, ..., -dp

    double x_max() const { return x_min + n * dx; }
    double p_abs_max() const { return 0.5 * n * dp; }
};

// n must be a power of two >= 8.
Grid1D make_grid(int n, double x_min, double x_max, double hbar);

// Wavefunction samples psi(x_i, y_j), row-major with y contiguous.
// Storage is 64-byte aligned so spectral plans execute on any row start.
class ComplexField2D {
  public:
    ComplexField2D(Grid1D grid_x, Grid1D grid_y);
    ComplexField2D(const ComplexField2D&);
    ComplexField2D& operator=(const ComplexField2D&);
    ComplexField2D(ComplexField2D&&) noexcept = default;
    ComplexField2D& operator=(ComplexField2D&&) noexcept = default;

    const Grid1D& grid_x() const { return gx_; }
    const Grid1D& grid_y() const { return gy_; }
    int nx() const { return gx_.n; }
    int ny() const { return gy_.n; }
    std::size_t size() const { return data_size_; }

    std::complex<double>& at(int ix, int iy) { return data_[idx(ix, iy)]; }
    const std::complex<double>& at(int ix, int iy) const { return data_[idx(ix, iy)]; }
    std::complex<double>* data() { return data_.get(); }
    const std::complex<double>* data() const { return data_.get(); }

    double cell_area() const { return gx_.dx * gy_.dx; }

    // sqrt(sum |psi|^2 dx dy); serial sum.
    double norm() const;
    // Scales to unit norm; IntegrityError if the field is numerically null.
    void normalize();

  private:
    std::size_t idx(int ix, int iy) const {
        return static_cast<std::size_t>(ix) * gy_.n + iy;
    }

    Grid1D gx_, gy_;
    std::size_t data_size_ = 0;
    struct AlignedDelete {
        void operator()(std::complex<double>* p) const;
    };
    std::unique_ptr<std::complex<double>[], AlignedDelete> data_;
};

// In-place 2d FFT pair between position and momentum representation.
// Both directions are scaled by 1/sqrt(nx ny), so they are unitary and
// inverse(forward(f)) == f to roundoff.  Rows and columns are transformed
// with single-line plans executed per line, which keeps results identical
// for any worker count.
class SpectralTransform {
  public:
    SpectralTransform(int nx, int ny);
    ~SpectralTransform();
    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    void forward(ComplexField2D& f, WorkerPool& pool) const;
    void inverse(ComplexField2D& f, WorkerPool& pool) const;

    // Unscaled transforms; forward_raw followed by inverse_raw multiplies
    // the field by nx*ny.  Used by the propagator, which folds the scale
    // into its own pointwise pass.
    void forward_raw(ComplexField2D& f, WorkerPool& pool) const;
    void inverse_raw(ComplexField2D& f, WorkerPool& pool) const;

  private:
    struct Plans;
    void check(const ComplexField2D& f) const;
    void scale(ComplexField2D& f, WorkerPool& pool) const;

    int nx_, ny_;
    std::unique_ptr<Plans> plans_;
};

// Occupation counts on (x, px) pixels of size (dx*pixel_scale, dp*pixel_scale)
// covering the grid rectangle [x_min, x_max) x [-n dp/2, +n dp/2).  Bins are
// half-open; samples outside the rectangle are tallied as out_of_range, and
// densities are normalized by the total offered count so off-grid probability
// stays visible.
class PhaseSpaceHistogram {
  public:
    explicit PhaseSpaceHistogram(const Grid1D& grid, double pixel_scale = 1.0);

    void accumulate(std::span<const double> xs, std::span<const double> ps,
                    WorkerPool& pool);

    int nx() const { return nx_; }
    int np() const { return np_; }
    double pixel_dx() const { return wx_; }
    double pixel_dp() const { return wp_; }
    double pixel_area() const { return wx_ * wp_; }
    double hbar() const { return hbar_; }

    std::int64_t count(int ix, int ip) const {
        return counts_[static_cast<std::size_t>(ix) * np_ + ip];
    }
    std::span<const std::int64_t> counts() const { return counts_; }
    std::int64_t total() const { return total_; }
    std::int64_t out_of_range() const { return out_of_range_; }
    double oor_fraction() const;

    // count / (total dx dp); zero where empty.
    double density(int ix, int ip) const;

  private:
    int nx_, np_;
    double x_lo_, p_lo_, wx_, wp_, hbar_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
    std::int64_t out_of_range_ = 0;
};

}  // namespace qcent
