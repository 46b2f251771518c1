#include "qcent/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <new>
#include <numbers>

#include "qcent/errors.hpp"

namespace qcent {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

constexpr std::size_t kFieldAlign = 64;

}  // namespace

Grid1D make_grid(int n, double x_min, double x_max, double hbar) {
    if (!power_of_two(n) || n < 8)
        throw ValidationError("grid.n", "grid size must be a power of two >= 8");
    if (!(x_max > x_min))
        throw ValidationError("grid.extent", "x_max must exceed x_min");
    if (!(hbar > 0.0)) throw ValidationError("grid.hbar", "hbar must be positive");

    Grid1D g;
    g.n = n;
    g.x_min = x_min;
    g.dx = (x_max - x_min) / n;
    g.dp = 2.0 * std::numbers::pi * hbar / (n * g.dx);
    g.hbar = hbar;
    g.x.resize(n);
    g.p.resize(n);
    for (int i = 0; i < n; ++i) g.x[i] = x_min + i * g.dx;
    for (int k = 0; k < n; ++k) {
        const int f = (k < n / 2) ? k : k - n;
        g.p[k] = f * g.dp;
    }
    return g;
}

void ComplexField2D::AlignedDelete::operator()(std::complex<double>* p) const {
    ::operator delete[](p, std::align_val_t{kFieldAlign});
}

ComplexField2D::ComplexField2D(Grid1D grid_x, Grid1D grid_y)
    : gx_(std::move(grid_x)), gy_(std::move(grid_y)) {
    data_size_ = static_cast<std::size_t>(gx_.n) * gy_.n;
    auto* raw = static_cast<std::complex<double>*>(
        ::operator new[](data_size_ * sizeof(std::complex<double>),
                         std::align_val_t{kFieldAlign}));
    data_.reset(raw);
    std::memset(static_cast<void*>(raw), 0, data_size_ * sizeof(std::complex<double>));
}

ComplexField2D::ComplexField2D(const ComplexField2D& o) : ComplexField2D(o.gx_, o.gy_) {
    std::memcpy(static_cast<void*>(data_.get()), o.data_.get(),
                data_size_ * sizeof(std::complex<double>));
}

ComplexField2D& ComplexField2D::operator=(const ComplexField2D& o) {
    if (this != &o) {
        ComplexField2D tmp(o);
        *this = std::move(tmp);
    }
    return *this;
}

double ComplexField2D::norm() const {
    double s = 0.0;
    const auto* d = data_.get();
    for (std::size_t i = 0; i < data_size_; ++i) s += std::norm(d[i]);
    return std::sqrt(s * cell_area());
}

void ComplexField2D::normalize() {
    const double nrm = norm();
    if (!(nrm > 1e-12))
        throw IntegrityError("field.null", "cannot normalize a null field");
    const double inv = 1.0 / nrm;
    auto* d = data_.get();
    for (std::size_t i = 0; i < data_size_; ++i) d[i] *= inv;
}

struct SpectralTransform::Plans {
    fftw_plan row_fwd = nullptr, row_bwd = nullptr;
    fftw_plan col_fwd = nullptr, col_bwd = nullptr;
    std::vector<std::complex<double>> scratch;
};

namespace {

fftw_plan plan_line(int n, int stride, fftw_complex* buf, int sign, unsigned flags) {
    fftw_iodim dim{n, stride, stride};
    return fftw_plan_guru_dft(1, &dim, 0, nullptr, buf, buf, sign, flags);
}

}  // namespace

SpectralTransform::SpectralTransform(int nx, int ny) : nx_(nx), ny_(ny) {
    if (!power_of_two(nx) || !power_of_two(ny) || nx < 8 || ny < 8)
        throw ValidationError("grid.n", "transform sizes must be powers of two >= 8");
    plans_ = std::make_unique<Plans>();
    // Plan on a scratch buffer with the same 64-byte alignment as field
    // storage; row starts share that alignment because ny >= 8.  Column
    // starts do not, so column plans are FFTW_UNALIGNED.
    plans_->scratch.assign(static_cast<std::size_t>(nx) * ny, {});
    auto* buf = reinterpret_cast<fftw_complex*>(plans_->scratch.data());
    plans_->row_fwd = plan_line(ny, 1, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plans_->row_bwd = plan_line(ny, 1, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    plans_->col_fwd = plan_line(nx, ny, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_->col_bwd = plan_line(nx, ny, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plans_->row_fwd || !plans_->row_bwd || !plans_->col_fwd || !plans_->col_bwd)
        throw IntegrityError("grid.fft_plan", "FFT planning failed");
}

SpectralTransform::~SpectralTransform() {
    fftw_destroy_plan(plans_->row_fwd);
    fftw_destroy_plan(plans_->row_bwd);
    fftw_destroy_plan(plans_->col_fwd);
    fftw_destroy_plan(plans_->col_bwd);
}

void SpectralTransform::check(const ComplexField2D& f) const {
    if (f.nx() != nx_ || f.ny() != ny_)
        throw ValidationError("grid.mismatch", "field does not match transform size");
}

namespace {

void run_lines(fftw_plan plan, std::complex<double>* base, std::size_t count,
               std::size_t stride, WorkerPool& pool) {
    pool.run_blocks(count, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            auto* p = reinterpret_cast<fftw_complex*>(base + i * stride);
            fftw_execute_dft(plan, p, p);
        }
    });
}

}  // namespace

void SpectralTransform::forward_raw(ComplexField2D& f, WorkerPool& pool) const {
    check(f);
    run_lines(plans_->row_fwd, f.data(), nx_, static_cast<std::size_t>(ny_), pool);
    run_lines(plans_->col_fwd, f.data(), ny_, 1, pool);
}

void SpectralTransform::inverse_raw(ComplexField2D& f, WorkerPool& pool) const {
    check(f);
    run_lines(plans_->col_bwd, f.data(), ny_, 1, pool);
    run_lines(plans_->row_bwd, f.data(), nx_, static_cast<std::size_t>(ny_), pool);
}

void SpectralTransform::scale(ComplexField2D& f, WorkerPool& pool) const {
    const double s = 1.0 / std::sqrt(static_cast<double>(nx_) * ny_);
    auto* d = f.data();
    pool.run_blocks(f.size(), [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) d[i] *= s;
    });
}

void SpectralTransform::forward(ComplexField2D& f, WorkerPool& pool) const {
    forward_raw(f, pool);
    scale(f, pool);
}

void SpectralTransform::inverse(ComplexField2D& f, WorkerPool& pool) const {
    inverse_raw(f, pool);
    scale(f, pool);
}

PhaseSpaceHistogram::PhaseSpaceHistogram(const Grid1D& grid, double pixel_scale) {
    if (!(pixel_scale > 0.0))
        throw ValidationError("histogram.pixel_scale", "pixel_scale must be positive");
    const int nb = std::max(1, static_cast<int>(std::lround(grid.n / pixel_scale)));
    nx_ = np_ = nb;
    x_lo_ = grid.x_min;
    p_lo_ = -grid.p_abs_max();
    wx_ = grid.n * grid.dx / nb;
    wp_ = grid.n * grid.dp / nb;
    hbar_ = grid.hbar;
    counts_.assign(static_cast<std::size_t>(nx_) * np_, 0);
}

void PhaseSpaceHistogram::accumulate(std::span<const double> xs,
                                     std::span<const double> ps, WorkerPool& pool) {
    if (xs.size() != ps.size())
        throw ValidationError("histogram.input", "x and p sample counts differ");
    const int w = pool.workers();
    const std::size_t cells = counts_.size();
    std::vector<std::int64_t> local(static_cast<std::size_t>(w) * (cells + 1), 0);

    // Division keeps samples exactly on a bin edge in the right bin: when
    // (v - lo) is a power-of-two multiple of the width the quotient is exact.
    pool.run_blocks(xs.size(), [&](int b, std::size_t lo, std::size_t hi) {
        std::int64_t* mine = local.data() + static_cast<std::size_t>(b) * (cells + 1);
        for (std::size_t i = lo; i < hi; ++i) {
            const double fx = (xs[i] - x_lo_) / wx_;
            const double fp = (ps[i] - p_lo_) / wp_;
            const int ix = static_cast<int>(std::floor(fx));
            const int ip = static_cast<int>(std::floor(fp));
            if (ix < 0 || ix >= nx_ || ip < 0 || ip >= np_)
                ++mine[cells];  // out of range
            else
                ++mine[static_cast<std::size_t>(ix) * np_ + ip];
        }
    });

    for (int b = 0; b < w; ++b) {
        const std::int64_t* mine = local.data() + static_cast<std::size_t>(b) * (cells + 1);
        for (std::size_t c = 0; c < cells; ++c) counts_[c] += mine[c];
        out_of_range_ += mine[cells];
    }
    total_ += static_cast<std::int64_t>(xs.size());
}

double PhaseSpaceHistogram::oor_fraction() const {
    return total_ == 0 ? 0.0 : static_cast<double>(out_of_range_) / total_;
}

double PhaseSpaceHistogram::density(int ix, int ip) const {
    if (total_ == 0) return 0.0;
    return static_cast<double>(count(ix, ip)) / (static_cast<double>(total_) * wx_ * wp_);
}

}  // namespace qcent
