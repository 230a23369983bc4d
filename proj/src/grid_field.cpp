#include "wavelab/grid_field.hpp"

#include <unsupported/Eigen/FFT>

namespace wavelab {

GridGeometry::GridGeometry(int dim, int n_per_axis, double half_width, int j_min)
    : dim_(dim), n_(n_per_axis), half_width_(half_width) {
    if (dim < 1 || dim > 3) throw ConfigError("grid dimension must be 1, 2 or 3");
    if (n_ < 4 || (n_ & (n_ - 1)) != 0) throw ConfigError("grid size must be a power of two >= 4");
    if (half_width_ <= 0) throw ConfigError("box half-width must be positive");

    points_ = 1;
    for (int a = 0; a < dim_; ++a) points_ *= n_;
    double dx = 2.0 * half_width_ / n_;
    cell_volume_ = std::pow(dx, dim_);

    double xi_max = kPi / half_width_ * (n_ / 2);
    dyadic_.j_min = j_min;
    dyadic_.j_max = static_cast<int>(std::floor(std::log2(xi_max / 2.0)));

    freq_mags_.resize(points_);
    radii_.resize(points_);
    quad_weights_ = ArrayXd::Constant(points_, cell_volume_);

    const double dxi = kPi / half_width_;
    for (Eigen::Index idx = 0; idx < points_; ++idx) {
        Eigen::Index rest = idx;
        double xi2 = 0.0, x2 = 0.0;
        for (int a = 0; a < dim_; ++a) {
            int k = static_cast<int>(rest % n_);
            rest /= n_;
            int signed_k = k <= n_ / 2 ? k : k - n_;
            double xi = dxi * signed_k;
            xi2 += xi * xi;
            double x = -half_width_ + dx * k;
            x2 += x * x;
        }
        freq_mags_[idx] = std::sqrt(xi2);
        radii_[idx] = std::sqrt(x2);
    }
}

double GridGeometry::coord(int index_1d) const {
    return -half_width_ + 2.0 * half_width_ / n_ * index_1d;
}

Eigen::Index GridGeometry::flat_index(const std::vector<int>& k) const {
    if (static_cast<int>(k.size()) != dim_) throw ConfigError("index arity mismatch");
    Eigen::Index idx = 0;
    for (int a = dim_ - 1; a >= 0; --a) {
        int kk = ((k[a] % n_) + n_) % n_;
        idx = idx * n_ + kk;
    }
    return idx;
}

namespace {

// In-place FFT along each axis of a flattened d-cube; sign = +1 forward.
void fft_nd(ArrayXcd& data, int dim, int n, bool forward) {
    Eigen::FFT<double> fft;
    std::vector<Complex> line(n), out(n);
    Eigen::Index points = data.size();
    for (int axis = 0; axis < dim; ++axis) {
        Eigen::Index stride = 1;
        for (int a = 0; a < axis; ++a) stride *= n;
        Eigen::Index outer = points / (stride * n);
        for (Eigen::Index o = 0; o < outer; ++o) {
            for (Eigen::Index s = 0; s < stride; ++s) {
                Eigen::Index base = o * stride * n + s;
                for (int i = 0; i < n; ++i) line[i] = data[base + stride * i];
                if (forward)
                    fft.fwd(out, line);
                else
                    fft.inv(out, line);
                for (int i = 0; i < n; ++i) data[base + stride * i] = out[i];
            }
        }
    }
}

}  // namespace

ArrayXcd GridGeometry::to_spectrum(const ArrayXcd& samples) const {
    if (samples.size() != points_) throw ConfigError("sample count does not match geometry");
    ArrayXcd work = samples;
    fft_nd(work, dim_, n_, true);
    // Eigen's fwd is an unnormalized sum; coefficients need 1/N per axis.
    // Sign convention: samples at x_i = -L + i dx, so c_k picks up a phase
    // e^{+i xi_k L} relative to the index-space DFT.
    work /= static_cast<double>(points_);
    // The shift from index space to x_i = -L + i dx contributes e^{i pi k}
    // per axis, an exact sign given by the parity of the mode indices.
    for (Eigen::Index idx = 0; idx < points_; ++idx) {
        Eigen::Index rest = idx;
        int parity = 0;
        for (int a = 0; a < dim_; ++a) {
            parity += static_cast<int>(rest % n_);
            rest /= n_;
        }
        if (parity & 1) work[idx] = -work[idx];
    }
    return work;
}

ArrayXcd GridGeometry::to_samples(const ArrayXcd& spectrum) const {
    if (spectrum.size() != points_) throw ConfigError("spectrum size does not match geometry");
    ArrayXcd work = spectrum;
    for (Eigen::Index idx = 0; idx < points_; ++idx) {
        Eigen::Index rest = idx;
        int parity = 0;
        for (int a = 0; a < dim_; ++a) {
            parity += static_cast<int>(rest % n_);
            rest /= n_;
        }
        if (parity & 1) work[idx] = -work[idx];
    }
    fft_nd(work, dim_, n_, false);
    work *= static_cast<double>(points_);
    return work;
}

GridGeometryPtr make_grid_geometry(int dim, int n_per_axis, double half_width, int j_min) {
    return std::make_shared<const GridGeometry>(dim, n_per_axis, half_width, j_min);
}

GridField GridField::from_samples(GridGeometryPtr geo, ArrayXcd samples, Flags flags) {
    GridField f;
    if (samples.size() != geo->points()) throw ConfigError("sample count does not match geometry");
    f.geo_ = std::move(geo);
    f.samples_ = std::move(samples);
    f.flags_ = flags;
    return f;
}

GridField GridField::from_spectrum(GridGeometryPtr geo, const ArrayXcd& spectrum, Flags flags) {
    GridField f;
    f.samples_ = geo->to_samples(spectrum);
    f.geo_ = std::move(geo);
    f.flags_ = flags;
    f.cache_->spectrum = std::make_shared<const ArrayXcd>(spectrum);
    return f;
}

GridField GridField::zero(GridGeometryPtr geo) {
    Eigen::Index n = geo->points();
    return from_samples(std::move(geo), ArrayXcd::Zero(n));
}

const ArrayXcd& GridField::spectrum() const {
    if (!cache_->spectrum) cache_->spectrum = std::make_shared<const ArrayXcd>(geo_->to_spectrum(samples_));
    return *cache_->spectrum;
}

const GridField& GridField::block(int j) const {
    auto it = cache_->blocks.find(j);
    if (it == cache_->blocks.end()) {
        const auto& sys = geo_->dyadic();
        ArrayXcd masked = spectrum();
        for (Eigen::Index i = 0; i < masked.size(); ++i) masked[i] *= sys.psi(j, geo_->freq_mags()[i]);
        Flags flags = flags_;
        flags.truncation = flags.truncation || !sys.in_range(j);
        auto f = std::make_shared<GridField>(from_spectrum(geo_, masked, flags));
        it = cache_->blocks.emplace(j, std::move(f)).first;
    }
    return *it->second;
}

void GridField::drop_caches() const { cache_ = std::make_shared<Cache>(); }

// Linear operations carry the cached spectrum along (exactly linear), so a
// field built spectrally never round-trips through the transform.

GridField& GridField::operator+=(const GridField& o) {
    if (geo_ != o.geo_) throw ConfigError("field geometry mismatch");
    samples_ += o.samples_;
    flags_ = flags_.merged(o.flags_);
    auto mine = cache_->spectrum, theirs = o.cache_->spectrum;
    drop_caches();
    if (mine && theirs) cache_->spectrum = std::make_shared<const ArrayXcd>(*mine + *theirs);
    return *this;
}

GridField& GridField::operator-=(const GridField& o) {
    if (geo_ != o.geo_) throw ConfigError("field geometry mismatch");
    samples_ -= o.samples_;
    flags_ = flags_.merged(o.flags_);
    auto mine = cache_->spectrum, theirs = o.cache_->spectrum;
    drop_caches();
    if (mine && theirs) cache_->spectrum = std::make_shared<const ArrayXcd>(*mine - *theirs);
    return *this;
}

GridField& GridField::operator*=(double a) {
    samples_ *= a;
    auto mine = cache_->spectrum;
    drop_caches();
    if (mine) cache_->spectrum = std::make_shared<const ArrayXcd>(a * *mine);
    return *this;
}

}  // namespace wavelab
