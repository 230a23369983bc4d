#include "wavelab/radial_field.hpp"

#include <cmath>

namespace wavelab {

namespace {

double sphere_surface_area(int n) {
    return 2.0 * std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0);
}

}  // namespace

RadialGeometry::RadialGeometry(int n_dim, int m_points, double r_max, double p_max, int j_min)
    : n_dim_(n_dim), m_(m_points), r_max_(r_max), p_max_(p_max) {
    if (n_dim_ < 2) throw ConfigError("radial profiles need dimension n >= 2");
    if (m_ < 8) throw ConfigError("radial grid too small");
    if (r_max_ <= 0 || p_max_ <= 0) throw ConfigError("radial extents must be positive");

    nu_ = n_dim_ / 2.0 - 1.0;
    omega_ = sphere_surface_area(n_dim_);
    dyadic_.j_min = j_min;
    dyadic_.j_max = static_cast<int>(std::floor(std::log2(p_max_ / 2.0)));

    const double hr = r_max_ / m_, hp = p_max_ / m_;
    r_.resize(m_);
    rho_.resize(m_);
    wr_.resize(m_);
    wrho_.resize(m_);
    for (int i = 0; i < m_; ++i) {
        r_[i] = hr * (i + 1);
        rho_[i] = hp * (i + 1);
        wr_[i] = (i + 1 == m_) ? hr / 2 : hr;  // trapezoid; the r = 0 node carries weight 0
        wrho_[i] = (i + 1 == m_) ? hp / 2 : hp;
    }
    qw_phys_ = omega_ * wr_ * r_.pow(n_dim_ - 1);
    qw_freq_ = omega_ * wrho_ * rho_.pow(n_dim_ - 1);
}

const Eigen::MatrixXd& RadialGeometry::fwd() const {
    if (!matrices_) {
        // Unitary pair: uhat(rho) = rho^-nu Int u(r) J_nu(r rho) r^(nu+1) dr and back.
        auto mats = std::make_shared<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>>();
        mats->first.resize(m_, m_);
        mats->second.resize(m_, m_);
        for (int k = 0; k < m_; ++k)
            for (int i = 0; i < m_; ++i) {
                double kernel = std::cyl_bessel_j(nu_, r_[i] * rho_[k]);
                mats->first(k, i) = wr_[i] * kernel * std::pow(r_[i], nu_ + 1.0) / std::pow(rho_[k], nu_);
                mats->second(i, k) = wrho_[k] * kernel * std::pow(rho_[k], nu_ + 1.0) / std::pow(r_[i], nu_);
            }
        matrices_ = std::move(mats);
    }
    return matrices_->first;
}

const Eigen::MatrixXd& RadialGeometry::inv() const { return fwd(), matrices_->second; }

ArrayXcd RadialGeometry::to_spectrum(const ArrayXcd& samples) const {
    if (samples.size() != m_) throw ConfigError("sample count does not match radial geometry");
    Eigen::VectorXd re = fwd() * samples.real().matrix();
    Eigen::VectorXd im = fwd() * samples.imag().matrix();
    ArrayXcd out(m_);
    out.real() = re.array();
    out.imag() = im.array();
    return out;
}

ArrayXcd RadialGeometry::to_samples(const ArrayXcd& spectrum) const {
    if (spectrum.size() != m_) throw ConfigError("spectrum size does not match radial geometry");
    Eigen::VectorXd re = inv() * spectrum.real().matrix();
    Eigen::VectorXd im = inv() * spectrum.imag().matrix();
    ArrayXcd out(m_);
    out.real() = re.array();
    out.imag() = im.array();
    return out;
}

ArrayXd RadialGeometry::analyze_at(const ArrayXd& profile, const ArrayXd& rho_values) const {
    if (profile.size() != m_) throw ConfigError("profile size does not match radial geometry");
    ArrayXd out(rho_values.size());
    for (Eigen::Index k = 0; k < rho_values.size(); ++k) {
        double rho = rho_values[k];
        double acc = 0.0;
        for (int i = 0; i < m_; ++i)
            acc += wr_[i] * profile[i] * std::cyl_bessel_j(nu_, r_[i] * rho) * std::pow(r_[i], nu_ + 1.0);
        out[k] = acc / std::pow(rho, nu_);
    }
    return out;
}

ArrayXd RadialGeometry::synthesize_at(const ArrayXd& spectrum, const ArrayXd& r_values) const {
    if (spectrum.size() != m_) throw ConfigError("spectrum size does not match radial geometry");
    ArrayXd out(r_values.size());
    for (Eigen::Index i = 0; i < r_values.size(); ++i) {
        double r = r_values[i];
        double acc = 0.0;
        if (r == 0.0) {
            // J_nu(x)/x^nu -> 1/(2^nu Gamma(nu+1)) as x -> 0
            double limit = 1.0 / (std::pow(2.0, nu_) * std::tgamma(nu_ + 1.0));
            for (int k = 0; k < m_; ++k)
                acc += wrho_[k] * spectrum[k] * limit * std::pow(rho_[k], 2.0 * nu_ + 1.0);
        } else {
            for (int k = 0; k < m_; ++k)
                acc += wrho_[k] * spectrum[k] * std::cyl_bessel_j(nu_, r * rho_[k]) *
                       std::pow(rho_[k], nu_ + 1.0) / std::pow(r, nu_);
        }
        out[i] = acc;
    }
    return out;
}

double RadialGeometry::boundary_decay(const ArrayXcd& samples) {
    double peak = samples.abs().maxCoeff();
    if (peak == 0.0) return 0.0;
    return std::abs(samples[samples.size() - 1]) / peak;
}

RadialGeometryPtr make_radial_geometry(int n_dim, int m_points, double r_max, double p_max,
                                       int j_min) {
    return std::make_shared<const RadialGeometry>(n_dim, m_points, r_max, p_max, j_min);
}

RadialField RadialField::from_samples(RadialGeometryPtr geo, ArrayXcd samples, Flags flags) {
    RadialField f;
    if (samples.size() != geo->m_points()) throw ConfigError("sample count does not match geometry");
    f.geo_ = std::move(geo);
    f.samples_ = std::move(samples);
    f.flags_ = flags;
    return f;
}

RadialField RadialField::from_spectrum(RadialGeometryPtr geo, const ArrayXcd& spectrum, Flags flags) {
    RadialField f;
    f.samples_ = geo->to_samples(spectrum);
    f.geo_ = std::move(geo);
    f.flags_ = flags;
    f.cache_->spectrum = std::make_shared<const ArrayXcd>(spectrum);
    return f;
}

RadialField RadialField::zero(RadialGeometryPtr geo) {
    Eigen::Index n = geo->m_points();
    return from_samples(std::move(geo), ArrayXcd::Zero(n));
}

const ArrayXcd& RadialField::spectrum() const {
    if (!cache_->spectrum) cache_->spectrum = std::make_shared<const ArrayXcd>(geo_->to_spectrum(samples_));
    return *cache_->spectrum;
}

const RadialField& RadialField::block(int j) const {
    auto it = cache_->blocks.find(j);
    if (it == cache_->blocks.end()) {
        const auto& sys = geo_->dyadic();
        ArrayXcd masked = spectrum();
        for (Eigen::Index i = 0; i < masked.size(); ++i) masked[i] *= sys.psi(j, geo_->freq_mags()[i]);
        Flags flags = flags_;
        flags.truncation = flags.truncation || !sys.in_range(j);
        auto f = std::make_shared<RadialField>(from_spectrum(geo_, masked, flags));
        it = cache_->blocks.emplace(j, std::move(f)).first;
    }
    return *it->second;
}

void RadialField::drop_caches() const { cache_ = std::make_shared<Cache>(); }

// Linear operations carry the cached spectrum along (exactly linear), so a
// field built spectrally never round-trips through the transform.

RadialField& RadialField::operator+=(const RadialField& o) {
    if (geo_ != o.geo_) throw ConfigError("field geometry mismatch");
    samples_ += o.samples_;
    flags_ = flags_.merged(o.flags_);
    auto mine = cache_->spectrum, theirs = o.cache_->spectrum;
    drop_caches();
    if (mine && theirs) cache_->spectrum = std::make_shared<const ArrayXcd>(*mine + *theirs);
    return *this;
}

RadialField& RadialField::operator-=(const RadialField& o) {
    if (geo_ != o.geo_) throw ConfigError("field geometry mismatch");
    samples_ -= o.samples_;
    flags_ = flags_.merged(o.flags_);
    auto mine = cache_->spectrum, theirs = o.cache_->spectrum;
    drop_caches();
    if (mine && theirs) cache_->spectrum = std::make_shared<const ArrayXcd>(*mine - *theirs);
    return *this;
}

RadialField& RadialField::operator*=(double a) {
    samples_ *= a;
    auto mine = cache_->spectrum;
    drop_caches();
    if (mine) cache_->spectrum = std::make_shared<const ArrayXcd>(a * *mine);
    return *this;
}

RadialField radial_fourier(const RadialField& u, double decay_threshold) {
    const auto& geo = *u.geo();
    if (geo.r_max() != geo.p_max())
        throw ConfigError("radial_fourier needs matching physical and frequency extents");
    double decay = RadialGeometry::boundary_decay(u.samples());
    if (decay > decay_threshold)
        throw TruncationError("radial profile has not decayed at r_max (relative boundary value " +
                                  std::to_string(decay) + ")",
                              decay);
    // The frequency profile itself becomes the samples of the returned field;
    // applying the transform twice recovers the input (radial, hence even).
    return RadialField::from_samples(u.geo(), u.spectrum());
}

}  // namespace wavelab
