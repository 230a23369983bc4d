#pragma once

#include "wavelab/dyadic.hpp"

#include <map>
#include <memory>

namespace wavelab {

/// Radial slice of R^n, n >= 2: samples live on r_i = i h, i = 1..M, and the
/// n-dimensional Fourier transform of u(|x|) is realized as an order
/// (n/2 - 1) Hankel-type quadrature, precomputed once as a dense matrix pair
/// (unitary convention, so a standard Gaussian is a fixed point).
class RadialGeometry {
  public:
    RadialGeometry(int n_dim, int m_points, double r_max, double p_max, int j_min = -5);

    int n_dim() const { return n_dim_; }
    int m_points() const { return m_; }
    double r_max() const { return r_max_; }
    double p_max() const { return p_max_; }
    double bessel_order() const { return nu_; }
    double sphere_area() const { return omega_; }
    const DyadicSystem& dyadic() const { return dyadic_; }

    const ArrayXd& freq_mags() const { return rho_; }
    const ArrayXd& radii() const { return r_; }
    /// omega_{n-1} r^{n-1} w_i, so sum(qw * |u|^p) integrates over R^n.
    const ArrayXd& quad_weights() const { return qw_phys_; }
    const ArrayXd& quad_weights_freq() const { return qw_freq_; }
    int norm_dim() const { return n_dim_; }
    bool has_zero_mode() const { return false; }

    ArrayXcd to_spectrum(const ArrayXcd& samples) const;
    ArrayXcd to_samples(const ArrayXcd& spectrum) const;

    /// Direct quadrature of the transform at arbitrary frequencies (used as
    /// an independent check of the cached-matrix path).
    ArrayXd analyze_at(const ArrayXd& profile, const ArrayXd& rho_values) const;

    /// Inverse synthesis at arbitrary radii (including r = 0).
    ArrayXd synthesize_at(const ArrayXd& spectrum, const ArrayXd& r_values) const;

    /// Relative profile magnitude at the outer boundary; transforms require
    /// this to be below the stated decay threshold.
    static double boundary_decay(const ArrayXcd& samples);

  private:
    const Eigen::MatrixXd& fwd() const;
    const Eigen::MatrixXd& inv() const;

    int n_dim_, m_;
    double r_max_, p_max_, nu_, omega_;
    DyadicSystem dyadic_;
    ArrayXd r_, rho_, wr_, wrho_, qw_phys_, qw_freq_;
    // Dense transform matrices are built on first use (M^2 Bessel evaluations).
    mutable std::shared_ptr<const std::pair<Eigen::MatrixXd, Eigen::MatrixXd>> matrices_;
};

using RadialGeometryPtr = std::shared_ptr<const RadialGeometry>;

RadialGeometryPtr make_radial_geometry(int n_dim, int m_points, double r_max, double p_max,
                                       int j_min = -5);

/// Radial field: same access surface as GridField so that norms, projections
/// and the wave propagator are generic over the two backends.
class RadialField {
  public:
    using GeometryPtr = RadialGeometryPtr;

    RadialField() = default;

    static RadialField from_samples(RadialGeometryPtr geo, ArrayXcd samples, Flags flags = {});
    static RadialField from_spectrum(RadialGeometryPtr geo, const ArrayXcd& spectrum, Flags flags = {});
    static RadialField zero(RadialGeometryPtr geo);

    const RadialGeometryPtr& geo() const { return geo_; }
    const ArrayXcd& samples() const { return samples_; }
    const ArrayXcd& spectrum() const;
    const Flags& flags() const { return flags_; }
    Flags& flags() { return flags_; }

    const RadialField& block(int j) const;
    void drop_caches() const;

    RadialField& operator+=(const RadialField& o);
    RadialField& operator-=(const RadialField& o);
    RadialField& operator*=(double a);
    friend RadialField operator+(RadialField a, const RadialField& b) { return a += b; }
    friend RadialField operator-(RadialField a, const RadialField& b) { return a -= b; }
    friend RadialField operator*(double a, RadialField f) { return f *= a; }

  private:
    struct Cache {
        std::shared_ptr<const ArrayXcd> spectrum;
        std::map<int, std::shared_ptr<const RadialField>> blocks;
    };
    RadialGeometryPtr geo_;
    ArrayXcd samples_;
    Flags flags_;
    mutable std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Decay-checked n-dimensional Fourier transform of a radial profile.
/// Throws TruncationError when the profile has not decayed at r_max.
RadialField radial_fourier(const RadialField& u, double decay_threshold = 1e-12);

}  // namespace wavelab
