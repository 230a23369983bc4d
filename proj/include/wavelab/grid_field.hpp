#pragma once

#include "wavelab/dyadic.hpp"

#include <map>
#include <memory>
#include <vector>

namespace wavelab {

/// Periodic box [-L, L)^d sampled on N points per axis, d <= 3.  Acts as the
/// desk-scale proxy for R^d: the zero mode plays the role of the quotient by
/// constants, and everything below j_min or above j_max is reported as
/// truncation rather than silently dropped.
class GridGeometry {
  public:
    GridGeometry(int dim, int n_per_axis, double half_width, int j_min = -5);

    int dim() const { return dim_; }
    int n_per_axis() const { return n_; }
    Eigen::Index points() const { return points_; }
    double half_width() const { return half_width_; }
    double cell_volume() const { return cell_volume_; }
    const DyadicSystem& dyadic() const { return dyadic_; }

    /// |xi| for each flattened spectral index (DFT ordering, xi = (pi/L) k).
    const ArrayXd& freq_mags() const { return freq_mags_; }
    /// |x| for each flattened sample index, coordinates in [-L, L).
    const ArrayXd& radii() const { return radii_; }
    /// Quadrature weight per sample (uniform cell volume).
    const ArrayXd& quad_weights() const { return quad_weights_; }
    /// Dimension entering norms and Bernstein factors.
    int norm_dim() const { return dim_; }
    bool has_zero_mode() const { return true; }

    double coord(int index_1d) const;  // x along one axis for index in [0, N)

    /// Forward transform to Fourier coefficients c_k (u = sum c_k e^{i xi_k x}).
    ArrayXcd to_spectrum(const ArrayXcd& samples) const;
    ArrayXcd to_samples(const ArrayXcd& spectrum) const;

    Eigen::Index flat_index(const std::vector<int>& k) const;

  private:
    int dim_, n_;
    Eigen::Index points_;
    double half_width_, cell_volume_;
    DyadicSystem dyadic_;
    ArrayXd freq_mags_, radii_, quad_weights_;
};

using GridGeometryPtr = std::shared_ptr<const GridGeometry>;

GridGeometryPtr make_grid_geometry(int dim, int n_per_axis, double half_width, int j_min = -5);

/// Complex scalar field on a GridGeometry.  Sample data is the primary
/// representation; the spectrum and dyadic blocks are lazily cached.
class GridField {
  public:
    using GeometryPtr = GridGeometryPtr;

    GridField() = default;

    static GridField from_samples(GridGeometryPtr geo, ArrayXcd samples, Flags flags = {});
    static GridField from_spectrum(GridGeometryPtr geo, const ArrayXcd& spectrum, Flags flags = {});
    static GridField zero(GridGeometryPtr geo);

    const GridGeometryPtr& geo() const { return geo_; }
    const ArrayXcd& samples() const { return samples_; }
    const ArrayXcd& spectrum() const;
    const Flags& flags() const { return flags_; }
    Flags& flags() { return flags_; }

    double mean() const { return spectrum()[0].real(); }

    /// Dyadic block P_j u; write-once per-field cache.
    const GridField& block(int j) const;
    void drop_caches() const;

    GridField& operator+=(const GridField& o);
    GridField& operator-=(const GridField& o);
    GridField& operator*=(double a);
    friend GridField operator+(GridField a, const GridField& b) { return a += b; }
    friend GridField operator-(GridField a, const GridField& b) { return a -= b; }
    friend GridField operator*(double a, GridField f) { return f *= a; }

  private:
    struct Cache {
        std::shared_ptr<const ArrayXcd> spectrum;
        std::map<int, std::shared_ptr<const GridField>> blocks;
    };
    GridGeometryPtr geo_;
    ArrayXcd samples_;
    Flags flags_;
    mutable std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace wavelab
