#pragma once

#include "wavelab/grid_field.hpp"
#include "wavelab/radial_field.hpp"

#include <cstdint>
#include <vector>

namespace wavelab {

/// Deterministic data families for the sampling suites.  Every draw derives
/// its own generator from (seed, counter), so results do not depend on
/// evaluation order or thread count.

// -- analytic constructors -------------------------------------------------

/// exp(-|x - c|^2 / (2 w^2)) * cos(k . x + phase), sampled on the grid.
GridField grid_gaussian(const GridGeometryPtr& geo, const std::vector<double>& center, double width,
                        const std::vector<double>& wavevector, double phase, double amplitude = 1.0);

/// Smooth compactly-supported radial bump of unit height and radius.
GridField grid_bump(const GridGeometryPtr& geo, double radius, double amplitude = 1.0);

/// Centered Gaussian profile exp(-r^2 / (2 w^2)).
RadialField radial_gaussian(const RadialGeometryPtr& geo, double width, double amplitude = 1.0);

/// Annular even bump exp(-((r^2 - c^2)/w^2)^2); smooth as a function on R^n.
RadialField radial_annular(const RadialGeometryPtr& geo, double center, double width,
                           double amplitude = 1.0);

// -- seeded random families -------------------------------------------------

GridField random_grid_gaussian(const GridGeometryPtr& geo, std::uint64_t seed, std::uint64_t draw);

/// Spectrum-supported white noise restricted to the dyadic annulus at scale j.
GridField random_band_field(const GridGeometryPtr& geo, int j, std::uint64_t seed, std::uint64_t draw);

/// Anisotropic cap: modes within |xi_1 - 2^j| <~ 2^j delta^2, |xi_perp| <~ 2^j delta.
GridField knapp_cap(const GridGeometryPtr& geo, int j, double delta, std::uint64_t seed,
                    std::uint64_t draw);

RadialField random_radial_bump(const RadialGeometryPtr& geo, std::uint64_t seed, std::uint64_t draw);

RadialField random_radial_band(const RadialGeometryPtr& geo, int j, std::uint64_t seed,
                               std::uint64_t draw);

/// Exact analytic dilates: the draw at scale s is the scale-0 draw composed
/// with x -> 2^s x (s need not be an integer), so ratio statistics over s
/// probe true scale covariance.
GridField dilating_grid_draw(const GridGeometryPtr& geo, double s, std::uint64_t seed,
                             std::uint64_t draw);
RadialField dilating_radial_draw(const RadialGeometryPtr& geo, double s, std::uint64_t seed,
                                 std::uint64_t draw);

// -- the 20-function verification corpus ------------------------------------

std::vector<GridField> make_grid_corpus(const GridGeometryPtr& geo, std::uint64_t seed);
std::vector<RadialField> make_radial_corpus(const RadialGeometryPtr& geo, std::uint64_t seed);

}  // namespace wavelab
