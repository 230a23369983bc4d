#include "wavelab/corpus.hpp"

#include <cmath>
#include <random>

namespace wavelab {

namespace {

std::mt19937_64 draw_rng(std::uint64_t seed, std::uint64_t draw) {
    return std::mt19937_64(detail::derive_seed(seed, draw));
}

}  // namespace

GridField grid_gaussian(const GridGeometryPtr& geo, const std::vector<double>& center, double width,
                        const std::vector<double>& wavevector, double phase, double amplitude) {
    const int d = geo->dim(), n = geo->n_per_axis();
    if (static_cast<int>(center.size()) != d || static_cast<int>(wavevector.size()) != d)
        throw ConfigError("gaussian parameters do not match grid dimension");
    ArrayXcd out(geo->points());
    for (Eigen::Index idx = 0; idx < geo->points(); ++idx) {
        Eigen::Index rest = idx;
        double q2 = 0.0, kx = 0.0;
        for (int a = 0; a < d; ++a) {
            int i = static_cast<int>(rest % n);
            rest /= n;
            double x = geo->coord(i);
            q2 += (x - center[a]) * (x - center[a]);
            kx += wavevector[a] * x;
        }
        out[idx] = amplitude * std::exp(-q2 / (2.0 * width * width)) * std::cos(kx + phase);
    }
    return GridField::from_samples(geo, std::move(out));
}

GridField grid_bump(const GridGeometryPtr& geo, double radius, double amplitude) {
    ArrayXcd out(geo->points());
    const ArrayXd& rad = geo->radii();
    for (Eigen::Index i = 0; i < geo->points(); ++i) {
        double t = rad[i] / radius;
        out[i] = t < 1.0 ? amplitude * std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
    }
    return GridField::from_samples(geo, std::move(out));
}

RadialField radial_gaussian(const RadialGeometryPtr& geo, double width, double amplitude) {
    ArrayXcd out = (amplitude * (-geo->radii().square() / (2.0 * width * width)).exp()).cast<Complex>();
    return RadialField::from_samples(geo, std::move(out));
}

RadialField radial_annular(const RadialGeometryPtr& geo, double center, double width,
                           double amplitude) {
    ArrayXd arg = (geo->radii().square() - center * center) / (width * width);
    ArrayXcd out = (amplitude * (-arg.square()).exp()).cast<Complex>();
    return RadialField::from_samples(geo, std::move(out));
}

GridField random_grid_gaussian(const GridGeometryPtr& geo, std::uint64_t seed, std::uint64_t draw) {
    auto rng = draw_rng(seed, draw);
    const double L = geo->half_width();
    std::uniform_real_distribution<double> pos(-L / 4, L / 4), wid(L / 24, L / 8), ph(0.0, 2.0 * kPi),
        amp(0.5, 2.0), mode(0.0, 4.0);
    std::vector<double> c(geo->dim()), k(geo->dim());
    for (auto& v : c) v = pos(rng);
    for (auto& v : k) v = mode(rng);
    return grid_gaussian(geo, c, wid(rng), k, ph(rng), amp(rng));
}

GridField random_band_field(const GridGeometryPtr& geo, int j, std::uint64_t seed,
                            std::uint64_t draw) {
    auto rng = draw_rng(seed, draw);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double lo = std::ldexp(1.0, j - 1), hi = std::ldexp(1.0, j + 1);
    const ArrayXd& mags = geo->freq_mags();
    ArrayXcd spec = ArrayXcd::Zero(geo->points());
    // Smooth taper inside the annulus keeps draws spectrally clean.
    for (Eigen::Index i = 0; i < spec.size(); ++i) {
        double m = mags[i];
        if (m <= lo || m >= hi) continue;
        double t = geo->dyadic().psi(j, m);
        spec[i] = Complex(gauss(rng), gauss(rng)) * t;
    }
    // Hermitian symmetrization would keep samples real; realness is not
    // required by any consumer, so keep the complex draw as-is.
    return GridField::from_spectrum(geo, spec);
}

GridField knapp_cap(const GridGeometryPtr& geo, int j, double delta, std::uint64_t seed,
                    std::uint64_t draw) {
    if (geo->dim() < 2) throw ConfigError("knapp caps need d >= 2");
    auto rng = draw_rng(seed, draw);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double kc = std::ldexp(1.0, j);
    const int d = geo->dim(), n = geo->n_per_axis();
    const double dxi = kPi / geo->half_width();
    ArrayXcd spec = ArrayXcd::Zero(geo->points());
    for (Eigen::Index idx = 0; idx < geo->points(); ++idx) {
        Eigen::Index rest = idx;
        double xi1 = 0.0, perp2 = 0.0;
        for (int a = 0; a < d; ++a) {
            int k = static_cast<int>(rest % n);
            rest /= n;
            int sk = k <= n / 2 ? k : k - n;
            double xi = dxi * sk;
            if (a == 0)
                xi1 = xi;
            else
                perp2 += xi * xi;
        }
        double along = (xi1 - kc) / (kc * delta * delta);
        double across = std::sqrt(perp2) / (kc * delta);
        if (std::abs(along) < 1.0 && across < 1.0) {
            double taper = std::exp(-along * along - across * across);
            spec[idx] = Complex(gauss(rng), gauss(rng)) * taper;
        }
    }
    return GridField::from_spectrum(geo, spec);
}

RadialField random_radial_bump(const RadialGeometryPtr& geo, std::uint64_t seed,
                               std::uint64_t draw) {
    auto rng = draw_rng(seed, draw);
    const double R = geo->r_max();
    std::uniform_real_distribution<double> cen(0.0, R / 5), wid(R / 24, R / 8), amp(0.5, 2.0);
    double c = cen(rng), w = wid(rng), a = amp(rng);
    if (c < w) return radial_gaussian(geo, w, a);
    return radial_annular(geo, c, std::sqrt(2.0 * c * w), a);
}

RadialField random_radial_band(const RadialGeometryPtr& geo, int j, std::uint64_t seed,
                               std::uint64_t draw) {
    auto rng = draw_rng(seed, draw);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const ArrayXd& mags = geo->freq_mags();
    ArrayXcd spec = ArrayXcd::Zero(geo->m_points());
    for (Eigen::Index i = 0; i < spec.size(); ++i) {
        double t = geo->dyadic().psi(j, mags[i]);
        if (t > 0.0) spec[i] = gauss(rng) * t;  // real spectrum: radial transform kernel is real
    }
    return RadialField::from_spectrum(geo, spec);
}

GridField dilating_grid_draw(const GridGeometryPtr& geo, double s, std::uint64_t seed,
                             std::uint64_t draw) {
    auto rng = draw_rng(seed ^ 0x64696c61ULL, draw);
    std::uniform_real_distribution<double> wid(0.8, 1.6), mode(0.7, 1.3), amp(0.5, 2.0),
        ph(0.0, 2.0 * kPi);
    double scale = std::pow(2.0, -s);
    double w = wid(rng) * scale;
    std::vector<double> c(geo->dim(), 0.0), k(geo->dim(), 0.0);
    k[0] = mode(rng) / scale;
    return grid_gaussian(geo, c, w, k, ph(rng), amp(rng));
}

RadialField dilating_radial_draw(const RadialGeometryPtr& geo, double s, std::uint64_t seed,
                                 std::uint64_t draw) {
    auto rng = draw_rng(seed ^ 0x64696c61ULL, draw);
    std::uniform_real_distribution<double> wid(0.6, 1.4), cen(0.0, 1.2), amp(0.5, 2.0);
    double scale = std::pow(2.0, -s);
    double w = wid(rng) * scale;
    double c = cen(rng) * scale;
    if (c < 0.5 * w) return radial_gaussian(geo, w, amp(rng));
    return radial_annular(geo, c, std::sqrt(2.0 * c * w), amp(rng));
}

std::vector<GridField> make_grid_corpus(const GridGeometryPtr& geo, std::uint64_t seed) {
    std::vector<GridField> out;
    out.reserve(20);
    for (std::uint64_t i = 0; i < 8; ++i) out.push_back(random_grid_gaussian(geo, seed, i));
    out.push_back(grid_bump(geo, geo->half_width() / 4));
    out.push_back(grid_bump(geo, geo->half_width() / 8, 1.5));
    int j_lo = std::max(geo->dyadic().j_min + 3, -1);
    int j_hi = geo->dyadic().j_max - 1;
    for (std::uint64_t i = 0; i < 10; ++i) {
        int j = j_lo + static_cast<int>(i % static_cast<std::uint64_t>(j_hi - j_lo + 1));
        out.push_back(random_band_field(geo, j, seed, 100 + i));
    }
    return out;
}

std::vector<RadialField> make_radial_corpus(const RadialGeometryPtr& geo, std::uint64_t seed) {
    std::vector<RadialField> out;
    out.reserve(20);
    for (std::uint64_t i = 0; i < 8; ++i) out.push_back(random_radial_bump(geo, seed, i));
    out.push_back(radial_gaussian(geo, 1.0));
    out.push_back(radial_gaussian(geo, 0.5, 1.5));
    int j_lo = std::max(geo->dyadic().j_min + 3, -1);
    int j_hi = geo->dyadic().j_max - 1;
    for (std::uint64_t i = 0; i < 10; ++i) {
        int j = j_lo + static_cast<int>(i % static_cast<std::uint64_t>(j_hi - j_lo + 1));
        out.push_back(random_radial_band(geo, j, seed, 100 + i));
    }
    return out;
}

}  // namespace wavelab
