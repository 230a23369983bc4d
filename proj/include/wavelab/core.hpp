#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wavelab {

using Eigen::ArrayXd;
using Eigen::ArrayXcd;
using Eigen::ArrayXi;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Invalid argument to an operation (bad exponent, negative index, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested power lies outside the energy supercritical range p > p_H1.
struct OutOfScopeError : DomainError {
    using DomainError::DomainError;
};

/// Inconsistent configuration (grid mismatch, exponent relation violated, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical truncation exceeded what the operation tolerates.
struct TruncationError : std::runtime_error {
    TruncationError(const std::string& what, double bound)
        : std::runtime_error(what), estimated_bound(bound) {}
    double estimated_bound;
};

/// Non-fatal diagnostics attached to field results.
struct Flags {
    bool truncation = false;      // spectral content beyond [j_min, j_max]
    double leakage = 0.0;         // relative mass outside the dyadic window

    Flags merged(const Flags& o) const {
        return Flags{truncation || o.truncation, leakage > o.leakage ? leakage : o.leakage};
    }
};

namespace detail {

/// splitmix64; used to derive independent per-draw seeds from (seed, counter).
inline std::uint64_t hash_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
    return hash_mix(seed ^ hash_mix(counter));
}

}  // namespace detail
}  // namespace wavelab
