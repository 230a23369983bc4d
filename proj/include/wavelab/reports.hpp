#pragma once

#include "wavelab/estimates.hpp"
#include "wavelab/json_io.hpp"
#include "wavelab/nonlinearity.hpp"
#include "wavelab/picard.hpp"
#include "wavelab/radial_fd.hpp"

#include <filesystem>

namespace wavelab {

inline constexpr int kFixtureSchemaVersion = 1;

void to_json(json& j, const RatioReport& r);
void to_json(json& j, const MeasuredConstants& c);
void to_json(json& j, const IterationReport& r);
void to_json(json& j, const NonlinearityCheck& c);
void to_json(json& j, const LocalizationReport& r);
void to_json(json& j, const UniquenessReport& r);

/// Fixture file: measured constants plus the grid/seed metadata that makes
/// them reproducible bit-for-bit on the same build.
struct FixtureRecord {
    MeasuredConstants constants;
    int n = 0;
    Rational p;
    int m_points = 0;
    double r_max = 0.0, p_max = 0.0;
    double horizon = 0.0;
    int time_steps = 0;
};

void write_fixture(const std::filesystem::path& path, const FixtureRecord& record);
FixtureRecord read_fixture(const std::filesystem::path& path);

/// CSV emitters (plain columnar data, no plotting).
std::string scan_table_csv(const ScanTable& table);

/// Space-separated blocks (one per power, blank-line separated) consumable
/// directly by any columnar plotter.
std::string scan_table_dat(const ScanTable& table);

/// Grid sweep over p for one dimension: one row per grid point with the case
/// label, s_c, s_0 and the verdict summary.
std::string exponent_sweep_csv(int n, int count, int denom = 1000);

/// Per-node norm trace of a space-time field: t, constituent norms, running
/// iteration norm.
std::string xt_trace_csv(const SpaceTimeField<RadialField>& u, const ExponentProfile& pr);

}  // namespace wavelab
