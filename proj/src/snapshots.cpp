#include "wavelab/snapshots.hpp"

#include <json.hpp>

#include <cstring>
#include <fstream>

namespace wavelab {

namespace {

constexpr char kMagic[4] = {'W', 'L', 'F', '1'};
constexpr std::uint32_t kKindGrid = 0;
constexpr std::uint32_t kKindRadial = 1;
constexpr std::uint32_t kDtypeComplexF64 = 0;

struct Header {
    char magic[4];
    std::uint32_t kind = 0;
    std::uint32_t dtype = kDtypeComplexF64;
    std::int32_t dim = 0;       // spatial dimension (grid d or radial n)
    std::int32_t n_axis = 0;    // points per axis / radial nodes
    std::int32_t j_min = 0;
    double half_width = 0.0;    // box half-width / r_max
    double p_max = 0.0;         // radial only
    std::uint64_t count = 0;    // complex samples following
};

void write_header_and_data(std::ofstream& out, Header h, const ArrayXcd& data) {
    std::memcpy(h.magic, kMagic, 4);
    h.count = static_cast<std::uint64_t>(data.size());
    out.write(reinterpret_cast<const char*>(&h), sizeof(h));
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(sizeof(Complex) * data.size()));
    if (!out) throw ConfigError("snapshot write failed");
}

Header read_header(std::ifstream& in, const std::filesystem::path& path) {
    Header h;
    in.read(reinterpret_cast<char*>(&h), sizeof(h));
    if (!in || std::memcmp(h.magic, kMagic, 4) != 0)
        throw ConfigError("not a field snapshot: " + path.string());
    if (h.dtype != kDtypeComplexF64) throw ConfigError("unsupported snapshot dtype");
    return h;
}

ArrayXcd read_data(std::ifstream& in, std::uint64_t count) {
    ArrayXcd data(static_cast<Eigen::Index>(count));
    in.read(reinterpret_cast<char*>(data.data()),
            static_cast<std::streamsize>(sizeof(Complex) * count));
    if (!in) throw ConfigError("snapshot truncated");
    return data;
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const GridField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open " + path.string());
    const auto& g = *field.geo();
    Header h;
    h.kind = kKindGrid;
    h.dim = g.dim();
    h.n_axis = g.n_per_axis();
    h.j_min = g.dyadic().j_min;
    h.half_width = g.half_width();
    write_header_and_data(out, h, field.samples());
}

void write_snapshot(const std::filesystem::path& path, const RadialField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open " + path.string());
    const auto& g = *field.geo();
    Header h;
    h.kind = kKindRadial;
    h.dim = g.n_dim();
    h.n_axis = g.m_points();
    h.j_min = g.dyadic().j_min;
    h.half_width = g.r_max();
    h.p_max = g.p_max();
    write_header_and_data(out, h, field.samples());
}

std::string snapshot_kind(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    Header h = read_header(in, path);
    return h.kind == kKindGrid ? "grid" : "radial";
}

GridField read_grid_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    Header h = read_header(in, path);
    if (h.kind != kKindGrid) throw ConfigError("snapshot is not a grid field");
    auto geo = make_grid_geometry(h.dim, h.n_axis, h.half_width, h.j_min);
    return GridField::from_samples(geo, read_data(in, h.count));
}

RadialField read_radial_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    Header h = read_header(in, path);
    if (h.kind != kKindRadial) throw ConfigError("snapshot is not a radial field");
    auto geo = make_radial_geometry(h.dim, h.n_axis, h.half_width, h.p_max, h.j_min);
    return RadialField::from_samples(geo, read_data(in, h.count));
}

template <class F>
void write_spacetime_snapshot(const std::filesystem::path& dir, const SpaceTimeField<F>& u,
                              const std::string& stem) {
    std::filesystem::create_directories(dir);
    nlohmann::json manifest;
    manifest["dt"] = u.grid().dt;
    manifest["steps"] = u.grid().steps;
    std::vector<std::string> files;
    for (int m = 0; m < u.nodes(); ++m) {
        std::string name = stem + "_" + std::to_string(m) + ".wlf";
        write_snapshot(dir / name, u.node(m));
        files.push_back(name);
    }
    manifest["nodes"] = files;
    std::ofstream out(dir / (stem + ".json"));
    out << manifest.dump(2) << "\n";
    if (!out) throw ConfigError("manifest write failed");
}

template void write_spacetime_snapshot<GridField>(const std::filesystem::path&,
                                                  const SpaceTimeField<GridField>&,
                                                  const std::string&);
template void write_spacetime_snapshot<RadialField>(const std::filesystem::path&,
                                                    const SpaceTimeField<RadialField>&,
                                                    const std::string&);

SpaceTimeField<RadialField> read_radial_spacetime_snapshot(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw ConfigError("cannot open " + manifest.string());
    nlohmann::json j;
    in >> j;
    TimeGrid grid{j.at("dt").get<double>(), j.at("steps").get<int>()};
    std::vector<RadialField> nodes;
    for (const auto& name : j.at("nodes"))
        nodes.push_back(read_radial_snapshot(manifest.parent_path() / name.get<std::string>()));
    return SpaceTimeField<RadialField>(grid, std::move(nodes));
}

}  // namespace wavelab
