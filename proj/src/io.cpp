#include "ch2geo/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "ch2geo/errors.hpp"

namespace ch2geo::io {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << std::setprecision(17);
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace

void write_snapshot_csv(const std::filesystem::path& path, const VelocityPair& state) {
    auto out = open_for_write(path);
    out << "x,u,rho\n";
    const Grid& grid = state.grid();
    for (int j = 0; j < grid.size(); ++j)
        out << grid.point(j) << ',' << state.u[j] << ',' << state.rho[j] << '\n';
    finish(out, path);
}

VelocityPair read_snapshot_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open snapshot '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line)) throw Error("snapshot '" + path.string() + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,u,rho") throw Error("snapshot '" + path.string() + "' must start with header x,u,rho");

    std::vector<double> u;
    std::vector<double> rho;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        std::istringstream fields(line);
        double x = 0.0;
        double uj = 0.0;
        double rj = 0.0;
        char c1 = 0;
        char c2 = 0;
        if (!(fields >> x >> c1 >> uj >> c2 >> rj) || c1 != ',' || c2 != ',')
            throw Error("malformed row " + std::to_string(row) + " in '" + path.string() + "'");
        u.push_back(uj);
        rho.push_back(rj);
    }
    const Grid grid(static_cast<int>(u.size()));
    return {PeriodicField(grid, std::move(u)), PeriodicField(grid, std::move(rho))};
}

void write_diagnostics_csv(const std::filesystem::path& path, std::span<const DiagnosticsRecord> records) {
    auto out = open_for_write(path);
    out << "t,energy,min_ux,max_abs_rhox,mean_m,mean_rho\n";
    for (const auto& r : records)
        out << r.t << ',' << r.energy << ',' << r.min_ux << ',' << r.max_abs_rhox << ',' << r.mean_m << ','
            << r.mean_rho << '\n';
    finish(out, path);
}

void write_flowmap_csv(const std::filesystem::path& path, const GroupElement& g) {
    auto out = open_for_write(path);
    out << "x,phi,phix,f\n";
    const Grid& grid = g.grid();
    const auto image = g.phi.image();
    for (int j = 0; j < grid.size(); ++j)
        out << grid.point(j) << ',' << image[j] << ',' << g.phi.jacobian()[j] << ',' << g.f[j] << '\n';
    finish(out, path);
}

void write_scan_csv(const std::filesystem::path& path, std::span<const ScanRow> rows) {
    auto out = open_for_write(path);
    out << "m_k1,m_k2,m_l1,m_l2,S_numeric,S_closed,Sec,gram\n";
    for (const auto& r : rows) {
        const int k1 = r.dir.first_components_zero ? 0 : r.dir.k1;
        const int l1 = r.dir.first_components_zero ? 0 : r.dir.l1;
        out << k1 << ',' << r.dir.k2 << ',' << l1 << ',' << r.dir.l2 << ',' << r.s_numeric << ','
            << r.s_closed << ',' << r.sec << ',' << r.gram << '\n';
    }
    finish(out, path);
}

void write_rigidbody_csv(const std::filesystem::path& path, std::span<const rigidbody::Sample> samples) {
    auto out = open_for_write(path);
    out << "t,w1,w2,w3,pi1,pi2,pi3,energy\n";
    for (const auto& s : samples)
        out << s.t << ',' << s.omega(0) << ',' << s.omega(1) << ',' << s.omega(2) << ','
            << s.spatial_momentum(0) << ',' << s.spatial_momentum(1) << ',' << s.spatial_momentum(2) << ','
            << s.energy << '\n';
    finish(out, path);
}

std::string numbered(const std::string& stem, std::size_t index) {
    std::ostringstream s;
    s << stem << '_' << std::setw(4) << std::setfill('0') << index << ".csv";
    return s.str();
}

}  // namespace ch2geo::io
