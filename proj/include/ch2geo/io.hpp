#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ch2geo/curvature.hpp"
#include "ch2geo/evolution.hpp"
#include "ch2geo/flowmap.hpp"
#include "ch2geo/rigidbody.hpp"

namespace ch2geo::io {

// All writers print doubles with 17 significant digits, so identical inputs
// produce byte-identical files.

/// Header `x,u,rho`, one row per grid point.
void write_snapshot_csv(const std::filesystem::path& path, const VelocityPair& state);
/// Reads a `x,u,rho` snapshot; the row count fixes the grid size.
VelocityPair read_snapshot_csv(const std::filesystem::path& path);

/// Header `t,energy,min_ux,max_abs_rhox,mean_m,mean_rho`.
void write_diagnostics_csv(const std::filesystem::path& path, std::span<const DiagnosticsRecord> records);

/// Header `x,phi,phix,f`.
void write_flowmap_csv(const std::filesystem::path& path, const GroupElement& g);

/// Header `m_k1,m_k2,m_l1,m_l2,S_numeric,S_closed,Sec,gram`. First-slot-zero
/// rows carry m_k1 = m_l1 = 0.
void write_scan_csv(const std::filesystem::path& path, std::span<const ScanRow> rows);

/// Header `t,w1,w2,w3,pi1,pi2,pi3,energy`.
void write_rigidbody_csv(const std::filesystem::path& path, std::span<const rigidbody::Sample> samples);

/// Zero-padded file name such as `snapshot_0003.csv`.
std::string numbered(const std::string& stem, std::size_t index);

}  // namespace ch2geo::io
