#pragma once

#include <filesystem>
#include <string>

#include "noma/experiments.hpp"
#include "noma/threshold_dist.hpp"

namespace noma {

// Fixed formatting so identical runs produce identical bytes.
std::string format_csv_double(double value);

// Comma-separated, header row, '.' decimal. The leading '#' comment row
// carries the table's description.
void write_table_csv(const DataTable& table, const std::filesystem::path& path);

void write_sweep_csv(const SweepResult& sweep, const std::string& title,
                     const std::filesystem::path& path);
void write_audit_csv(const AuditResult& audit, const std::string& title,
                     const std::filesystem::path& path);

DataTable curve_table(const CdfCurve& analytic, const CdfCurve& closed,
                      const CdfCurve* monte_carlo, const std::string& title);

}  // namespace noma
