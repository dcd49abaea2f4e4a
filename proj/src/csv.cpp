#include "noma/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace noma {

std::string format_csv_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("csv: cannot write " + path.string());
  }
  return out;
}

}  // namespace

void write_table_csv(const DataTable& table, const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "# " << table.title << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw std::runtime_error("csv: row width does not match header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_csv_double(row[i]);
    }
    out << "\n";
  }
}

void write_sweep_csv(const SweepResult& sweep, const std::string& title,
                     const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "# " << title << "\n";
  out << "alpha,mu,lambda,scheme,objective,mean_rate,ci95,runs_used,skipped\n";
  for (const SweepRow& row : sweep.rows) {
    out << format_csv_double(row.alpha) << "," << format_csv_double(row.mu) << ","
        << format_csv_double(row.lambda) << "," << to_string(row.scheme) << ","
        << to_string(row.objective) << "," << format_csv_double(row.rate.mean) << ","
        << format_csv_double(row.rate.half_width) << "," << row.runs_used << ","
        << row.skipped << "\n";
  }
}

void write_audit_csv(const AuditResult& audit, const std::string& title,
                     const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "# " << title << "\n";
  out << "realization,eps,user,outage_exact,outage_approx,sigma,within_3sigma\n";
  for (const AuditCheck& check : audit.checks) {
    out << check.realization << "," << format_csv_double(check.eps) << ","
        << check.user_index << "," << format_csv_double(check.outage_exact) << ","
        << format_csv_double(check.outage_approx) << ","
        << format_csv_double(check.sigma) << "," << (check.within_3sigma ? 1 : 0)
        << "\n";
  }
}

DataTable curve_table(const CdfCurve& analytic, const CdfCurve& closed,
                      const CdfCurve* monte_carlo, const std::string& title) {
  DataTable table;
  table.title = title;
  table.columns = {"theta_db", "F_analytic", "F_closed"};
  if (monte_carlo) {
    table.columns.push_back("F_mc");
    table.columns.push_back("ci");
  }
  for (std::size_t i = 0; i < analytic.theta.size(); ++i) {
    std::vector<double> row = {10.0 * std::log10(analytic.theta[i]),
                               analytic.value[i], closed.value[i]};
    if (monte_carlo) {
      row.push_back(monte_carlo->value[i]);
      row.push_back(monte_carlo->error[i]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace noma
