#include "output.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <frbf/catalog.hpp>

namespace frbf::app {

namespace {

using nlohmann::json;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string_view status_name(RowStatus status) {
  return status == RowStatus::ok ? "ok" : "error";
}

std::string join(const std::vector<MonomialTerm>& terms, bool powers) {
  std::string text;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) text += ';';
    text += format_number(powers ? terms[i].power : terms[i].coefficient);
  }
  return text;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  return fmt::format("{}", x);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << "alpha,rmse,cond,status,cond_g,rmse_heldout,boundary_rmse,"
         "moment_residual,n_shift,m,config_hash,message\n";
  for (const auto& row : table.rows) {
    out << format_number(row.alpha) << ',' << format_number(row.rmse) << ','
        << format_number(row.cond) << ',' << status_name(row.status) << ','
        << format_number(row.cond_g) << ',' << format_number(row.rmse_heldout)
        << ',' << format_number(row.boundary_rmse) << ','
        << format_number(row.moment_residual) << ',' << row.n_shift << ','
        << row.m << ',' << table.config_hash << ',' << csv_field(row.message)
        << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepTable& table,
                      const ExperimentConfig& config) {
  json j;
  j["config_hash"] = table.config_hash;
  j["mode"] = to_string(config.mode);
  j["rows"] = json::array();
  for (const auto& row : table.rows) {
    j["rows"].push_back({
        {"alpha", row.alpha},
        {"rmse", number(row.rmse)},
        {"cond", number(row.cond)},
        {"status", status_name(row.status)},
        {"cond_g", number(row.cond_g)},
        {"rmse_heldout", number(row.rmse_heldout)},
        {"boundary_rmse", number(row.boundary_rmse)},
        {"moment_residual", number(row.moment_residual)},
        {"n_shift", row.n_shift},
        {"m", row.m},
        {"config_hash", table.config_hash},
        {"message", row.message},
    });
  }
  j["skipped"] = json::array();
  for (const auto& s : table.skipped) {
    j["skipped"].push_back({{"alpha", s.alpha}, {"reason", s.reason}});
  }
  out << j.dump(2) << '\n';
}

void write_kernel_table_csv(std::ostream& out, const KernelTable& table) {
  out << "r,tps,phi\n";
  for (std::size_t i = 0; i < table.r.size(); ++i) {
    out << format_number(table.r[i]) << ',' << format_number(table.tps[i])
        << ',' << format_number(table.phi[i]) << '\n';
  }
}

void write_kernel_table_json(std::ostream& out, const KernelTable& table) {
  const json j = {{"r", table.r}, {"tps", table.tps}, {"phi", table.phi}};
  out << j.dump(2) << '\n';
}

void write_catalog_csv(std::ostream& out,
                       const std::vector<CatalogEntry>& entries) {
  out << "family,N,alpha,b,c0,frac_mode,cpd_order,coefficients,powers,error\n";
  for (const auto& e : entries) {
    out << to_string(e.family) << ',' << format_number(e.N) << ','
        << format_number(e.alpha) << ',' << format_number(e.b) << ','
        << format_number(e.c0) << ',' << to_string(e.frac_mode) << ','
        << e.cpd_order << ',' << join(e.terms, false) << ','
        << join(e.terms, true) << ',' << csv_field(e.error) << '\n';
  }
}

void write_catalog_json(std::ostream& out,
                        const std::vector<CatalogEntry>& entries) {
  json j = json::array();
  for (const auto& e : entries) {
    json terms = json::array();
    for (const auto& t : e.terms) {
      terms.push_back({{"coefficient", t.coefficient}, {"power", t.power}});
    }
    j.push_back({{"family", to_string(e.family)},
                 {"N", e.N},
                 {"alpha", e.alpha},
                 {"b", e.b},
                 {"c0", e.c0},
                 {"frac_mode", to_string(e.frac_mode)},
                 {"cpd_order", e.cpd_order},
                 {"terms", terms},
                 {"error", e.error}});
  }
  out << j.dump(2) << '\n';
}

void write_weights_csv(std::ostream& out, const SweepTable& table) {
  out << "alpha,kind,index,value\n";
  for (const auto& row : table.rows) {
    if (!row.interpolant) continue;
    const auto alpha = format_number(row.alpha);
    const Interpolant& s = *row.interpolant;
    for (Eigen::Index i = 0; i < s.lambda.size(); ++i) {
      out << alpha << ",lambda," << i << ',' << format_number(s.lambda(i)) << '\n';
    }
    for (Eigen::Index i = 0; i < s.beta.size(); ++i) {
      out << alpha << ",beta," << i << ',' << format_number(s.beta(i)) << '\n';
    }
  }
}

void write_grid_csv(std::ostream& out, const SweepTable& table,
                    const ExperimentConfig& config) {
  const TestProblem& problem = find_problem(config.problem);
  const Eigen::MatrixXd grid = uniform_grid(sweep_domain(config), config.grid_n);
  out << "alpha";
  for (int j = 1; j <= config.dim; ++j) out << ",x" << j;
  out << ",sigma,u\n";
  for (const auto& row : table.rows) {
    if (!row.interpolant) continue;
    const Eigen::VectorXd sigma = evaluate_interpolant_rows(*row.interpolant, grid);
    const auto alpha = format_number(row.alpha);
    for (Eigen::Index i = 0; i < grid.rows(); ++i) {
      out << alpha;
      for (Eigen::Index j = 0; j < grid.cols(); ++j) {
        out << ',' << format_number(grid(i, j));
      }
      out << ',' << format_number(sigma(i)) << ','
          << format_number(problem.g(grid.row(i).transpose())) << '\n';
    }
  }
}

}  // namespace frbf::app
