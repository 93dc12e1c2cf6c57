#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "sweep.hpp"

namespace frbf::app {

/// Shortest round-trip decimal; empty for NaN.
std::string format_number(double x);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

/// Columns: alpha,rmse,cond,status,cond_g,rmse_heldout,boundary_rmse,
/// moment_residual,n_shift,m,config_hash,message.
void write_sweep_csv(std::ostream& out, const SweepTable& table);
void write_sweep_json(std::ostream& out, const SweepTable& table,
                      const ExperimentConfig& config);

/// Columns: r,tps,phi.
void write_kernel_table_csv(std::ostream& out, const KernelTable& table);
void write_kernel_table_json(std::ostream& out, const KernelTable& table);

/// Columns: family,N,alpha,b,c0,frac_mode,cpd_order,coefficients,powers,error
/// with ';'-separated coefficient and power lists.
void write_catalog_csv(std::ostream& out, const std::vector<CatalogEntry>& entries);
void write_catalog_json(std::ostream& out, const std::vector<CatalogEntry>& entries);

/// Columns: alpha,kind,index,value with kind in {lambda, beta}.
void write_weights_csv(std::ostream& out, const SweepTable& table);

/// Columns: alpha,x1..xd,sigma,u sampled on a uniform grid of the domain,
/// with u the problem's g.
void write_grid_csv(std::ostream& out, const SweepTable& table,
                    const ExperimentConfig& config);

}  // namespace frbf::app
