#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptdefects/fields.hpp"
#include "ptdefects/table.hpp"

namespace ptdefects {

/// Invalid run configuration (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& name);

struct RunConfig {
  std::string family = "phi4";
  std::vector<double> k_values;
  double y_min = -10.0;
  double y_max = 10.0;
  std::size_t n = 1001;
  std::vector<double> box_half_widths{5.0};
  double q_min = 0.0;
  double q_max = 2.0;
  std::size_t q_steps = 21;
  std::size_t levels = 2;
  double tol = 1e-10;
  std::string format = "csv";
  std::string out_path;  // empty -> stdout

  DefectFamily family_tag() const;
  OutputFormat format_tag() const;
  /// Throws ConfigError on any invalid field.
  void validate() const;
};

/// Per-command defaults (grid, k set, box sizes).
RunConfig default_config(const std::string& command);

/// y, field, derivative, energy density and the parametric potential value,
/// one block per k.
Table cmd_profile(const RunConfig& config);

/// Closed-form masses with quadrature cross-check and relative error, one
/// row per k.
Table cmd_mass(const RunConfig& config);

/// Exact, O(k^2)-expanded and limit fluctuation potentials on the grid.
Table cmd_qm_potential(const RunConfig& config);

/// Analytic bound states of the sech^2 limit potential.
Table cmd_pt_modes(const RunConfig& config);

/// Closed-form perturbed eigenvalues next to their quadrature channel.
Table cmd_perturb(const RunConfig& config);

/// Numerical spectrum of the exact potential per k (levels) plus sampled
/// potential and zero-mode surfaces (surfaces).
struct SpectrumTables {
  Table levels;
  Table surfaces;
};
SpectrumTables cmd_spectrum(const RunConfig& config);

/// |psi_q(y)|^2 over (L, k, q, y) with the perturbed continuum eigenvalue
/// column.
Table cmd_continuum(const RunConfig& config);

/// Serializes a table in the configured format.
std::string render(const Table& table, OutputFormat format);

/// Writes to config.out_path or stdout; throws ConfigError on I/O failure.
void emit(const Table& table, const RunConfig& config);

/// Runs every command with its defaults into directory out_dir; returns the
/// written file paths in deterministic order.
std::vector<std::string> cmd_sweep(const std::string& out_dir, OutputFormat format);

}  // namespace ptdefects
