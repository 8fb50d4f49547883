#include "ptdefects/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "ptdefects/numerics.hpp"
#include "ptdefects/perturb.hpp"
#include "ptdefects/schrodinger.hpp"

namespace ptdefects {

OutputFormat format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

DefectFamily RunConfig::family_tag() const {
  try {
    return family_from_string(family);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
}

OutputFormat RunConfig::format_tag() const { return format_from_string(format); }

void RunConfig::validate() const {
  family_tag();
  format_tag();
  if (!(y_min < y_max) || !std::isfinite(y_min) || !std::isfinite(y_max))
    throw ConfigError("grid requires finite ymin < ymax");
  if (n < 3) throw ConfigError("grid requires at least 3 nodes");
  if (k_values.empty()) throw ConfigError("at least one k value is required");
  for (double k : k_values)
    if (!std::isfinite(k)) throw ConfigError("k values must be finite");
  if (box_half_widths.empty()) throw ConfigError("at least one L value is required");
  for (double L : box_half_widths)
    if (!(L > 0.0) || !std::isfinite(L)) throw ConfigError("L must be positive and finite");
  if (!(q_min <= q_max)) throw ConfigError("q-min must not exceed q-max");
  if (q_steps < 1) throw ConfigError("q-steps must be at least 1");
  if (levels < 1) throw ConfigError("levels must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
}

RunConfig default_config(const std::string& command) {
  RunConfig cfg;
  cfg.k_values = {0.0, 0.5, 1.0, 2.0};
  if (command == "mass") {
    cfg.k_values = {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 3.0};
  } else if (command == "perturb") {
    cfg.k_values = {0.0, 0.1, 0.2, 0.3, 0.5};
  } else if (command == "solve") {
    cfg.k_values = {0.0, 0.2, 0.5, 1.0, 2.0};
    cfg.y_min = -20.0;
    cfg.y_max = 20.0;
    cfg.n = 4001;
  } else if (command == "continuum") {
    cfg.k_values = {0.0, 0.2, 0.5};
    cfg.box_half_widths = {5.0, 10.0};
    cfg.n = 801;
  }
  return cfg;
}

namespace {

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> grid_params(const RunConfig& cfg) {
  return {{"family", cfg.family},
          {"k", join_values(cfg.k_values)},
          {"ymin", format_double(cfg.y_min)},
          {"ymax", format_double(cfg.y_max)},
          {"n", std::to_string(cfg.n)}};
}

std::vector<double> q_grid(const RunConfig& cfg) {
  std::vector<double> qs(cfg.q_steps);
  if (cfg.q_steps == 1) {
    qs[0] = cfg.q_min;
    return qs;
  }
  const double dq = (cfg.q_max - cfg.q_min) / static_cast<double>(cfg.q_steps - 1);
  for (std::size_t i = 0; i < cfg.q_steps; ++i)
    qs[i] = cfg.q_min + dq * static_cast<double>(i);
  return qs;
}

}  // namespace

Table cmd_profile(const RunConfig& cfg) {
  cfg.validate();
  const DefectFamily family = cfg.family_tag();
  const Grid grid(cfg.y_min, cfg.y_max, cfg.n);
  Table table{"profile", grid_params(cfg),
              {"k", "y", "field", "deriv", "energy_density", "potential"}, {}};
  table.rows.reserve(cfg.k_values.size() * cfg.n);
  for (double kv : cfg.k_values) {
    const DeformParam k(kv);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const double y = grid.node(i);
      const double field = deformed_field(family, k, y);
      const double deriv = deformed_field_deriv(family, k, y);
      table.rows.push_back(
          {k.value(), y, field, deriv, deriv * deriv, 0.5 * deriv * deriv});
    }
  }
  return table;
}

Table cmd_mass(const RunConfig& cfg) {
  cfg.validate();
  Table table{"mass",
              {{"k", join_values(cfg.k_values)}, {"tol", format_double(cfg.tol)}},
              {"k", "m_phi_closed", "m_phi_quad", "m_phi_rel_err", "m_chi_closed",
               "m_chi_quad", "m_chi_rel_err", "m_eta_closed", "m_eta_quad",
               "m_eta_rel_err"},
              {}};
  for (double kv : cfg.k_values) {
    const DeformParam k(kv);
    std::vector<std::optional<double>> row{k.value()};
    for (DefectFamily family : {DefectFamily::Phi4Kink, DefectFamily::Chi4Lump,
                                DefectFamily::SineGordonLump}) {
      const double closed = topological_mass_closed(family, k);
      const double numeric = topological_mass_quad(family, k, cfg.tol);
      row.push_back(closed);
      row.push_back(numeric);
      row.push_back(std::abs(closed - numeric) / std::abs(closed));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table cmd_qm_potential(const RunConfig& cfg) {
  cfg.validate();
  const DefectFamily family = cfg.family_tag();
  const Grid grid(cfg.y_min, cfg.y_max, cfg.n);
  Table table{"qm-potential", grid_params(cfg),
              {"k", "y", "v_exact", "v_expanded", "v_pt"}, {}};
  table.rows.reserve(cfg.k_values.size() * cfg.n);
  for (double kv : cfg.k_values) {
    const DeformParam k(kv);
    const QMPotentialSpec exact{family, k, PotentialMode::Exact};
    const QMPotentialSpec expanded{family, k, PotentialMode::ExpandedOrderK2};
    const QMPotentialSpec limit{family, k, PotentialMode::PoschlTellerLimit};
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const double y = grid.node(i);
      table.rows.push_back(
          {k.value(), y, vqm(exact, y), vqm(expanded, y), vqm(limit, y)});
    }
  }
  return table;
}

Table cmd_pt_modes(const RunConfig& cfg) {
  cfg.validate();
  const Grid grid(cfg.y_min, cfg.y_max, cfg.n);
  Table table{"pt-modes",
              {{"ymin", format_double(cfg.y_min)},
               {"ymax", format_double(cfg.y_max)},
               {"n", std::to_string(cfg.n)},
               {"omega0_sq", format_double(pt_eigenvalue(0))},
               {"omega1_sq", format_double(pt_eigenvalue(1))}},
              {"y", "psi0", "psi1"},
              {}};
  table.rows.reserve(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double y = grid.node(i);
    table.rows.push_back({y, pt_bound_mode(0, y), pt_bound_mode(1, y)});
  }
  return table;
}

Table cmd_perturb(const RunConfig& cfg) {
  cfg.validate();
  const double inf = std::numeric_limits<double>::infinity();
  Table table{"perturb",
              {{"k", join_values(cfg.k_values)},
               {"L", join_values(cfg.box_half_widths)},
               {"tol", format_double(cfg.tol)}},
              {"L", "k", "omega0_sq", "omega1_sq", "omega2_sq", "shift0_quad",
               "shift1_quad"},
              {}};
  const auto density0 = [](double y) {
    const double p = pt_bound_mode(0, y);
    return p * p;
  };
  const auto density1 = [](double y) {
    const double p = pt_bound_mode(1, y);
    return p * p;
  };
  for (double L : cfg.box_half_widths) {
    for (double kv : cfg.k_values) {
      const DeformParam k(kv);
      table.rows.push_back(
          {L, k.value(), omega0_perturbed(k), omega1_perturbed(k),
           omega2_perturbed(k, L),
           first_order_shift(density0, DefectFamily::Phi4Kink, k, inf, cfg.tol),
           first_order_shift(density1, DefectFamily::Phi4Kink, k, inf, cfg.tol)});
    }
  }
  return table;
}

SpectrumTables cmd_spectrum(const RunConfig& cfg) {
  cfg.validate();
  const DefectFamily family = cfg.family_tag();
  const Grid grid(cfg.y_min, cfg.y_max, cfg.n);
  auto params = grid_params(cfg);
  params.emplace_back("levels", std::to_string(cfg.levels));
  Table levels{"solve", params,
               {"k", "level", "omega2_numeric", "omega2_closed",
                "closed_minus_numeric", "bound"},
               {}};
  Table surfaces{"solve-surfaces", params, {"k", "y", "v_qm", "psi0"}, {}};
  const double edge = potential_asymptote(family);
  for (double kv : cfg.k_values) {
    const DeformParam k(kv);
    const QMPotentialSpec spec{family, k, PotentialMode::Exact};
    const Spectrum spectrum = solve_spectrum(spec, grid, cfg.levels);
    for (std::size_t level = 0; level < spectrum.eigenvalues.size(); ++level) {
      const double numeric = spectrum.eigenvalues[level];
      std::optional<double> closed;
      if (family == DefectFamily::Phi4Kink) {
        if (level == 0) closed = omega0_perturbed(k);
        if (level == 1) closed = omega1_perturbed(k);
      }
      std::optional<double> diff;
      if (closed) diff = *closed - numeric;
      levels.rows.push_back({k.value(), static_cast<double>(level), numeric, closed,
                             diff, numeric < edge - 1e-6 ? 1.0 : 0.0});
    }
    const Profile mode = zero_mode_exact(family, k, grid);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const double y = grid.node(i);
      surfaces.rows.push_back({k.value(), y, vqm(spec, y), mode.values[i]});
    }
  }
  return {std::move(levels), std::move(surfaces)};
}

Table cmd_continuum(const RunConfig& cfg) {
  cfg.validate();
  Table table{"continuum",
              {{"k", join_values(cfg.k_values)},
               {"L", join_values(cfg.box_half_widths)},
               {"q_min", format_double(cfg.q_min)},
               {"q_max", format_double(cfg.q_max)},
               {"q_steps", std::to_string(cfg.q_steps)},
               {"n", std::to_string(cfg.n)}},
              {"L", "k", "q", "y", "psi_sq", "omega_q_sq"},
              {}};
  const std::vector<double> qs = q_grid(cfg);
  for (double L : cfg.box_half_widths) {
    const ContinuumBox box(L);
    const Grid slice(-L, L, cfg.n);
    for (double kv : cfg.k_values) {
      const DeformParam k(kv);
      for (double q : qs) {
        const ContinuumMode mode(q, box);
        const double omega_q = omega_q_perturbed(q, k, L);
        for (std::size_t i = 0; i < cfg.n; ++i) {
          const double y = slice.node(i);
          table.rows.push_back({L, k.value(), q, y, std::norm(mode.psi(y)), omega_q});
        }
      }
    }
  }
  return table;
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

namespace {

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output path '" + path + "'");
  out << text;
  if (!out) throw ConfigError("failed writing output path '" + path + "'");
}

}  // namespace

void emit(const Table& table, const RunConfig& cfg) {
  write_text(render(table, cfg.format_tag()), cfg.out_path);
}

std::vector<std::string> cmd_sweep(const std::string& out_dir, OutputFormat format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + out_dir + "'");
  const std::string ext = format == OutputFormat::Csv ? ".csv" : ".json";

  std::vector<std::string> written;
  const auto save = [&](const Table& table, const std::string& stem) {
    const std::string path = (fs::path(out_dir) / (stem + ext)).string();
    write_text(render(table, format), path);
    written.push_back(path);
  };

  for (const std::string family : {"phi4", "chi4", "sg"}) {
    RunConfig cfg = default_config("profile");
    cfg.family = family;
    save(cmd_profile(cfg), "profile_" + family);
  }
  save(cmd_mass(default_config("mass")), "mass");
  for (const std::string family : {"phi4", "chi4", "sg"}) {
    RunConfig cfg = default_config("qm-potential");
    cfg.family = family;
    save(cmd_qm_potential(cfg), "qm_potential_" + family);
  }
  save(cmd_pt_modes(default_config("pt-modes")), "pt_modes");
  save(cmd_perturb(default_config("perturb")), "perturb");
  {
    const SpectrumTables tables = cmd_spectrum(default_config("solve"));
    save(tables.levels, "spectrum_phi4");
    save(tables.surfaces, "spectrum_phi4_surfaces");
  }
  save(cmd_continuum(default_config("continuum")), "continuum");
  return written;
}

}  // namespace ptdefects
