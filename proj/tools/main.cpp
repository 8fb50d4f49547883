#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptdefects/commands.hpp"
#include "ptdefects/numerics.hpp"

namespace {

void add_grid_flags(CLI::App* cmd, ptdefects::RunConfig& cfg) {
  cmd->add_option("--ymin", cfg.y_min, "left grid edge")->capture_default_str();
  cmd->add_option("--ymax", cfg.y_max, "right grid edge")->capture_default_str();
  cmd->add_option("--n", cfg.n, "number of grid nodes")->capture_default_str();
}

void add_family_flag(CLI::App* cmd, ptdefects::RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "defect family: phi4, chi4 or sg")
      ->capture_default_str();
}

void add_k_flag(CLI::App* cmd, ptdefects::RunConfig& cfg) {
  cmd->add_option("--k", cfg.k_values, "deformation parameter values")
      ->delimiter(',')
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, ptdefects::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format: csv or json")
      ->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "output file (default: stdout)");
  cmd->add_option("--tol", cfg.tol, "quadrature tolerance")->capture_default_str();
}

void add_box_flag(CLI::App* cmd, ptdefects::RunConfig& cfg) {
  cmd->add_option("--L", cfg.box_half_widths, "normalization box half-widths")
      ->delimiter(',')
      ->capture_default_str();
}

std::string surfaces_path(const std::string& out_path) {
  const std::filesystem::path p(out_path);
  std::filesystem::path q = p.parent_path() / p.stem();
  q += "_surfaces";
  q += p.extension();
  return q.string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed-defect profiles, spectra and continuum modes"};
  app.require_subcommand(1);

  auto profile_cfg = ptdefects::default_config("profile");
  auto* profile = app.add_subcommand(
      "profile", "fields, derivatives, energy densities, parametric potential");
  add_family_flag(profile, profile_cfg);
  add_k_flag(profile, profile_cfg);
  add_grid_flags(profile, profile_cfg);
  add_output_flags(profile, profile_cfg);
  profile->callback(
      [&] { ptdefects::emit(ptdefects::cmd_profile(profile_cfg), profile_cfg); });

  auto mass_cfg = ptdefects::default_config("mass");
  auto* mass = app.add_subcommand(
      "mass", "closed-form masses against the quadrature cross-check");
  add_k_flag(mass, mass_cfg);
  add_output_flags(mass, mass_cfg);
  mass->callback([&] { ptdefects::emit(ptdefects::cmd_mass(mass_cfg), mass_cfg); });

  auto qm_cfg = ptdefects::default_config("qm-potential");
  auto* qm = app.add_subcommand(
      "qm-potential", "exact, O(k^2)-expanded and limit fluctuation potentials");
  add_family_flag(qm, qm_cfg);
  add_k_flag(qm, qm_cfg);
  add_grid_flags(qm, qm_cfg);
  add_output_flags(qm, qm_cfg);
  qm->callback([&] { ptdefects::emit(ptdefects::cmd_qm_potential(qm_cfg), qm_cfg); });

  auto modes_cfg = ptdefects::default_config("pt-modes");
  auto* modes = app.add_subcommand("pt-modes", "analytic sech^2-well bound states");
  add_grid_flags(modes, modes_cfg);
  add_output_flags(modes, modes_cfg);
  modes->callback(
      [&] { ptdefects::emit(ptdefects::cmd_pt_modes(modes_cfg), modes_cfg); });

  auto perturb_cfg = ptdefects::default_config("perturb");
  auto* perturb = app.add_subcommand(
      "perturb", "perturbed eigenvalues beside their quadrature channel");
  add_k_flag(perturb, perturb_cfg);
  add_box_flag(perturb, perturb_cfg);
  add_output_flags(perturb, perturb_cfg);
  perturb->callback(
      [&] { ptdefects::emit(ptdefects::cmd_perturb(perturb_cfg), perturb_cfg); });

  auto solve_cfg = ptdefects::default_config("solve");
  auto* solve = app.add_subcommand(
      "solve", "numerical spectrum of the exact potential per k");
  add_family_flag(solve, solve_cfg);
  add_k_flag(solve, solve_cfg);
  add_grid_flags(solve, solve_cfg);
  solve->add_option("--levels", solve_cfg.levels, "number of eigenpairs")
      ->capture_default_str();
  add_output_flags(solve, solve_cfg);
  solve->callback([&] {
    const ptdefects::SpectrumTables tables = ptdefects::cmd_spectrum(solve_cfg);
    ptdefects::emit(tables.levels, solve_cfg);
    if (!solve_cfg.out_path.empty()) {
      ptdefects::RunConfig surf = solve_cfg;
      surf.out_path = surfaces_path(solve_cfg.out_path);
      ptdefects::emit(tables.surfaces, surf);
    }
  });

  auto cont_cfg = ptdefects::default_config("continuum");
  auto* cont = app.add_subcommand(
      "continuum", "box-normalized continuum mode densities over (q, y)");
  add_k_flag(cont, cont_cfg);
  add_box_flag(cont, cont_cfg);
  cont->add_option("--q-min", cont_cfg.q_min, "first wave number")
      ->capture_default_str();
  cont->add_option("--q-max", cont_cfg.q_max, "last wave number")
      ->capture_default_str();
  cont->add_option("--q-steps", cont_cfg.q_steps, "number of wave numbers")
      ->capture_default_str();
  cont->add_option("--n", cont_cfg.n, "nodes per [-L, L] slice")
      ->capture_default_str();
  add_output_flags(cont, cont_cfg);
  cont->callback(
      [&] { ptdefects::emit(ptdefects::cmd_continuum(cont_cfg), cont_cfg); });

  std::string sweep_dir = "figdata";
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand(
      "sweep", "run every command with its defaults into a directory");
  sweep->add_option("--out", sweep_dir, "output directory")->capture_default_str();
  sweep->add_option("--format", sweep_format, "output format: csv or json")
      ->capture_default_str();
  sweep->callback([&] {
    const auto files =
        ptdefects::cmd_sweep(sweep_dir, ptdefects::format_from_string(sweep_format));
    for (const auto& f : files) std::cout << f << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  } catch (const ptdefects::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const ptdefects::NumericsError& err) {
    std::cerr << "numerical failure: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
