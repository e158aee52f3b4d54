#include "mdemon/cli.hpp"

#include "mdemon/acceptance.hpp"
#include "mdemon/demon.hpp"
#include "mdemon/entropy.hpp"
#include "mdemon/io.hpp"
#include "mdemon/state.hpp"
#include "mdemon/szilard.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <stdexcept>

namespace mdemon::cli {

namespace {

// Validation failures that map to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kTailMassWarning = 1e-4;

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw UsageError("unknown output format '" + s + "' (expected json|csv)");
}

/// Default grid widened (same n) until it spans `required_extent`, unless the user fixed it.
Grid<double> grid_for(const RunConfig& cfg, double required_extent) {
  if (cfg.grid_explicit) return Grid<double>(cfg.grid_n, cfg.x_min, cfg.x_max);
  const double extent = std::max(cfg.x_max - cfg.x_min, required_extent);
  const double center = 0.5 * (cfg.x_min + cfg.x_max);
  return Grid<double>(cfg.grid_n, center - extent / 2, center + extent / 2);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// eur

struct EurArgs {
  std::string state = "gaussian";
  double sigma = 1.0;
  bool sigma_set = false;
  double center = 0.0;
  double p0 = 0.0;
  double length = 2.0;
  int quantum_number = 1;
  std::string side = "left";
  bool bits = false;
  std::string position_csv;
  std::string momentum_csv;
};

int cmd_eur(const EurArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  StateSpec<double> spec;
  double extent = 0;
  if (a.state == "gaussian") {
    if (!(a.sigma > 0)) throw UsageError("--sigma must be positive");
    spec = GaussianState<double>{a.center, a.sigma, a.p0};
    extent = 2 * (std::abs(a.center) + 8 * a.sigma);
  } else if (a.state == "eigenstate") {
    if (!(a.length > 0)) throw UsageError("--length must be positive");
    spec = BoxEigenstate<double>{BoxSpec<double>::centered(a.center, a.length), a.quantum_number};
    extent = std::max(kMinBoxPadding * a.length, 2 * std::abs(a.center) + kMinBoxPadding * a.length);
  } else if (a.state == "truncated-gaussian") {
    const double sigma = a.sigma_set ? a.sigma : a.length / 6;
    if (!(sigma > 0)) throw UsageError("--sigma must be positive");
    const double box = a.sigma_set ? 6 * sigma : a.length;
    spec = TruncatedGaussian<double>{a.center, sigma, box, parse_side(a.side)};
    extent = 2 * std::abs(a.center) + kMinBoxPadding * box;
  } else {
    throw UsageError("unknown state '" + a.state + "' (expected gaussian|eigenstate|truncated-gaussian)");
  }

  const auto grid = grid_for(cfg, extent);
  const auto wf = sample(spec, grid);
  auto report = eur_report(wf, cfg.eur_bound, cfg.units.k);

  if (!a.position_csv.empty()) {
    std::ofstream f(a.position_csv);
    if (!f) throw UsageError("cannot write " + a.position_csv);
    write_density_csv(f, wf.density(), "x");
  }
  if (!a.momentum_csv.empty()) {
    std::ofstream f(a.momentum_csv);
    if (!f) throw UsageError("cannot write " + a.momentum_csv);
    write_density_csv(f, to_momentum(wf).density(), "p");
  }

  const bool ok = report.satisfies_eur;
  if (a.bits) {
    const double to_bits = 1.0 / std::log(2.0);
    report.h_x *= to_bits;
    report.h_p *= to_bits;
    report.eur_sum *= to_bits;
    report.eur_bound *= to_bits;
  }
  if (cfg.format == OutputFormat::Json) {
    print_json(out, to_json(report));
  } else {
    CsvWriter csv(out, {"h_x", "h_p", "eur_sum", "eur_bound", "thermo_s", "satisfies_eur"});
    csv.row({report.h_x, report.h_p, report.eur_sum, report.eur_bound, report.thermo_s, report.satisfies_eur});
  }
  if (!ok) {
    err << "entropic uncertainty relation violated for " << describe(spec) << '\n';
    return kPhysicsViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// szilard

struct SzilardArgs {
  std::string model = "analytic";
  double length = 2.0;
  std::string state = "eigenstate";
  std::string side = "left";
  double sigma = 0;  // 0: L/6
  int quantum_number = 1;
};

WaveFunction<double> partition_state(const std::string& state, const Grid<double>& grid, const BoxSpec<double>& box,
                                     double sigma, int quantum_number) {
  if (state == "eigenstate") return make_box_eigenstate(grid, box, quantum_number);
  if (state == "gaussian") return make_gaussian(grid, box.midpoint(), sigma > 0 ? sigma : box.length() / 6);
  throw UsageError("unknown state '" + state + "' (expected eigenstate|gaussian)");
}

struct NumericOutcome {
  PartitionEvent<double> event;
  bool post_state_satisfies_eur = true;
};

NumericOutcome run_numeric_event(const SzilardArgs& a, const RunConfig& cfg, Side side) {
  const auto grid = grid_for(cfg, kMinBoxPadding * a.length);
  const auto box = BoxSpec<double>::centered(grid.center(), a.length);
  const auto wf = partition_state(a.state, grid, box, a.sigma, a.quantum_number);
  NumericOutcome o;
  o.event = numeric_partition_event(wf, box, side, cfg.units.k);
  o.post_state_satisfies_eur = eur_report(project_half(wf, box, side), cfg.eur_bound).satisfies_eur;
  return o;
}

void emit_event(std::ostream& out, const RunConfig& cfg, double length, const PartitionEvent<double>& e) {
  if (cfg.format == OutputFormat::Json) {
    print_json(out, to_json(e));
  } else {
    CsvWriter csv(out, kSweepColumns);
    write_sweep_row(csv, length, e);
  }
}

int cmd_szilard(const SzilardArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(a.length > 0)) throw UsageError("--length must be positive");
  if (a.model == "analytic") {
    emit_event(out, cfg, a.length, analytic_partition_event(a.length, cfg.units.k, cfg.units.hbar));
    return kOk;
  }
  if (a.model == "numeric") {
    const auto o = run_numeric_event(a, cfg, parse_side(a.side));
    if (o.event.momentum_tail_mass > kTailMassWarning)
      err << "warning: estimated momentum mass beyond the grid is " << csv_number(o.event.momentum_tail_mass)
          << " (> " << kTailMassWarning << "); refine the grid for tighter entropies\n";
    emit_event(out, cfg, a.length, o.event);
    if (!o.post_state_satisfies_eur) {
      err << "post-partition state violates the entropic uncertainty relation\n";
      return kPhysicsViolation;
    }
    return kOk;
  }
  if (a.model == "compare") {
    const auto grid = grid_for(cfg, kMinBoxPadding * a.length);
    const auto c = gaussian_vs_eigenstate(a.length, grid, cfg.units.k, parse_side(a.side));
    if (cfg.format == OutputFormat::Json) {
      print_json(out, to_json(c));
    } else {
      CsvWriter csv(out, {"L", "delta_s_gaussian_analytic", "delta_s_eigenstate_numeric", "lower_bound_respected"});
      csv.row({a.length, c.delta_s_gaussian_analytic, c.delta_s_eigenstate_numeric, c.lower_bound_respected});
    }
    return c.lower_bound_respected ? kOk : kPhysicsViolation;
  }
  throw UsageError("unknown model '" + a.model + "' (expected analytic|numeric|compare)");
}

// ---------------------------------------------------------------------------
// cycle

struct CycleArgs {
  std::optional<double> cost;  // in units of k
  std::string cost_from;
  double length = 2.0;
  double efficiency = 1.0;
  std::size_t cycles = 0;
  double noise_mean = 0.0;
};

int cmd_cycle(const CycleArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double k = cfg.units.k;
  const double temperature = cfg.units.temperature;

  if (a.cycles > 0) {
    if (a.cost || !a.cost_from.empty()) throw UsageError("--cycles samples costs; do not combine with --cost");
    if (!(a.noise_mean >= 0)) throw UsageError("--noise-mean must be nonnegative");
    const auto sampler = a.noise_mean > 0 ? exponential_excess_sampler(k, a.noise_mean) : constant_cost_sampler(k);
    const auto m = monte_carlo_cycles(a.cycles, temperature, k, sampler, cfg.seed, a.efficiency);
    if (cfg.format == OutputFormat::Json)
      print_json(out, to_json(m));
    else
      write_monte_carlo_csv(out, m);
    if (m.min_delta_s_net < -1e-9) {
      err << "net entropy decreased in some cycle\n";
      return kPhysicsViolation;
    }
    return kOk;
  }

  double cost = k * kLn2;
  if (a.cost) cost = *a.cost * k;
  if (!a.cost_from.empty()) {
    if (a.cost) throw UsageError("use either --cost or --cost-from");
    if (a.cost_from == "analytic") {
      cost = analytic_partition_event(a.length, k, cfg.units.hbar).delta_s;
    } else if (a.cost_from == "eigenstate" || a.cost_from == "gaussian") {
      SzilardArgs s;
      s.length = a.length;
      s.state = a.cost_from;
      cost = run_numeric_event(s, cfg, Side::Left).event.delta_s;
    } else {
      throw UsageError("unknown --cost-from '" + a.cost_from + "' (expected analytic|eigenstate|gaussian)");
    }
  }
  const auto l = szilard_cycle(temperature, k, cost, a.efficiency);
  if (cfg.format == OutputFormat::Json) {
    print_json(out, to_json(l));
  } else {
    CsvWriter csv(out, {"temperature", "k", "delta_s_measurement", "w_extracted", "q_reservoir", "delta_s_reservoir",
                        "delta_s_net"});
    csv.row({l.temperature, l.k, l.delta_s_measurement, l.w_extracted, l.q_reservoir, l.delta_s_reservoir,
             l.delta_s_net});
  }
  if (l.delta_s_net < -1e-9) {
    err << "net entropy decreased\n";
    return kPhysicsViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string model = "both";
  std::vector<double> lengths;
  double l_min = 0.5;
  double l_max = 2.0;
  std::size_t points = 4;
  std::string state = "eigenstate";
  std::string side = "left";
};

int cmd_sweep(const SweepArgs& a, const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<double> lengths = a.lengths;
  if (lengths.empty()) {
    if (a.points < 1 || !(a.l_min > 0) || !(a.l_max >= a.l_min)) throw UsageError("invalid sweep range");
    for (std::size_t i = 0; i < a.points; ++i)
      lengths.push_back(a.points == 1 ? a.l_min
                                      : a.l_min * std::pow(a.l_max / a.l_min, double(i) / double(a.points - 1)));
  }
  for (double l : lengths)
    if (!(l > 0)) throw UsageError("sweep lengths must be positive");
  const bool analytic = a.model == "analytic" || a.model == "both";
  const bool numeric = a.model == "numeric" || a.model == "both";
  if (!analytic && !numeric) throw UsageError("unknown model '" + a.model + "' (expected analytic|numeric|both)");

  std::vector<Side> sides;
  if (a.side == "both") sides = {Side::Left, Side::Right};
  else sides = {parse_side(a.side)};

  struct Point {
    double length;
    PartitionEvent<double> event;
  };
  // Numeric grids scale with L so every point sees the same resolution per box length.
  std::vector<std::future<std::vector<Point>>> jobs;
  for (double length : lengths) {
    jobs.push_back(std::async(std::launch::async, [&, length] {
      std::vector<Point> pts;
      if (analytic) pts.push_back({length, analytic_partition_event(length, cfg.units.k, cfg.units.hbar)});
      if (numeric) {
        RunConfig scaled = cfg;
        if (!cfg.grid_explicit) {
          scaled.grid_explicit = true;
          scaled.x_min = -kMinBoxPadding * length / 2;
          scaled.x_max = kMinBoxPadding * length / 2;
        }
        SzilardArgs s;
        s.length = length;
        s.state = a.state;
        for (Side side : sides) pts.push_back({length, run_numeric_event(s, scaled, side).event});
      }
      return pts;
    }));
  }

  std::vector<Point> rows;
  for (auto& j : jobs)
    for (auto& p : j.get()) rows.push_back(std::move(p));

  if (cfg.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = to_json(r.event);
      j["L"] = r.length;
      arr.push_back(std::move(j));
    }
    print_json(out, arr);
  } else {
    CsvWriter csv(out, kSweepColumns);
    for (const auto& r : rows) write_sweep_row(csv, r.length, r.event);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

void add_config_options(CLI::App& app, RunConfig& cfg, std::string& format, std::vector<CLI::Option*>& grid_opts) {
  app.add_option("--format", format, "Output format: json or csv (default from $MDEMON_FORMAT, else json; csv for sweep)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--units-k", cfg.units.k, "Boltzmann constant scale for reported entropies")
      ->check(CLI::PositiveNumber);
  app.add_option("--units-hbar", cfg.units.hbar, "Reduced Planck constant (analytic and aim commands)")
      ->check(CLI::PositiveNumber);
  app.add_option("--units-T,--temperature", cfg.units.temperature, "Reservoir temperature")
      ->check(CLI::PositiveNumber);
  grid_opts.push_back(app.add_option("--grid-n", cfg.grid_n, "Grid points (power of two)"));
  grid_opts.push_back(app.add_option("--x-min", cfg.x_min, "Grid left edge"));
  grid_opts.push_back(app.add_option("--x-max", cfg.x_max, "Grid right edge"));
  app.add_option("--eur-bound", cfg.eur_bound, "Entropic uncertainty bound in nats (default ln(e/2))");
  app.add_option("--seed", cfg.seed, "Random seed for Monte Carlo cycles");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format;
  if (const char* env = std::getenv(kFormatEnv); env && *env) format = env;
  std::vector<CLI::Option*> grid_opts;

  CLI::App app{"Entropy cost of localizing a molecule: uncertainty relations, Szilard cycles, demons", "mdemon"};
  app.require_subcommand(1);
  app.fallthrough();
  add_config_options(app, cfg, format, grid_opts);

  EurArgs eur;
  auto* eur_cmd = app.add_subcommand("eur", "Position/momentum entropies and the uncertainty-relation check");
  eur_cmd->add_option("state", eur.state, "gaussian | eigenstate | truncated-gaussian");
  auto* sigma_opt = eur_cmd->add_option("--sigma", eur.sigma, "Gaussian position width");
  eur_cmd->add_option("--center", eur.center, "State center");
  eur_cmd->add_option("--p0", eur.p0, "Mean momentum (phase modulation) of a Gaussian");
  eur_cmd->add_option("--length", eur.length, "Box length");
  eur_cmd->add_option("--n", eur.quantum_number, "Box quantum number");
  eur_cmd->add_option("--side", eur.side, "Kept half for truncated-gaussian: left | right");
  eur_cmd->add_flag("--bits", eur.bits, "Report h_x, h_p, eur_sum and eur_bound in bits");
  eur_cmd->add_option("--position-csv", eur.position_csv, "Write |psi(x)|^2 to this CSV file");
  eur_cmd->add_option("--momentum-csv", eur.momentum_csv, "Write |phi(p)|^2 to this CSV file");

  SzilardArgs sz;
  auto* sz_cmd = app.add_subcommand("szilard", "Entropy cost of inserting the partition");
  sz_cmd->add_option("model", sz.model, "analytic | numeric | compare");
  sz_cmd->add_option("--length", sz.length, "Box length L");
  sz_cmd->add_option("--state", sz.state, "Numeric initial state: eigenstate | gaussian");
  sz_cmd->add_option("--side", sz.side, "Side the molecule is found on: left | right");
  sz_cmd->add_option("--sigma", sz.sigma, "Gaussian width (default L/6)");
  sz_cmd->add_option("--n", sz.quantum_number, "Box quantum number");

  CycleArgs cy;
  double cost_value = 0;
  auto* cy_cmd = app.add_subcommand("cycle", "Entropy and work ledger of a Szilard cycle");
  auto* cost_opt = cy_cmd->add_option("--cost", cost_value, "Measurement cost in units of k (default ln 2)");
  cy_cmd->add_option("--cost-from", cy.cost_from, "Take the cost from a partition event: analytic | eigenstate | gaussian");
  cy_cmd->add_option("--length", cy.length, "Box length for --cost-from");
  cy_cmd->add_option("--efficiency", cy.efficiency, "Fraction of kT ln 2 extracted as work");
  cy_cmd->add_option("--cycles", cy.cycles, "Run this many seeded Monte Carlo cycles");
  cy_cmd->add_option("--noise-mean", cy.noise_mean, "Mean excess cost (units of k) for Monte Carlo sampling");

  long long molecules = 1;
  double ratio = 2.0;
  auto* ex_cmd = app.add_subcommand("expansion", "Entropy of a free expansion");
  ex_cmd->add_option("--molecules", molecules, "Number of molecules N");
  ex_cmd->add_option("--ratio", ratio, "Final/initial volume ratio");

  std::string initial = "L";
  auto* reset_cmd = app.add_subcommand("reset", "Piston reset of a two-cell memory");
  reset_cmd->add_option("--initial", initial, "Initial memory cell: L | R");

  double delta_p = 1.0, door = 1.0;
  auto* aim_cmd = app.add_subcommand("aim", "Can a speed demon still aim the molecule through the door?");
  aim_cmd->add_option("--delta-p", delta_p, "Momentum measurement accuracy");
  aim_cmd->add_option("--door", door, "Door width");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Partition cost over a range of box lengths (one row per point)");
  sw_cmd->add_option("--model", sw.model, "analytic | numeric | both");
  sw_cmd->add_option("--lengths", sw.lengths, "Explicit box lengths")->delimiter(',');
  sw_cmd->add_option("--l-min", sw.l_min, "Smallest length (log-spaced range)");
  sw_cmd->add_option("--l-max", sw.l_max, "Largest length");
  sw_cmd->add_option("--points", sw.points, "Number of lengths");
  sw_cmd->add_option("--state", sw.state, "Numeric initial state: eigenstate | gaussian");
  sw_cmd->add_option("--side", sw.side, "Numeric outcome: left | right | both");

  auto* self_cmd = app.add_subcommand("selfcheck", "Run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (!format.empty()) cfg.format = parse_format(format);
    // Sweeps are tabular: CSV unless JSON was asked for.
    else if (*sw_cmd) cfg.format = OutputFormat::Csv;
    cfg.grid_explicit = std::any_of(grid_opts.begin(), grid_opts.end(), [](CLI::Option* o) { return o->count() > 0; });
    if (sigma_opt->count() > 0) eur.sigma_set = true;
    if (cost_opt->count() > 0) cy.cost = cost_value;

    if (*eur_cmd) return cmd_eur(eur, cfg, out, err);
    if (*sz_cmd) return cmd_szilard(sz, cfg, out, err);
    if (*cy_cmd) return cmd_cycle(cy, cfg, out, err);
    if (*ex_cmd) {
      const auto f = free_expansion_entropy(molecules, ratio, cfg.units.temperature, cfg.units.k);
      if (cfg.format == OutputFormat::Json) {
        print_json(out, to_json(f));
      } else {
        CsvWriter csv(out, {"molecules", "ratio", "delta_s", "q_equivalent"});
        csv.row({molecules, ratio, f.delta_s, f.q_equivalent});
      }
      return kOk;
    }
    if (*reset_cmd) {
      const auto r = norton_reset(parse_cell(initial));
      if (cfg.format == OutputFormat::Json) {
        print_json(out, to_json(r));
      } else {
        CsvWriter csv(out, {"step", "memory", "occupied_cells", "volume"});
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
          std::string cells;
          for (Cell c : r.trace[i].occupied_cells) cells += to_string(c);
          csv.row({i, to_string(r.trace[i].memory), cells, r.trace[i].volume()});
        }
      }
      return kOk;
    }
    if (*aim_cmd) {
      const auto a = speed_demon_feasibility(delta_p, door, cfg.units.hbar);
      if (cfg.format == OutputFormat::Json) {
        print_json(out, to_json(a));
      } else {
        CsvWriter csv(out, {"delta_p", "sigma_x_induced", "door_width", "feasible"});
        csv.row({a.delta_p, a.sigma_x_induced, a.door_width, a.feasible});
      }
      return kOk;
    }
    if (*sw_cmd) return cmd_sweep(sw, cfg, out, err);
    if (*self_cmd) return acceptance::report(acceptance::run_all(), out) ? kOk : kPhysicsViolation;
  } catch (const ImpossibleOutcome& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mdemon::cli
