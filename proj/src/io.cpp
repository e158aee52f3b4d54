#include "mdemon/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace mdemon {

namespace {

std::string side_name(const std::optional<Side>& side) { return side ? to_string(*side) : "unresolved"; }

PartitionModel parse_model(const std::string& s) {
  if (s == "analytic-gaussian") return PartitionModel::AnalyticGaussian;
  if (s == "numeric-projection") return PartitionModel::NumericProjection;
  throw std::invalid_argument("unknown partition model '" + s + "'");
}

}  // namespace

Json to_json(const EntropyReport<double>& r) {
  return Json{{"h_x", r.h_x},           {"h_p", r.h_p},           {"eur_sum", r.eur_sum},
              {"eur_bound", r.eur_bound}, {"thermo_s", r.thermo_s}, {"satisfies_eur", r.satisfies_eur}};
}

EntropyReport<double> entropy_report_from_json(const Json& j) {
  EntropyReport<double> r;
  r.h_x = j.at("h_x").get<double>();
  r.h_p = j.at("h_p").get<double>();
  r.eur_sum = j.at("eur_sum").get<double>();
  r.eur_bound = j.at("eur_bound").get<double>();
  r.thermo_s = j.at("thermo_s").get<double>();
  r.satisfies_eur = j.at("satisfies_eur").get<bool>();
  return r;
}

Json to_json(const PartitionEvent<double>& e) {
  return Json{{"model", to_string(e.model)},
              {"side", side_name(e.side)},
              {"s_before", e.s_before},
              {"s_after", e.s_after},
              {"delta_s", e.delta_s},
              {"sigma_x_before", e.sigma_x_before},
              {"sigma_x_after", e.sigma_x_after},
              {"sigma_p_before", e.sigma_p_before},
              {"sigma_p_after", e.sigma_p_after},
              {"momentum_tail_mass", e.momentum_tail_mass}};
}

PartitionEvent<double> partition_event_from_json(const Json& j) {
  PartitionEvent<double> e;
  e.model = parse_model(j.at("model").get<std::string>());
  const auto side = j.at("side").get<std::string>();
  if (side != "unresolved") e.side = parse_side(side);
  e.s_before = j.at("s_before").get<double>();
  e.s_after = j.at("s_after").get<double>();
  e.delta_s = j.at("delta_s").get<double>();
  e.sigma_x_before = j.at("sigma_x_before").get<double>();
  e.sigma_x_after = j.at("sigma_x_after").get<double>();
  e.sigma_p_before = j.value("sigma_p_before", 0.0);
  e.sigma_p_after = j.value("sigma_p_after", 0.0);
  e.momentum_tail_mass = j.value("momentum_tail_mass", 0.0);
  return e;
}

Json to_json(const GaussianEigenstateComparison<double>& c) {
  return Json{{"delta_s_gaussian_analytic", c.delta_s_gaussian_analytic},
              {"delta_s_eigenstate_numeric", c.delta_s_eigenstate_numeric},
              {"lower_bound_respected", c.lower_bound_respected}};
}

Json to_json(const CycleLedger& l) {
  return Json{{"temperature", l.temperature},
              {"k", l.k},
              {"delta_s_measurement", l.delta_s_measurement},
              {"w_extracted", l.w_extracted},
              {"q_reservoir", l.q_reservoir},
              {"delta_s_reservoir", l.delta_s_reservoir},
              {"delta_s_net", l.delta_s_net}};
}

CycleLedger cycle_ledger_from_json(const Json& j) {
  CycleLedger l;
  l.temperature = j.at("temperature").get<double>();
  l.k = j.at("k").get<double>();
  l.delta_s_measurement = j.at("delta_s_measurement").get<double>();
  l.w_extracted = j.at("w_extracted").get<double>();
  l.q_reservoir = j.at("q_reservoir").get<double>();
  l.delta_s_reservoir = j.at("delta_s_reservoir").get<double>();
  l.delta_s_net = j.at("delta_s_net").get<double>();
  return l;
}

Json to_json(const FreeExpansion& f) { return Json{{"delta_s", f.delta_s}, {"q_equivalent", f.q_equivalent}}; }

namespace {

Json to_json(const ResetState& s) {
  Json cells = Json::array();
  for (Cell c : s.occupied_cells) cells.push_back(to_string(c));
  return Json{{"memory", to_string(s.memory)}, {"occupied_cells", cells}, {"volume", s.volume()}};
}

}  // namespace

Json to_json(const ResetResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  return Json{{"trace", trace}, {"final", to_json(r.final)}};
}

Json to_json(const AimReport& a) {
  return Json{{"delta_p", a.delta_p},
              {"sigma_x_induced", a.sigma_x_induced},
              {"door_width", a.door_width},
              {"feasible", a.feasible}};
}

Json to_json(const MonteCarloAggregate& m) {
  return Json{{"n_cycles", m.n_cycles},
              {"mean_delta_s_net", m.mean_delta_s_net},
              {"min_delta_s_net", m.min_delta_s_net},
              {"total_work", m.total_work},
              {"mean_work", m.mean_work}};
}

std::string canonical_json(const std::string& text) { return Json::parse(text).dump(2); }

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string> header)
    : CsvWriter(out, std::vector<std::string>(header)) {}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<Cell> cells) {
  if (cells.size() != columns_) throw std::logic_error("csv row width does not match header");
  bool first = true;
  for (const auto& c : cells) {
    out_ << (first ? "" : ",") << c.text;
    first = false;
  }
  out_ << '\n';
}

void write_density_csv(std::ostream& out, const Density<double>& d, const std::string& coordinate_name) {
  CsvWriter csv(out, {coordinate_name, "value"});
  for (Eigen::Index i = 0; i < d.size(); ++i) csv.row({d.coordinate(i), d.values()[i]});
}

void write_sweep_row(CsvWriter& csv, double length, const PartitionEvent<double>& e) {
  csv.row({to_string(e.model), length, side_name(e.side), e.s_before, e.s_after, e.delta_s});
}

void write_monte_carlo_csv(std::ostream& out, const MonteCarloAggregate& m) {
  CsvWriter csv(out, kMonteCarloColumns);
  for (const auto& c : m.cycles) csv.row({c.cycle, c.measurement_cost, c.delta_s_net, c.work});
}

}  // namespace mdemon
