#pragma once

#include "mdemon/demon.hpp"
#include "mdemon/entropy.hpp"
#include "mdemon/szilard.hpp"
#include "mdemon/wavefunction.hpp"

#include <json.hpp>

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace mdemon {

using Json = nlohmann::ordered_json;

// JSON records. Field names are part of the external interface.
Json to_json(const EntropyReport<double>& r);
Json to_json(const PartitionEvent<double>& e);
Json to_json(const GaussianEigenstateComparison<double>& c);
Json to_json(const CycleLedger& l);
Json to_json(const FreeExpansion& f);
Json to_json(const ResetResult& r);
Json to_json(const AimReport& a);
Json to_json(const MonteCarloAggregate& m);

EntropyReport<double> entropy_report_from_json(const Json& j);
PartitionEvent<double> partition_event_from_json(const Json& j);
CycleLedger cycle_ledger_from_json(const Json& j);

/// Parse and re-dump; the canonical form of a JSON document.
std::string canonical_json(const std::string& text);

/// 12 significant digits, '.' decimal separator, no grouping.
std::string csv_number(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string> header);
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  /// Each cell is either preformatted text or a number.
  struct Cell {
    Cell(double v) : text(csv_number(v)) {}
    Cell(int v) : text(std::to_string(v)) {}
    Cell(long long v) : text(std::to_string(v)) {}
    Cell(std::size_t v) : text(std::to_string(v)) {}
    Cell(const char* s) : text(s) {}
    Cell(std::string s) : text(std::move(s)) {}
    Cell(bool b) : text(b ? "true" : "false") {}
    std::string text;
  };

  void row(std::initializer_list<Cell> cells);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

/// Two columns: coordinate, value.
void write_density_csv(std::ostream& out, const Density<double>& d, const std::string& coordinate_name = "x");

/// Columns of the partition sweep output.
inline const std::vector<std::string> kSweepColumns = {"model", "L", "side", "s_before", "s_after", "delta_s"};
/// Columns of the Monte Carlo cycle output.
inline const std::vector<std::string> kMonteCarloColumns = {"cycle", "measurement_cost", "delta_s_net", "work"};

void write_sweep_row(CsvWriter& csv, double length, const PartitionEvent<double>& e);
void write_monte_carlo_csv(std::ostream& out, const MonteCarloAggregate& m);

}  // namespace mdemon
