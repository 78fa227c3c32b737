#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tunnelsplit/dynamics.hpp"
#include "tunnelsplit/exact_vd.hpp"
#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/pcf.hpp"
#include "tunnelsplit/wkb.hpp"

namespace tunnelsplit {

// "%.12e"; non-finite values print as nan, inf, -inf.
std::string format_double(double v);

using CsvCell = std::variant<double, long long, std::string>;

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<CsvCell>& cells);

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

nlohmann::json to_json(const WellParameters& p);
nlohmann::json to_json(const SplittingResult& r);
nlohmann::json to_json(const VdParameters& p);
nlohmann::json to_json(const VdSplitting& s);
nlohmann::json to_json(const PcfValue& v);
nlohmann::json to_json(const ScanPoint& p);
nlohmann::json to_json(const RichardsonResult& r);
nlohmann::json to_json(const LocalizedStates& s);  // scalars only
nlohmann::json to_json(const ForbiddenAmplitudes& a);

// Error object written to stderr by the command line tool.
nlohmann::json error_json(const std::string& kind, const std::string& message);

// Splitting-result columns shared by the split command.
std::vector<std::string> splitting_csv_header();
std::vector<CsvCell> splitting_csv_row(const SplittingResult& r);

}  // namespace tunnelsplit
