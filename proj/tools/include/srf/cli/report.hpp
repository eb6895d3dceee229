#pragma once

// Machine-readable reports. High-precision numbers are written as
// {"value": <lossless decimal>, "bits": <precision>}.

#include "srf/bound_check.hpp"
#include "srf/complex.hpp"
#include "srf/hp_real.hpp"
#include "srf/support.hpp"
#include "srf/system.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace srf::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class Status { pass, fail, partial };

std::string to_string(Status s);
Status parse_status(const std::string& text);

/// A plot-ready table; every cell is a decimal string.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  std::string tool_version;
  std::string timestamp;
  Json config = Json::object();
  Json results = Json::object();
  std::vector<BoundCheck> checks;
  std::vector<Table> tables;
  Status status = Status::pass;

  /// fail if any check is unsatisfied, else partial if `incomplete`, else pass.
  void finalize(bool incomplete = false);
};

bool operator==(const Report& a, const Report& b);

Json hp_json(const HPReal& x);
HPReal hp_from_json(const Json& j);
Json complex_json(const HPComplex& z);
HPComplex complex_from_json(const Json& j);
Json support_json(const SupportSet& t);
SupportSet support_from_json(const Json& j);
/// {"support": [...], "re": [...], "im": [...], "bits": b}
Json coefficients_json(const CoefficientVector& x);
CoefficientVector coefficients_from_json(const Json& j);
Json check_json(const BoundCheck& c);
BoundCheck check_from_json(const Json& j);

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Sections, each introduced by "# <name> bits=<b>" (checks) or
/// "# table <name>", followed by a header row and data rows.
std::string to_csv(const Report& r);

struct CsvSection {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Splits CSV text back into its sections. Throws DomainError on malformed input.
std::vector<CsvSection> parse_csv(const std::string& text);

/// Rebuilds the checks table of a CSV report at its stated precision.
std::vector<BoundCheck> checks_from_csv(const std::string& text);

}  // namespace srf::cli
