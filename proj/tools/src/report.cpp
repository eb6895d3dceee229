#include "srf/cli/report.hpp"

#include "srf/errors.hpp"

#include <sstream>

namespace srf::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::partial: return "partial";
  }
  return "fail";
}

Status parse_status(const std::string& text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "partial") return Status::partial;
  throw DomainError("unknown report status '" + text + "'");
}

void Report::finalize(bool incomplete) {
  if (!all_satisfied(checks)) {
    status = Status::fail;
  } else {
    status = incomplete ? Status::partial : Status::pass;
  }
}

namespace {

bool same(const HPReal& a, const HPReal& b) { return a.precision() == b.precision() && a == b; }

bool same(const BoundCheck& a, const BoundCheck& b) {
  return a.name == b.name && same(a.lhs, b.lhs) && same(a.rhs, b.rhs) && same(a.slack, b.slack) &&
         a.satisfied == b.satisfied;
}

}  // namespace

bool operator==(const Report& a, const Report& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (!same(a.checks[i], b.checks[i])) return false;
  return a.schema_version == b.schema_version && a.tool_version == b.tool_version && a.timestamp == b.timestamp &&
         a.config == b.config && a.results == b.results && a.tables == b.tables && a.status == b.status;
}

Json hp_json(const HPReal& x) { return Json{{"value", x.to_string()}, {"bits", x.precision()}}; }

HPReal hp_from_json(const Json& j) {
  return HPReal::parse(j.at("value").get<std::string>(), j.at("bits").get<Bits>());
}

Json complex_json(const HPComplex& z) { return Json{{"re", hp_json(z.re)}, {"im", hp_json(z.im)}}; }

HPComplex complex_from_json(const Json& j) { return {hp_from_json(j.at("re")), hp_from_json(j.at("im"))}; }

Json support_json(const SupportSet& t) { return Json(t.offsets()); }

SupportSet support_from_json(const Json& j) { return SupportSet(j.get<std::vector<long>>()); }

Json coefficients_json(const CoefficientVector& x) {
  Json re = Json::array();
  Json im = Json::array();
  Bits bits = 0;
  for (const auto& z : x.values) {
    re.push_back(z.re.to_string());
    im.push_back(z.im.to_string());
    bits = std::max({bits, z.re.precision(), z.im.precision()});
  }
  return Json{{"support", support_json(x.support)}, {"re", re}, {"im", im}, {"bits", bits}};
}

CoefficientVector coefficients_from_json(const Json& j) {
  const Bits bits = j.at("bits").get<Bits>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size()) throw DomainError("coefficient arrays differ in length");
  std::vector<HPComplex> v;
  for (std::size_t i = 0; i < re.size(); ++i)
    v.emplace_back(HPReal::parse(re[i].get<std::string>(), bits), HPReal::parse(im[i].get<std::string>(), bits));
  return {support_from_json(j.at("support")), std::move(v)};
}

Json check_json(const BoundCheck& c) {
  return Json{{"name", c.name},
              {"lhs", hp_json(c.lhs)},
              {"rhs", hp_json(c.rhs)},
              {"slack", hp_json(c.slack)},
              {"satisfied", c.satisfied}};
}

BoundCheck check_from_json(const Json& j) {
  return {j.at("name").get<std::string>(), hp_from_json(j.at("lhs")), hp_from_json(j.at("rhs")),
          hp_from_json(j.at("slack")), j.at("satisfied").get<bool>()};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  Json tables = Json::array();
  for (const auto& t : r.tables) tables.push_back(Json{{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  return Json{{"schema_version", r.schema_version},
              {"tool_version", r.tool_version},
              {"timestamp", r.timestamp},
              {"config", r.config},
              {"results", r.results},
              {"checks", checks},
              {"tables", tables},
              {"status", to_string(r.status)}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != kSchemaVersion) throw DomainError("unsupported schema_version " + r.schema_version);
  r.tool_version = j.at("tool_version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.config = j.at("config");
  r.results = j.at("results");
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  for (const auto& t : j.at("tables")) {
    r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                        t.at("rows").get<std::vector<std::vector<std::string>>>()});
  }
  r.status = parse_status(j.at("status").get<std::string>());
  return r;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << '\n';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV line");
  cells.push_back(std::move(cur));
  return cells;
}

Bits checks_bits(const std::vector<BoundCheck>& checks) {
  Bits bits = 0;
  for (const auto& c : checks) bits = std::max({bits, c.lhs.precision(), c.rhs.precision(), c.slack.precision()});
  return bits == 0 ? default_precision() : bits;
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  // One stated precision per section; widening is exact, so re-parsing at
  // that precision recovers every value.
  const Bits bits = checks_bits(r.checks);
  auto cell = [bits](const HPReal& x) { return x.at_precision(bits).to_string(); };
  os << "# checks bits=" << bits << '\n';
  csv_row(os, {"name", "lhs", "rhs", "slack", "satisfied"});
  for (const auto& c : r.checks)
    csv_row(os, {c.name, cell(c.lhs), cell(c.rhs), cell(c.slack), c.satisfied ? "true" : "false"});
  for (const auto& t : r.tables) {
    os << "\n# table " << t.name << '\n';
    csv_row(os, t.columns);
    for (const auto& row : t.rows) csv_row(os, row);
  }
  return os.str();
}

std::vector<CsvSection> parse_csv(const std::string& text) {
  std::vector<CsvSection> out;
  std::istringstream is(text);
  std::string line;
  bool want_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      out.push_back({line.substr(2), {}, {}});
      want_header = true;
      continue;
    }
    if (out.empty()) throw DomainError("CSV data before the first section title");
    auto cells = split_csv_line(line);
    if (want_header) {
      out.back().header = std::move(cells);
      want_header = false;
    } else {
      if (cells.size() != out.back().header.size()) throw DomainError("CSV row width does not match its header");
      out.back().rows.push_back(std::move(cells));
    }
  }
  return out;
}

std::vector<BoundCheck> checks_from_csv(const std::string& text) {
  for (const auto& s : parse_csv(text)) {
    if (s.title.rfind("checks bits=", 0) != 0) continue;
    const Bits bits = std::stol(s.title.substr(12));
    std::vector<BoundCheck> checks;
    for (const auto& row : s.rows) {
      checks.push_back({row[0], HPReal::parse(row[1], bits), HPReal::parse(row[2], bits),
                        HPReal::parse(row[3], bits), row[4] == "true"});
    }
    return checks;
  }
  throw DomainError("CSV has no checks section");
}

}  // namespace srf::cli
