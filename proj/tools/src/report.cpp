#include "rscheck/cli/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace rscheck::cli {

using json = nlohmann::ordered_json;

Summary tally(const std::vector<CheckResult>& results) {
  Summary s;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::IllPosed: ++s.ill_posed; break;
      case Status::Inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

int exit_code(const Summary& s) { return s.fail == 0 && s.ill_posed == 0 ? 0 : 1; }

namespace {

json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  json o = json::object();
  for (const auto& [k, v] : kv) o[k] = v;
  return o;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& o) {
  if (!o.is_object()) throw std::invalid_argument("expected an object of strings");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : o.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

json result_to_json(const CheckResult& r) {
  json o;
  o["family"] = r.family;
  o["params"] = pairs_to_json(r.params);
  o["status"] = std::string(to_string(r.status));
  o["lhs"] = r.lhs;
  o["rhs"] = r.rhs;
  o["modulus"] = r.modulus;
  if (r.witness) o["witness"] = *r.witness;
  if (r.note) o["note"] = *r.note;
  return o;
}

CheckResult result_from_json(const json& o) {
  CheckResult r;
  r.family = o.at("family").get<std::string>();
  r.params = pairs_from_json(o.at("params"));
  const auto status = parse_status(o.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status " + o.at("status").get<std::string>());
  r.status = *status;
  r.lhs = o.at("lhs").get<std::string>();
  r.rhs = o.at("rhs").get<std::string>();
  r.modulus = o.at("modulus").get<std::string>();
  if (o.contains("witness")) r.witness = o.at("witness").get<std::string>();
  if (o.contains("note")) r.note = o.at("note").get<std::string>();
  return r;
}

std::string params_text(const CheckResult& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

std::string emit_json(const Report& report) {
  json o;
  o["version"] = report.version;
  if (report.timestamp) o["timestamp"] = *report.timestamp;
  o["config"] = pairs_to_json(report.config);
  json results = json::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  o["results"] = std::move(results);
  const Summary s = report.summary();
  o["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"ill_posed", s.ill_posed}, {"inconclusive", s.inconclusive}};
  return o.dump(2) + "\n";
}

std::string emit_csv(const Report& report) {
  std::string out = "family,params,status,lhs,rhs,modulus,witness,note\n";
  for (const auto& r : report.results) {
    out += csv_field(r.family) + ',' + csv_field(params_text(r)) + ',' + csv_field(to_string(r.status)) + ',' +
           csv_field(r.lhs) + ',' + csv_field(r.rhs) + ',' + csv_field(r.modulus) + ',' +
           csv_field(r.witness.value_or("")) + ',' + csv_field(r.note.value_or("")) + '\n';
  }
  return out;
}

std::string emit_text(const Report& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += std::string(to_string(r.status)) + "  " + r.family;
    const std::string p = params_text(r);
    if (!p.empty()) out += " " + p;
    if (r.witness) out += "  witness: " + *r.witness;
    else if (!r.modulus.empty()) out += "  mod " + r.modulus;
    if (r.note) out += "  (" + *r.note + ")";
    out += '\n';
  }
  const Summary s = report.summary();
  out += "pass " + std::to_string(s.pass) + ", fail " + std::to_string(s.fail) + ", ill-posed " +
         std::to_string(s.ill_posed) + ", inconclusive " + std::to_string(s.inconclusive) + '\n';
  return out;
}

}  // namespace

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string emit_report(const Report& report, Format format) {
  switch (format) {
    case Format::Json: return emit_json(report);
    case Format::Csv: return emit_csv(report);
    case Format::Text: return emit_text(report);
  }
  return {};
}

Report parse_json_report(std::string_view text) {
  json o;
  try {
    o = json::parse(text);
    Report r;
    r.version = o.at("version").get<std::string>();
    if (o.contains("timestamp")) r.timestamp = o.at("timestamp").get<std::string>();
    r.config = pairs_from_json(o.at("config"));
    for (const auto& item : o.at("results")) r.results.push_back(result_from_json(item));
    const auto& s = o.at("summary");
    const Summary stored{s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                         s.at("ill_posed").get<std::size_t>(), s.at("inconclusive").get<std::size_t>()};
    if (!(stored == r.summary())) throw std::invalid_argument("summary does not match the results");
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace rscheck::cli
