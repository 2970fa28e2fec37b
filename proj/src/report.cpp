#include "psd/report.hpp"

#include <sstream>

namespace psd {

namespace {

Json fields_to_json(const Fields& fields) {
  Json out = Json::object();
  for (const auto& [key, value] : fields) out[key] = value;
  return out;
}

}  // namespace

Json to_json(const ProofStep& step) {
  Json out;
  out["claim"] = step.claim;
  out["lhs"] = step.lhs;
  out["rhs"] = step.rhs;
  out["verified"] = step.verified;
  return out;
}

Json to_json(const Report& report) {
  Json out;
  out["lemma"] = report.lemma;
  out["inputs"] = fields_to_json(report.inputs);
  out["forced_values"] = fields_to_json(report.forced_values);
  Json steps = Json::array();
  for (const auto& s : report.steps) steps.push_back(to_json(s));
  out["steps"] = std::move(steps);
  out["contradiction"] = report.contradiction;
  out["verdict"] = report.verdict;
  return out;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << report.lemma << "\n";
  for (const auto& [key, value] : report.inputs) out << "  input  " << key << " = " << value << "\n";
  for (const auto& [key, value] : report.forced_values) out << "  forced " << key << " = " << value << "\n";
  for (const auto& s : report.steps) {
    out << "  [" << (s.verified ? "ok" : "FAIL") << "] " << s.claim << ": " << s.lhs << " vs " << s.rhs << "\n";
  }
  if (!report.contradiction.empty()) out << "  contradiction: " << report.contradiction << "\n";
  out << "  verdict: " << report.verdict << "\n";
  return out.str();
}

}  // namespace psd
