#include "psd/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace psd {

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  Json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw std::invalid_argument("polynomial object lacks \"coeffs\"");
    list = &j.at("coeffs");
  }
  if (!list->is_array()) throw std::invalid_argument("polynomial coefficients must be an array");
  std::vector<Rational> coeffs;
  for (const auto& entry : *list) {
    if (entry.is_string()) {
      coeffs.push_back(parse_rational(entry.get<std::string>()));
    } else if (entry.is_number_integer()) {
      coeffs.push_back(from_int(entry.get<std::int64_t>()));
    } else {
      throw std::invalid_argument("polynomial coefficients must be \"p/q\" strings");
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial parse_polynomial(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

}  // namespace psd
