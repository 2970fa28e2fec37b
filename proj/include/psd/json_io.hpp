#ifndef PSD_JSON_IO_HPP
#define PSD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "psd/polynomial.hpp"

namespace psd {

using Json = nlohmann::ordered_json;

/// {"coeffs": ["p/q", ...]} in ascending degree; the zero polynomial has an
/// empty list.
Json to_json(const Polynomial& p);

/// Inverse of to_json. Also accepts a bare array of coefficient strings.
/// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const Json& j);
Polynomial parse_polynomial(const std::string& text);

}  // namespace psd

#endif  // PSD_JSON_IO_HPP
