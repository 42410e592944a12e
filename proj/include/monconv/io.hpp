#pragma once

#include <json.hpp>

#include <string>

#include "monconv/polynomial.hpp"

namespace monconv {

using Json = nlohmann::ordered_json;

// 17 significant digits; non-finite values print as inf, -inf or nan.
std::string format_double(double x);

// Compact single-line JSON with every floating value at 17 significant digits.
// Non-finite floats are written as null.
std::string dump_json(const Json& value);

// {"m": .., "n": .., "entries": [{"alpha": [..], "re": .., "im": ..}, ...]}
Json polynomial_to_json(const HomogeneousPolynomial& P);
HomogeneousPolynomial polynomial_from_json(const Json& doc);

std::string read_text_file(const std::string& path);
// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace monconv
