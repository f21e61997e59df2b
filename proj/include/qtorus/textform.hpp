#pragma once

// Shared helpers for the "c*key + c*key" text form of linear combinations.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus::text {

/// Splits "2*a + -1/3*b - c" into (coefficient, key) pairs. "0" yields nothing.
std::vector<std::pair<Scalar, std::string>> split_terms(std::string_view s);

/// Formats one term; coefficient 1 and -1 are abbreviated.
std::string term(const Scalar& c, const std::string& key);

/// Joins formatted terms, "0" when empty.
std::string join(const std::vector<std::string>& terms);

/// Reads comma separated integers inside the given delimiters, e.g. "(1,-2)".
std::vector<long> int_tuple(std::string_view s, char open, char close);

}  // namespace qtorus::text
