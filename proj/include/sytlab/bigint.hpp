#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sytlab {

/// Exact signed integer used for every count and every signed sum.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Parses an optionally signed run of decimal digits; throws std::invalid_argument otherwise.
inline BigInt from_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) {
    throw std::invalid_argument("empty decimal string");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace sytlab
