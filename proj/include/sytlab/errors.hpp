#pragma once

#include <stdexcept>
#include <string>

namespace sytlab {

/// An exhaustive routine was asked for a size above its configured limit.
class ScaleLimitError : public std::runtime_error {
 public:
  ScaleLimitError(const std::string& what_for, std::size_t requested, std::size_t limit)
      : std::runtime_error("oracle scale exceeded: " + what_for + " requested size " + std::to_string(requested) +
                           ", limit " + std::to_string(limit)) {}
};

/// Input lies outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A property that must hold by construction was observed to fail.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (cycle notation, words, cache files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The sign-reversing involution has no pivot: both sides are fixed-point-free.
class FUndefined : public std::domain_error {
 public:
  FUndefined() : std::domain_error("f undefined: both involutions fixed-point-free") {}
};

}  // namespace sytlab
