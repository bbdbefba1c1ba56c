#pragma once

/// @file notation.hpp
/// @brief Text forms of involutions and words.
///
/// Cycle notation: parenthesized groups of one or two labels, e.g.
/// "(31)(62)(5)". Without separators every digit is its own label, so labels
/// of 10 or more need commas: any comma in the text makes every group hold
/// whole numbers, as in "(12,3),(4)".
/// The empty involution is written "()" and parsed from "" or "()".

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "sytlab/core.hpp"
#include "sytlab/errors.hpp"

namespace sytlab {

namespace detail {

inline Label parse_label(std::string_view token) {
  std::uint32_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || value == 0) {
    throw ParseError("invalid label '" + std::string(token) + "'");
  }
  return Label(value);
}

inline bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace detail

/// Whitespace- or comma-separated labels.
inline std::vector<Label> parse_labels(std::string_view text) {
  std::vector<Label> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_separator(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !detail::is_separator(text[i])) ++i;
    if (i > start) out.push_back(detail::parse_label(text.substr(start, i - start)));
  }
  return out;
}

/// A comma anywhere switches the whole text to multi-digit labels, so "(12)" is
/// the 2-cycle on 1 and 2 but "(12),(3)" fixes 12. Commas may also separate groups.
inline Involution parse_cycles(std::string_view text) {
  std::vector<Label> fixed;
  std::vector<std::pair<Label, Label>> cycles;
  std::vector<Label> seen;

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto skip_between = [&] {
    while (i < text.size() && detail::is_separator(text[i])) ++i;
  };
  skip_space();
  if (text.substr(i) == "()") return {};
  const bool wide = text.find(',') != std::string_view::npos;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at offset " + std::to_string(i) + " in \"" + std::string(text) + "\"");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis in \"" + std::string(text) + "\"");
    auto body = text.substr(i + 1, close - i - 1);

    std::vector<Label> group;
    if (wide || body.find_first_of(" \t") != std::string_view::npos) {
      group = parse_labels(body);
    } else {
      for (char c : body) {
        if (c < '0' || c > '9') throw ParseError("unexpected character '" + std::string(1, c) + "' in cycle");
        group.push_back(detail::parse_label(std::string_view(&c, 1)));
      }
    }
    if (group.empty() || group.size() > 2) {
      throw ParseError("involution cycles hold one or two labels, got (" + std::string(body) + ")");
    }
    for (Label a : group) {
      if (std::ranges::find(seen, a) != seen.end()) {
        throw ParseError("label " + std::to_string(a.value()) + " appears in two cycles");
      }
      seen.push_back(a);
    }
    if (group.size() == 1) {
      fixed.push_back(group[0]);
    } else {
      cycles.emplace_back(group[0], group[1]);
    }
    i = close + 1;
    skip_between();
  }
  return Involution::from_cycles(std::move(fixed), cycles);
}

/// One-line form over the sorted support; entries must be distinct and self-inverse.
inline Involution parse_word(std::string_view text) {
  auto entries = parse_labels(text);
  try {
    return Involution::from_word(entries);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// 2-cycles by smaller label, written larger-first, then fixed points: "(31)(62)(5)".
/// With a label of 10 or more: "(12,3),(4)".
inline std::string format_cycles(const Involution& v) {
  if (v.empty()) return "()";
  const bool wide = v.support().back().value() >= 10;
  const std::string sep = wide ? "," : "";
  std::string out;
  auto group = [&](const std::string& body) { out += (out.empty() ? "(" : sep + "(") + body + ")"; };
  for (const auto& c : v.two_cycles()) group(std::to_string(c.high.value()) + sep + std::to_string(c.low.value()));
  for (Label a : v.fixed_points()) group(std::to_string(a.value()));
  return out;
}

inline std::string format_word(const PermutationWord& w) {
  std::string out;
  for (Label a : w.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a.value());
  }
  return out;
}

inline std::string format_shape(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.parts()[i]);
  }
  return out + "]";
}

}  // namespace sytlab
