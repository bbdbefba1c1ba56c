#pragma once

/// @file records.hpp
/// @brief Builders that turn library results into OutputRecords, plus the
/// small argument grammars the command line uses.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sytlab/bijections.hpp"
#include "sytlab/enumeration.hpp"
#include "sytlab/errors.hpp"
#include "sytlab/identities.hpp"
#include "sytlab/notation.hpp"
#include "sytlab/output.hpp"

namespace sytlab {

/// "a..b" (inclusive) or a single "a".
inline std::vector<std::size_t> parse_range(std::string_view text) {
  auto number = [&](std::string_view part) {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
      throw ParseError("invalid range '" + std::string(text) + "' (expected N or A..B)");
    }
    return value;
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) return {number(text)};
  std::size_t lo = number(text.substr(0, dots));
  std::size_t hi = number(text.substr(dots + 2));
  if (lo > hi) throw ParseError("empty range '" + std::string(text) + "'");
  std::vector<std::size_t> out;
  for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

inline std::string opt_text(const std::optional<std::size_t>& k) { return k ? std::to_string(*k) : "-"; }

inline OutputRecord count_record(const CountQuery& base, const std::vector<std::size_t>& ns, CountCache& cache) {
  OutputRecord record{RecordKind::count, {}};
  auto& t = record.table("counts", {"family", "k", "n", "value"});
  for (auto n : ns) {
    CountQuery q = base;
    q.n = n;
    t.add({std::string(family_name(q.family)), opt_text(q.k), std::to_string(n), to_decimal(cache.get(q))});
  }
  return record;
}

inline OutputRecord verdict_record(const std::vector<IdentityVerdict>& verdicts) {
  OutputRecord record{RecordKind::verdict, {}};
  record.tables.reserve(3);  // the references below must stay valid
  auto& summary = record.table("verdicts", {"identity", "k", "n", "lhs", "rhs", "holds"});
  auto& checks = record.table("cross_checks", {"identity", "k", "n", "name", "value"});
  auto& terms = record.table("terms", {"identity", "k", "n", "side", "index", "sign", "binomial", "left", "right",
                                       "term"});
  for (const auto& v : verdicts) {
    std::string id(identity_name(v.id));
    std::string k = opt_text(v.k);
    std::string n = std::to_string(v.n);
    summary.add({id, k, n, to_decimal(v.lhs), to_decimal(v.rhs), v.holds ? "true" : "false"});
    for (const auto& c : v.cross_checks) checks.add({id, k, n, c.name, to_decimal(c.value)});
    for (const auto& term : v.terms) {
      terms.add({id, k, n, std::string(side_name(term.side)), std::to_string(term.index), term.sign > 0 ? "+" : "-",
                 to_decimal(term.binomial), to_decimal(term.left_factor), to_decimal(term.right_factor),
                 to_decimal(term.term_value)});
    }
  }
  if (checks.rows.empty()) {
    record.tables.erase(record.tables.begin() + 1);
  }
  return record;
}

inline OutputRecord rsk_record(const Involution& v) {
  OutputRecord record{RecordKind::table, {}};
  auto tableau = rs_of_involution(v);
  auto word = involution_word(v);

  record.table("involution", {"cycles", "word", "size"})
      .add({format_cycles(v), format_word(word), std::to_string(v.size())});

  auto& rows = record.table("tableau", {"row", "entries"});
  for (std::size_t r = 0; r < tableau.rows().size(); ++r) {
    std::string entries;
    for (auto x : tableau.rows()[r]) entries += (entries.empty() ? "" : " ") + std::to_string(x);
    rows.add({std::to_string(r + 1), entries});
  }

  const auto& shape = tableau.shape();
  record
      .table("statistics", {"shape", "lis", "lds", "first_row", "first_column", "fixed_points", "odd_columns",
                            "beissinger"})
      .add({format_shape(shape), std::to_string(lis(word)), std::to_string(lds(word)),
            std::to_string(shape.first_row()), std::to_string(shape.first_column()),
            std::to_string(v.fixed_points().size()), std::to_string(odd_columns(tableau)),
            check_beissinger(v) ? "true" : "false"});
  return record;
}

inline std::string format_labels(const std::vector<Label>& ls) {
  std::string out;
  for (Label a : ls) out += (out.empty() ? "" : " ") + std::to_string(a.value());
  return out;
}

inline OutputRecord f_record(const PairState& before, bool trace) {
  OutputRecord record{trace ? RecordKind::trace : RecordKind::table, {}};
  auto m = pivot(before);
  PairState after = toggle_f(before);  // throws FUndefined without a pivot
  record.table("image", {"p", "q"}).add({format_cycles(after.p()), format_cycles(after.q())});
  if (trace) {
    bool from_p = before.p().is_fixed_point(*m);
    record.table("trace", {"F", "M", "moved_from", "moved_to"})
        .add({format_labels(free_points(before)), std::to_string(m->value()), from_p ? "p" : "q", from_p ? "q" : "p"});
  }
  return record;
}

inline std::string_view color_name(Color c) { return c == Color::red ? "red" : "blue"; }

inline OutputRecord g_record(const Arrangement& a, bool trace) {
  OutputRecord record{trace ? RecordKind::trace : RecordKind::table, {}};
  auto image = g_forward(a);
  auto& cycles = record.table("cycles", {"low", "high", "color"});
  for (const auto& c : image.cycles()) {
    cycles.add({std::to_string(c.cycle.low.value()), std::to_string(c.cycle.high.value()),
                std::string(color_name(c.color))});
  }
  if (trace) {
    auto unchosen = a.complement();
    auto& steps = record.table("trace", {"j", "i_j", "a_j", "color"});
    for (std::size_t j = 0; j < a.n(); ++j) {
      steps.add({std::to_string(j + 1), std::to_string(unchosen[j].value()), std::to_string(a.chosen()[j].value()),
                 unchosen[j] < a.chosen()[j] ? "red" : "blue"});
    }
  }
  return record;
}

inline OutputRecord g_inverse_record(const ColoredInvolution& c, bool trace) {
  OutputRecord record{trace ? RecordKind::trace : RecordKind::table, {}};
  auto a = g_inverse(c);
  record.table("arrangement", {"chosen"}).add({format_labels(a.chosen())});
  if (trace) {
    auto unchosen = a.complement();
    auto& steps = record.table("trace", {"j", "i_j", "a_j", "color"});
    for (std::size_t j = 0; j < a.n(); ++j) {
      steps.add({std::to_string(j + 1), std::to_string(unchosen[j].value()), std::to_string(a.chosen()[j].value()),
                 unchosen[j] < a.chosen()[j] ? "red" : "blue"});
    }
  }
  return record;
}

inline OutputRecord audit_record(const AuditReport& report) {
  OutputRecord record{RecordKind::table, {}};
  record
      .table("audit", {"n", "k", "pairs", "orbits", "survivors", "signed_total", "survivor_side", "nonzero_orbits",
                       "not_involutive", "pivot_shifts", "closure_failures", "survivors_not_fpf", "slice_mismatches",
                       "survivor_mismatches", "passed"})
      .add({std::to_string(report.n), opt_text(report.k), std::to_string(report.pairs), std::to_string(report.orbits),
            std::to_string(report.survivors), to_decimal(report.verdict.lhs),
            to_decimal(report.verdict.side_total(Side::rhs)), std::to_string(report.nonzero_orbits),
            std::to_string(report.not_involutive), std::to_string(report.pivot_shifts),
            std::to_string(report.closure_failures), std::to_string(report.survivors_not_fpf),
            std::to_string(report.slice_mismatches), std::to_string(report.survivor_mismatches),
            report.passed() ? "true" : "false"});
  auto& slices = record.table("slices", {"side", "r", "sign", "binomial", "left", "right", "term"});
  for (const auto& t : report.verdict.terms) {
    slices.add({t.side == Side::lhs ? "all_pairs" : "survivors", std::to_string(t.index), t.sign > 0 ? "+" : "-",
                to_decimal(t.binomial), to_decimal(t.left_factor), to_decimal(t.right_factor),
                to_decimal(t.term_value)});
  }
  return record;
}

}  // namespace sytlab
