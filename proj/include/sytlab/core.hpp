#pragma once

/// @file core.hpp
/// @brief Permutation words, involutions on labeled supports, shapes, standard
/// tableaux and the Robinson-Schensted map restricted to involutions.
///
/// Involutions keep their original labels (subsets of {1..2n}); every statistic
/// that depends on a one-line form reads positions in increasing label order.
/// rs_of_involution relabels the support order-isomorphically to 1..m before
/// inserting, so the resulting tableau is always standard.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sytlab {

/// Element of the ground set {1, 2, ...}.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t value) : value_(value) {
    if (value == 0) {
      throw std::invalid_argument("labels start at 1");
    }
  }

  constexpr std::uint32_t value() const noexcept { return value_; }

  constexpr auto operator<=>(const Label&) const = default;

 private:
  std::uint32_t value_ = 1;
};

inline std::vector<Label> labels(std::initializer_list<std::uint32_t> values) {
  std::vector<Label> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

/// {1, ..., count}
inline std::vector<Label> ground_set(std::uint32_t count) {
  std::vector<Label> out;
  out.reserve(count);
  for (std::uint32_t v = 1; v <= count; ++v) out.emplace_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Longest monotone subsequences
// ---------------------------------------------------------------------------

/// Patience sorting: length of the longest subsequence that is strictly
/// increasing under `before`. O(n log n).
template <std::ranges::input_range R, typename Compare = std::less<>>
std::size_t longest_increasing_length(const R& seq, Compare before = {}) {
  std::vector<std::ranges::range_value_t<R>> tails;
  for (const auto& x : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x, before);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

/// Strictly decreasing counterpart, computed on the reversed sequence.
template <std::ranges::bidirectional_range R>
std::size_t longest_decreasing_length(const R& seq) {
  return longest_increasing_length(seq | std::views::reverse);
}

/// Visits every maximum-length strictly decreasing subsequence of `word`,
/// passing the positions (ascending) of its entries. Returns the maximum length.
///
/// The number of such subsequences can grow exponentially; callers cap the
/// word length.
template <typename T, typename Visit>
std::size_t for_each_longest_decreasing(std::span<const T> word, Visit&& visit) {
  const std::size_t n = word.size();
  if (n == 0) return 0;
  // from_here[i]: longest decreasing subsequence starting at position i
  std::vector<std::size_t> from_here(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (word[j] < word[i]) from_here[i] = std::max(from_here[i], from_here[j] + 1);
    }
  }
  const std::size_t best = *std::max_element(from_here.begin(), from_here.end());

  std::vector<std::size_t> path;
  path.reserve(best);
  auto extend = [&](auto&& self, std::size_t at) -> void {
    path.push_back(at);
    if (from_here[at] == 1) {
      visit(std::as_const(path));
    } else {
      for (std::size_t j = at + 1; j < n; ++j) {
        if (word[j] < word[at] && from_here[j] + 1 == from_here[at]) self(self, j);
      }
    }
    path.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (from_here[i] == best) extend(extend, i);
  }
  return best;
}

// ---------------------------------------------------------------------------
// PermutationWord
// ---------------------------------------------------------------------------

/// One-line word of distinct labels. Position i corresponds to the i-th
/// smallest label of the support.
class PermutationWord {
 public:
  PermutationWord() = default;

  explicit PermutationWord(std::vector<Label> entries) : entries_(std::move(entries)) {
    auto sorted = entries_;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end()) {
      throw std::invalid_argument("permutation word repeats a label");
    }
  }

  const std::vector<Label>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::vector<Label> support() const {
    auto sorted = entries_;
    std::ranges::sort(sorted);
    return sorted;
  }

  PermutationWord reversed() const {
    PermutationWord out;
    out.entries_.assign(entries_.rbegin(), entries_.rend());
    return out;
  }

  bool operator==(const PermutationWord&) const = default;

 private:
  std::vector<Label> entries_;
};

inline std::size_t lis(const PermutationWord& w) { return longest_increasing_length(w.entries()); }

inline std::size_t lds(const PermutationWord& w) { return longest_increasing_length(w.reversed().entries()); }

// ---------------------------------------------------------------------------
// Involution
// ---------------------------------------------------------------------------

struct TwoCycle {
  Label low;
  Label high;

  auto operator<=>(const TwoCycle&) const = default;
};

/// Self-inverse bijection on a finite set of labels, stored as sorted fixed
/// points plus 2-cycles sorted by their smaller element.
class Involution {
 public:
  Involution() = default;

  static Involution from_cycles(std::vector<Label> fixed_points,
                                const std::vector<std::pair<Label, Label>>& two_cycles) {
    Involution v;
    v.fixed_ = std::move(fixed_points);
    v.cycles_.reserve(two_cycles.size());
    for (auto [a, b] : two_cycles) {
      if (a == b) {
        throw std::invalid_argument("2-cycle with a repeated label");
      }
      v.cycles_.push_back(a < b ? TwoCycle{a, b} : TwoCycle{b, a});
    }
    v.normalize();
    return v;
  }

  /// Reads `word` as a one-line form: the i-th smallest entry is mapped to word[i].
  static Involution from_word(std::span<const Label> word) {
    std::vector<Label> support(word.begin(), word.end());
    std::ranges::sort(support);
    if (std::ranges::adjacent_find(support) != support.end()) {
      throw std::invalid_argument("word repeats a label");
    }
    auto image = [&](Label a) {
      auto pos = std::ranges::lower_bound(support, a) - support.begin();
      return word[static_cast<std::size_t>(pos)];
    };
    Involution v;
    for (std::size_t i = 0; i < word.size(); ++i) {
      Label a = support[i];
      Label b = word[i];
      if (image(b) != a) {
        throw std::invalid_argument("word is not an involution: label " + std::to_string(a.value()) +
                                    " maps to " + std::to_string(b.value()) + " but " +
                                    std::to_string(b.value()) + " does not map back");
      }
      if (a == b) {
        v.fixed_.push_back(a);
      } else if (a < b) {
        v.cycles_.push_back({a, b});
      }
    }
    v.normalize();
    return v;
  }

  static Involution identity(std::vector<Label> support) { return from_cycles(std::move(support), {}); }

  const std::vector<Label>& fixed_points() const noexcept { return fixed_; }
  const std::vector<TwoCycle>& two_cycles() const noexcept { return cycles_; }

  std::size_t size() const noexcept { return fixed_.size() + 2 * cycles_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool is_fixed_point_free() const noexcept { return fixed_.empty(); }

  /// Sorted support s_v.
  std::vector<Label> support() const {
    std::vector<Label> out = fixed_;
    for (const auto& c : cycles_) {
      out.push_back(c.low);
      out.push_back(c.high);
    }
    std::ranges::sort(out);
    return out;
  }

  bool is_fixed_point(Label a) const { return std::ranges::binary_search(fixed_, a); }

  bool contains(Label a) const {
    return is_fixed_point(a) ||
           std::ranges::any_of(cycles_, [a](const TwoCycle& c) { return c.low == a || c.high == a; });
  }

  Label operator()(Label a) const {
    if (is_fixed_point(a)) return a;
    for (const auto& c : cycles_) {
      if (c.low == a) return c.high;
      if (c.high == a) return c.low;
    }
    throw std::out_of_range("label " + std::to_string(a.value()) + " is outside the support");
  }

  Involution with_fixed_point(Label a) const {
    if (contains(a)) {
      throw std::invalid_argument("label " + std::to_string(a.value()) + " already in the support");
    }
    Involution v = *this;
    v.fixed_.insert(std::ranges::upper_bound(v.fixed_, a), a);
    return v;
  }

  Involution without_fixed_point(Label a) const {
    auto it = std::ranges::lower_bound(fixed_, a);
    if (it == fixed_.end() || *it != a) {
      throw std::invalid_argument("label " + std::to_string(a.value()) + " is not a fixed point");
    }
    Involution v = *this;
    v.fixed_.erase(v.fixed_.begin() + (it - fixed_.begin()));
    return v;
  }

  bool operator==(const Involution&) const = default;

 private:
  void normalize() {
    std::ranges::sort(fixed_);
    std::ranges::sort(cycles_);
    auto all = support();
    if (std::ranges::adjacent_find(all) != all.end()) {
      throw std::invalid_argument("involution uses a label twice");
    }
  }

  std::vector<Label> fixed_;
  std::vector<TwoCycle> cycles_;
};

/// One-line form: the entry at the position of label a is v(a).
inline PermutationWord involution_word(const Involution& v) {
  auto support = v.support();
  std::vector<Label> entries;
  entries.reserve(support.size());
  for (Label a : support) entries.push_back(v(a));
  return PermutationWord(std::move(entries));
}

// ---------------------------------------------------------------------------
// Shape
// ---------------------------------------------------------------------------

/// Integer partition, parts weakly decreasing and positive.
class Shape {
 public:
  Shape() = default;

  explicit Shape(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("shape parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("shape parts must be weakly decreasing");
    }
  }

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t rows() const noexcept { return parts_.size(); }
  std::size_t first_row() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t first_column() const noexcept { return parts_.size(); }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto p : parts_) total += p;
    return total;
  }

  /// Length of column j (0-based) is #{i : parts[i] > j}.
  std::vector<std::size_t> column_lengths() const {
    std::vector<std::size_t> cols(first_row(), 0);
    for (auto p : parts_) {
      for (std::size_t j = 0; j < p; ++j) ++cols[j];
    }
    return cols;
  }

  bool operator==(const Shape&) const = default;

 private:
  std::vector<std::size_t> parts_;
};

inline Shape conjugate(const Shape& s) { return Shape(s.column_lengths()); }

// ---------------------------------------------------------------------------
// StandardTableau
// ---------------------------------------------------------------------------

class StandardTableau {
 public:
  StandardTableau() = default;

  /// Validates shape, contents {1..n} and strict increase along rows and columns.
  explicit StandardTableau(std::vector<std::vector<std::uint32_t>> rows) : rows_(std::move(rows)) {
    std::vector<std::size_t> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(row.size());
    shape_ = Shape(parts);  // rejects empty rows and increasing row lengths

    const std::size_t n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        auto x = rows_[r][c];
        if (x < 1 || x > n || seen[x]) {
          throw std::invalid_argument("tableau entries must be 1..n, each exactly once");
        }
        seen[x] = true;
        if (c > 0 && rows_[r][c - 1] >= x) throw std::invalid_argument("tableau row is not strictly increasing");
        if (r > 0 && rows_[r - 1][c] >= x) throw std::invalid_argument("tableau column is not strictly increasing");
      }
    }
  }

  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }
  const Shape& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return shape_.size(); }

  bool operator==(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<std::uint32_t>> rows_;
  Shape shape_;
};

namespace detail {

/// Schensted row insertion of a word over distinct integers; returns the insertion tableau rows.
inline std::vector<std::vector<std::uint32_t>> row_insert_all(std::span<const std::uint32_t> word) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t x : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return rows;
}

/// Order-isomorphic relabeling of a word of distinct labels onto 1..m.
inline std::vector<std::uint32_t> standardize(const PermutationWord& w) {
  auto support = w.support();
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (Label a : w.entries()) {
    out.push_back(static_cast<std::uint32_t>(std::ranges::lower_bound(support, a) - support.begin()) + 1);
  }
  return out;
}

}  // namespace detail

/// RS(v). Insertion and recording tableaux coincide for involutions, so one
/// tableau is returned.
inline StandardTableau rs_of_involution(const Involution& v) {
  auto word = detail::standardize(involution_word(v));
  return StandardTableau(detail::row_insert_all(word));
}

/// Inverse of rs_of_involution: the involution on {1..n} whose RS tableau is t.
inline Involution rs_inverse(const StandardTableau& t) {
  const std::size_t n = t.size();
  auto insertion = t.rows();
  // recording tableau equals t, so the cell holding i is where step i ended
  std::vector<std::size_t> row_of(n + 1);
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (auto x : t.rows()[r]) row_of[x] = r;
  }

  std::vector<Label> word(n);
  for (std::size_t step = n; step >= 1; --step) {
    std::size_t r = row_of[step];
    std::uint32_t x = insertion[r].back();
    insertion[r].pop_back();
    while (r-- > 0) {
      auto& row = insertion[r];
      // largest entry smaller than x
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    word[step - 1] = Label(x);
  }
  return Involution::from_word(word);
}

/// Number of columns of odd length in the tableau's shape.
inline std::size_t odd_columns(const Shape& s) {
  std::size_t count = 0;
  for (auto len : s.column_lengths()) count += len % 2;
  return count;
}

inline std::size_t odd_columns(const StandardTableau& t) { return odd_columns(t.shape()); }

}  // namespace sytlab
