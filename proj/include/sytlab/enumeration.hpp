#pragma once

/// @file enumeration.hpp
/// @brief Exact counts of tableaux, involutions and permutations, plus the
/// exhaustive generators that back them as oracles.
///
/// Fast paths are shape sums over constrained partitions (hook-length formula).
/// The generators enumerate objects directly and are only meant for small sizes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sytlab/bigint.hpp"
#include "sytlab/core.hpp"
#include "sytlab/errors.hpp"

namespace sytlab {

/// Size caps for the exhaustive routines.
struct OracleLimits {
  std::size_t permutations = 8;
  std::size_t involutions = 10;
  std::size_t lemma_support = 12;
  std::size_t pair_space = 4;
};

// ---------------------------------------------------------------------------
// Elementary numbers
// ---------------------------------------------------------------------------

inline BigInt factorial(std::uint64_t n) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Multiplicative formula, memoized process-wide.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);

  static std::shared_mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, BigInt> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  }
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  std::unique_lock lock(mutex);
  memo.emplace(std::pair{n, k}, result);
  return result;
}

inline BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

struct PartitionConstraints {
  std::optional<std::size_t> max_first_part;
  std::optional<std::size_t> max_parts;
  bool all_columns_even = false;
};

/// Visits each partition of n meeting the constraints once, in reverse
/// lexicographic order ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
template <typename Visit>
void for_each_partition(std::size_t n, const PartitionConstraints& constraints, Visit&& visit) {
  const std::size_t row_cap = constraints.max_parts.value_or(n);
  std::vector<std::size_t> parts;
  auto recurse = [&](auto&& self, std::size_t remaining, std::size_t cap) -> void {
    if (remaining == 0) {
      Shape s(parts);
      if (constraints.all_columns_even &&
          std::ranges::any_of(s.column_lengths(), [](std::size_t len) { return len % 2 != 0; })) {
        return;
      }
      visit(s);
      return;
    }
    if (parts.size() == row_cap) return;
    for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  recurse(recurse, n, constraints.max_first_part.value_or(n));
}

inline std::vector<Shape> partitions(std::size_t n, const PartitionConstraints& constraints = {}) {
  std::vector<Shape> out;
  for_each_partition(n, constraints, [&](const Shape& s) { out.push_back(s); });
  return out;
}

/// f^s, the number of standard tableaux of shape s: n! / product of hook lengths.
inline BigInt hook_length_count(const Shape& s) {
  const auto& parts = s.parts();
  const auto cols = s.column_lengths();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts[i]; ++j) {
      hooks *= (parts[i] - j - 1) + (cols[j] - i - 1) + 1;
    }
  }
  return factorial(s.size()) / hooks;
}

namespace detail {

template <typename Weight>
BigInt shape_sum(std::size_t n, const PartitionConstraints& constraints, Weight weight) {
  BigInt total = 0;
  for_each_partition(n, constraints, [&](const Shape& s) { total += weight(hook_length_count(s)); });
  return total;
}

inline BigInt identity_weight(const BigInt& f) { return f; }
inline BigInt square_weight(const BigInt& f) { return f * f; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

/// y_k(n): standard tableaux on n boxes with every row of length at most k.
inline BigInt count_y_k(std::size_t k, std::size_t n) {
  return detail::shape_sum(n, {.max_first_part = k, .max_parts = std::nullopt, .all_columns_even = false}, detail::identity_weight);
}

/// u_k(n): permutations of length n with no increasing subsequence of length k+1.
inline BigInt count_u_k(std::size_t k, std::size_t n) {
  return detail::shape_sum(n, {.max_first_part = k, .max_parts = std::nullopt, .all_columns_even = false}, detail::square_weight);
}

/// y(m): all involutions of an m-element set.
inline BigInt count_involutions(std::size_t m) {
  BigInt prev = 1;  // y(i-2)
  BigInt cur = 1;   // y(i-1)
  for (std::size_t i = 2; i <= m; ++i) {
    BigInt next = cur + (i - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// x(r): fixed-point-free involutions of an r-element set, (r-1)!! for even r.
inline BigInt count_fpf(std::size_t r) {
  if (r % 2 != 0) return 0;
  BigInt out = 1;
  for (std::size_t odd = 1; odd < r; odd += 2) out *= odd;
  return out;
}

/// x_k(r): fixed-point-free involutions with no decreasing subsequence longer than k.
/// Fixed-point-free means every column of RS(v) is even; the LDS bound caps the row count.
inline BigInt count_x_k(std::size_t k, std::size_t r) {
  return detail::shape_sum(r, {.max_first_part = std::nullopt, .max_parts = k, .all_columns_even = true}, detail::identity_weight);
}

/// Fixed-point-free involutions with no increasing subsequence longer than k.
/// Not interchangeable with count_x_k: conjugation does not preserve even columns.
inline BigInt count_x_k_increasing(std::size_t k, std::size_t r) {
  return detail::shape_sum(r, {.max_first_part = k, .max_parts = std::nullopt, .all_columns_even = true}, detail::identity_weight);
}

// ---------------------------------------------------------------------------
// Count queries and the shared cache
// ---------------------------------------------------------------------------

enum class CountFamily { u, y, y_unbounded, x_unbounded, x, catalan };

inline constexpr std::string_view family_name(CountFamily f) {
  switch (f) {
    case CountFamily::u: return "u";
    case CountFamily::y: return "y";
    case CountFamily::y_unbounded: return "y_unbounded";
    case CountFamily::x_unbounded: return "x_unbounded";
    case CountFamily::x: return "x";
    case CountFamily::catalan: return "catalan";
  }
  return "?";
}

inline std::optional<CountFamily> parse_family(std::string_view name) {
  for (auto f : {CountFamily::u, CountFamily::y, CountFamily::y_unbounded, CountFamily::x_unbounded, CountFamily::x,
                 CountFamily::catalan}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

inline constexpr bool family_takes_k(CountFamily f) {
  return f == CountFamily::u || f == CountFamily::y || f == CountFamily::x;
}

struct CountQuery {
  CountFamily family = CountFamily::catalan;
  std::optional<std::size_t> k;
  std::size_t n = 0;

  /// k must be present (and positive) exactly for the bounded families.
  void validate() const {
    if (family_takes_k(family) != k.has_value()) {
      throw PreconditionError(std::string("family '") + std::string(family_name(family)) +
                              (family_takes_k(family) ? "' requires a bound k" : "' takes no bound k"));
    }
    if (k && *k == 0) throw PreconditionError("bound k must be positive");
  }

  auto operator<=>(const CountQuery&) const = default;
};

inline BigInt compute_count(const CountQuery& q) {
  q.validate();
  switch (q.family) {
    case CountFamily::u: return count_u_k(*q.k, q.n);
    case CountFamily::y: return count_y_k(*q.k, q.n);
    case CountFamily::y_unbounded: return count_involutions(q.n);
    case CountFamily::x_unbounded: return count_fpf(q.n);
    case CountFamily::x: return count_x_k(*q.k, q.n);
    case CountFamily::catalan: return catalan(q.n);
  }
  throw PreconditionError("unknown count family");
}

/// Memo of (family, k, n) -> value. Readers share; inserts are idempotent
/// because recomputation always yields the same value.
class CountCache {
 public:
  CountCache() = default;
  CountCache(const CountCache& other) : entries_(other.snapshot()) {}
  CountCache& operator=(const CountCache& other) {
    auto copy = other.snapshot();
    std::unique_lock lock(mutex_);
    entries_ = std::move(copy);
    return *this;
  }

  BigInt get(const CountQuery& q) {
    if (auto hit = find(q)) return *hit;
    BigInt value = compute_count(q);
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(q, std::move(value)).first->second;
  }

  BigInt operator()(CountFamily family, std::optional<std::size_t> k, std::size_t n) { return get({family, k, n}); }

  std::optional<BigInt> find(const CountQuery& q) const {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(q); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  /// Stores a value verbatim (used when loading a cache file).
  void insert(const CountQuery& q, BigInt value) {
    q.validate();
    std::unique_lock lock(mutex_);
    entries_.insert_or_assign(q, std::move(value));
  }

  std::map<CountQuery, BigInt> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CountQuery, BigInt> entries_;
};

inline CountCache& default_cache() {
  static CountCache cache;
  return cache;
}

// ---------------------------------------------------------------------------
// Exhaustive generators (oracle backends)
// ---------------------------------------------------------------------------

struct InvolutionFilter {
  bool fixed_point_free = false;
  std::optional<std::size_t> max_lds;
};

/// Visits every involution on `support` passing the filter, each once. The
/// smallest unmatched label is either fixed (first) or paired with each later
/// label in increasing order.
template <typename Visit>
void for_each_involution(const std::vector<Label>& support, const InvolutionFilter& filter, Visit&& visit) {
  std::vector<Label> pool = support;
  std::ranges::sort(pool);
  std::vector<bool> used(pool.size(), false);
  std::vector<Label> fixed;
  std::vector<std::pair<Label, Label>> cycles;

  auto recurse = [&](auto&& self, std::size_t from) -> void {
    while (from < pool.size() && used[from]) ++from;
    if (from == pool.size()) {
      auto v = Involution::from_cycles(fixed, cycles);
      if (!filter.max_lds || lds(involution_word(v)) <= *filter.max_lds) visit(v);
      return;
    }
    used[from] = true;
    if (!filter.fixed_point_free) {
      fixed.push_back(pool[from]);
      self(self, from + 1);
      fixed.pop_back();
    }
    for (std::size_t j = from + 1; j < pool.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      cycles.emplace_back(pool[from], pool[j]);
      self(self, from + 1);
      cycles.pop_back();
      used[j] = false;
    }
    used[from] = false;
  };
  recurse(recurse, 0);
}

inline std::vector<Involution> generate_involutions(const std::vector<Label>& support,
                                                    const InvolutionFilter& filter = {}) {
  std::vector<Involution> out;
  for_each_involution(support, filter, [&](const Involution& v) { out.push_back(v); });
  return out;
}

/// u_k(n) by walking all n! permutations and filtering on LIS.
inline BigInt brute_force_u_k(std::size_t k, std::size_t n, const OracleLimits& limits = {}) {
  if (n > limits.permutations) throw ScaleLimitError("brute_force_u_k", n, limits.permutations);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::uint64_t hits = 0;
  do {
    if (longest_increasing_length(perm) <= k) ++hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hits;
}

}  // namespace sytlab
