#pragma once

/// @file bijections.hpp
/// @brief The sign-reversing involution f on pairs of involutions, its
/// restriction to LDS-bounded pairs, the red/blue bijection g, and exhaustive
/// checkers built on them.
///
/// A PairState (p, q) has supports partitioning {1..2n}; its sign is
/// (-1)^|support(p)|. f moves the largest fixed point of p or q to the other
/// side, so it flips the sign and leaves the set of fixed points unchanged.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sytlab/bigint.hpp"
#include "sytlab/core.hpp"
#include "sytlab/enumeration.hpp"
#include "sytlab/errors.hpp"
#include "sytlab/identities.hpp"

namespace sytlab {

// ---------------------------------------------------------------------------
// Pairs of involutions
// ---------------------------------------------------------------------------

class PairState {
 public:
  PairState(Involution p, Involution q, std::size_t n) : p_(std::move(p)), q_(std::move(q)), n_(n) {
    auto all = p_.support();
    auto qs = q_.support();
    all.insert(all.end(), qs.begin(), qs.end());
    std::ranges::sort(all);
    if (all != ground_set(static_cast<std::uint32_t>(2 * n_))) {
      throw PreconditionError("supports of p and q must partition {1.." + std::to_string(2 * n_) + "}");
    }
  }

  const Involution& p() const noexcept { return p_; }
  const Involution& q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }

  /// (-1)^|support(p)|
  int sign() const noexcept { return p_.size() % 2 == 0 ? 1 : -1; }

  /// One signed entry per label: +v(a) if a belongs to p, -v(a) if it belongs to q.
  std::vector<std::int64_t> key() const {
    std::vector<std::int64_t> out(2 * n_);
    for (std::uint32_t a = 1; a <= 2 * n_; ++a) {
      Label l(a);
      out[a - 1] = p_.contains(l) ? std::int64_t{p_(l).value()} : -std::int64_t{q_(l).value()};
    }
    return out;
  }

  bool operator==(const PairState&) const = default;

 private:
  Involution p_;
  Involution q_;
  std::size_t n_;
};

/// Membership in B(n,k): neither side has a decreasing subsequence longer than k.
inline bool in_bounded_space(const PairState& s, std::size_t k) {
  return lds(involution_word(s.p())) <= k && lds(involution_word(s.q())) <= k;
}

/// F(p,q): fixed points of p together with fixed points of q, sorted.
inline std::vector<Label> free_points(const PairState& s) {
  std::vector<Label> out;
  std::ranges::merge(s.p().fixed_points(), s.q().fixed_points(), std::back_inserter(out));
  return out;
}

/// M(p,q) = max F(p,q), absent when both sides are fixed-point-free.
inline std::optional<Label> pivot(const PairState& s) {
  auto fp = free_points(s);
  if (fp.empty()) return std::nullopt;
  return fp.back();
}

/// f: moves the pivot, as a fixed point, to the other involution.
inline PairState toggle_f(const PairState& s) {
  auto m = pivot(s);
  if (!m) throw FUndefined();
  if (s.p().is_fixed_point(*m)) {
    return PairState(s.p().without_fixed_point(*m), s.q().with_fixed_point(*m), s.n());
  }
  return PairState(s.p().with_fixed_point(*m), s.q().without_fixed_point(*m), s.n());
}

/// f_{n,k} for odd k. The image is re-checked against B(n,k); leaving it is an
/// InvariantBreach since the longest decreasing subsequences of an odd-length
/// maximum always carry a fixed point.
inline PairState toggle_f_restricted(const PairState& s, std::size_t k) {
  if (k % 2 == 0) throw PreconditionError("f_{n,k} is only closed for odd k");
  if (!in_bounded_space(s, k)) throw PreconditionError("pair lies outside B(n,k)");
  PairState image = toggle_f(s);
  if (!in_bounded_space(image, k)) throw InvariantBreach("f_{n,k} left B(n,k)");
  return image;
}

// ---------------------------------------------------------------------------
// g: arranged n-subsets of [2n] <-> red/blue fixed-point-free involutions
// ---------------------------------------------------------------------------

/// a_1..a_n: distinct labels from [2n], order significant.
class Arrangement {
 public:
  Arrangement(std::vector<Label> chosen, std::size_t n) : chosen_(std::move(chosen)), n_(n) {
    if (chosen_.size() != n_) throw PreconditionError("arrangement must choose exactly n labels");
    auto sorted = chosen_;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end()) throw PreconditionError("arrangement repeats a label");
    if (!sorted.empty() && sorted.back().value() > 2 * n_) throw PreconditionError("arrangement label exceeds 2n");
  }

  const std::vector<Label>& chosen() const noexcept { return chosen_; }
  std::size_t n() const noexcept { return n_; }

  /// i_1 < ... < i_n, the labels not chosen.
  std::vector<Label> complement() const {
    std::vector<Label> out;
    for (std::uint32_t a = 1; a <= 2 * n_; ++a) {
      if (std::ranges::find(chosen_, Label(a)) == chosen_.end()) out.emplace_back(a);
    }
    return out;
  }

  bool operator==(const Arrangement&) const = default;

 private:
  std::vector<Label> chosen_;
  std::size_t n_;
};

enum class Color { red, blue };

struct ColoredCycle {
  TwoCycle cycle;
  Color color = Color::red;

  auto operator<=>(const ColoredCycle&) const = default;
};

/// Fixed-point-free involution on [2n] with each 2-cycle colored.
class ColoredInvolution {
 public:
  ColoredInvolution(std::vector<ColoredCycle> cycles, std::size_t n) : cycles_(std::move(cycles)), n_(n) {
    std::ranges::sort(cycles_);
    std::vector<Label> all;
    for (const auto& c : cycles_) {
      all.push_back(c.cycle.low);
      all.push_back(c.cycle.high);
    }
    std::ranges::sort(all);
    if (all != ground_set(static_cast<std::uint32_t>(2 * n_))) {
      throw PreconditionError("colored cycles must partition {1.." + std::to_string(2 * n_) + "}");
    }
  }

  const std::vector<ColoredCycle>& cycles() const noexcept { return cycles_; }
  std::size_t n() const noexcept { return n_; }

  Involution involution() const {
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& c : cycles_) pairs.emplace_back(c.cycle.low, c.cycle.high);
    return Involution::from_cycles({}, pairs);
  }

  bool operator==(const ColoredInvolution&) const = default;

 private:
  std::vector<ColoredCycle> cycles_;
  std::size_t n_;
};

/// Pairs i_j with a_j; red when i_j < a_j, blue otherwise.
inline ColoredInvolution g_forward(const Arrangement& a) {
  auto unchosen = a.complement();
  std::vector<ColoredCycle> cycles;
  cycles.reserve(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) {
    Label i = unchosen[j];
    Label c = a.chosen()[j];
    cycles.push_back(i < c ? ColoredCycle{{i, c}, Color::red} : ColoredCycle{{c, i}, Color::blue});
  }
  return ColoredInvolution(std::move(cycles), a.n());
}

/// Smaller entry of each red cycle and larger entry of each blue cycle give the
/// i_j; their partners, read in increasing i_j order, give a_j.
inline Arrangement g_inverse(const ColoredInvolution& c) {
  std::vector<std::pair<Label, Label>> by_unchosen;  // (i_j, a_j)
  by_unchosen.reserve(c.cycles().size());
  for (const auto& cc : c.cycles()) {
    if (cc.color == Color::red) {
      by_unchosen.emplace_back(cc.cycle.low, cc.cycle.high);
    } else {
      by_unchosen.emplace_back(cc.cycle.high, cc.cycle.low);
    }
  }
  std::ranges::sort(by_unchosen);
  std::vector<Label> chosen;
  chosen.reserve(by_unchosen.size());
  for (const auto& [i, a] : by_unchosen) chosen.push_back(a);
  return Arrangement(std::move(chosen), c.n());
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

struct LemmaReport {
  Involution involution;
  std::size_t lds_length = 0;
  std::size_t max_decreasing_count = 0;
  /// every maximum-length decreasing subsequence contains a fixed point
  bool all_contain_fixed_point = true;
  /// largest number of fixed points seen in one maximum-length decreasing subsequence
  std::size_t max_fixed_points_in_one = 0;

  bool lds_is_odd() const noexcept { return lds_length % 2 == 1; }
  /// The lemma only constrains odd maximum lengths.
  bool satisfied() const noexcept { return !lds_is_odd() || all_contain_fixed_point; }
};

inline LemmaReport check_lemma_fixedpoint(const Involution& v, const OracleLimits& limits = {}) {
  if (v.size() > limits.lemma_support) throw ScaleLimitError("check_lemma_fixedpoint", v.size(), limits.lemma_support);
  const auto support = v.support();
  const auto word = involution_word(v).entries();

  LemmaReport report{v};
  report.lds_length = for_each_longest_decreasing(std::span<const Label>(word), [&](const auto& positions) {
    ++report.max_decreasing_count;
    std::size_t fixed = 0;
    for (auto pos : positions) fixed += (word[pos] == support[pos]) ? 1 : 0;
    report.all_contain_fixed_point = report.all_contain_fixed_point && fixed > 0;
    report.max_fixed_points_in_one = std::max(report.max_fixed_points_in_one, fixed);
  });
  if (report.max_decreasing_count == 0) report.all_contain_fixed_point = false;  // empty word
  return report;
}

/// Fixed points of v equal the odd columns of RS(v).
inline bool check_beissinger(const Involution& v) {
  return v.fixed_points().size() == odd_columns(rs_of_involution(v));
}

// ---------------------------------------------------------------------------
// Pair space enumeration and the cancellation audit
// ---------------------------------------------------------------------------

/// Visits every element of B_n (or B(n,k) when k is given) once: by |s_p|
/// ascending, then s_p in lexicographic order, then generation order on p and q.
template <typename Visit>
void for_each_pair(std::size_t n, std::optional<std::size_t> k, Visit&& visit, const OracleLimits& limits = {}) {
  if (n > limits.pair_space) throw ScaleLimitError("enumerate_pair_space", n, limits.pair_space);
  const auto ground = ground_set(static_cast<std::uint32_t>(2 * n));
  const InvolutionFilter filter{.fixed_point_free = false, .max_lds = k};

  for (std::size_t r = 0; r <= 2 * n; ++r) {
    // lexicographic r-subsets via a selection mask with r leading ones
    std::vector<bool> mask(2 * n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<Label> sp;
      std::vector<Label> sq;
      for (std::size_t i = 0; i < 2 * n; ++i) (mask[i] ? sp : sq).push_back(ground[i]);
      auto qs = generate_involutions(sq, filter);
      for_each_involution(sp, filter, [&](const Involution& p) {
        for (const auto& q : qs) visit(PairState(p, q, n));
      });
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

inline std::vector<PairState> enumerate_pair_space(std::size_t n, std::optional<std::size_t> k = std::nullopt,
                                                   const OracleLimits& limits = {}) {
  std::vector<PairState> out;
  for_each_pair(n, k, [&](const PairState& s) { out.push_back(s); }, limits);
  return out;
}

struct AuditReport {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::uint64_t pairs = 0;
  std::uint64_t orbits = 0;
  std::uint64_t survivors = 0;

  // each counter must end at zero
  std::uint64_t nonzero_orbits = 0;      ///< s and f(s) with equal signs
  std::uint64_t not_involutive = 0;      ///< f(f(s)) != s
  std::uint64_t pivot_shifts = 0;        ///< F(p,q) changed under f
  std::uint64_t closure_failures = 0;    ///< f(s) outside the enumerated space
  std::uint64_t survivors_not_fpf = 0;   ///< pivot absent but a side has a fixed point
  std::uint64_t slice_mismatches = 0;    ///< |slice r| != C(2n,r) y_k(r) y_k(2n-r)
  std::uint64_t survivor_mismatches = 0; ///< survivors in slice r != C(2n,r) x_k(r) x_k(2n-r)

  /// lhs: signed total of the enumerated space, by slice r.
  /// rhs: survivor count, by slice r, with fixed-point-free factors.
  IdentityVerdict verdict;

  bool passed() const noexcept {
    return nonzero_orbits == 0 && not_involutive == 0 && pivot_shifts == 0 && closure_failures == 0 &&
           survivors_not_fpf == 0 && slice_mismatches == 0 && survivor_mismatches == 0 && verdict.holds;
  }
};

/// Exhaustive check that f pairs up everything in B_n (or B(n,k), odd k) into
/// zero-sum orbits and that the unpaired elements are exactly the pairs of
/// fixed-point-free involutions.
inline AuditReport signed_cancellation_audit(std::size_t n, std::optional<std::size_t> k = std::nullopt,
                                             const OracleLimits& limits = {},
                                             CountCache& cache = default_cache()) {
  if (k && *k % 2 == 0) throw PreconditionError("the cancellation audit needs an odd bound k");
  AuditReport report;
  report.n = n;
  report.k = k;

  auto space = enumerate_pair_space(n, k, limits);
  std::set<std::vector<std::int64_t>> keys;
  for (const auto& s : space) keys.insert(s.key());

  std::vector<std::uint64_t> slice_size(2 * n + 1, 0);
  std::vector<std::uint64_t> slice_survivors(2 * n + 1, 0);
  BigInt signed_total = 0;

  for (const auto& s : space) {
    ++report.pairs;
    const std::size_t r = s.p().size();
    ++slice_size[r];
    signed_total += s.sign();
    if (!pivot(s)) {
      ++report.survivors;
      ++slice_survivors[r];
      if (!s.p().is_fixed_point_free() || !s.q().is_fixed_point_free()) ++report.survivors_not_fpf;
      continue;
    }
    PairState t = toggle_f(s);
    if (s.sign() + t.sign() != 0) ++report.nonzero_orbits;
    if (toggle_f(t) != s) ++report.not_involutive;
    if (free_points(t) != free_points(s)) ++report.pivot_shifts;
    auto tk = t.key();
    if (!keys.contains(tk)) ++report.closure_failures;
    if (s.key() < tk) ++report.orbits;
  }

  auto side_factor = [&](std::size_t m) {
    return k ? cache(CountFamily::y, *k, m) : cache(CountFamily::y_unbounded, std::nullopt, m);
  };
  auto fpf_factor = [&](std::size_t m) {
    return k ? cache(CountFamily::x, *k, m) : cache(CountFamily::x_unbounded, std::nullopt, m);
  };

  auto& v = report.verdict;
  v.id = k ? IdentityId::odd_k : IdentityId::fpf_pairs;
  v.k = k;
  v.n = n;
  for (std::size_t r = 0; r <= 2 * n; ++r) {
    auto full = detail::make_term(Side::lhs, r, r % 2 == 0 ? 1 : -1, binomial(2 * n, r), side_factor(r),
                                  side_factor(2 * n - r));
    if (full.term_value != (r % 2 == 0 ? 1 : -1) * BigInt(slice_size[r])) ++report.slice_mismatches;
    v.terms.push_back(std::move(full));

    auto kept = detail::make_term(Side::rhs, r, 1, binomial(2 * n, r), fpf_factor(r), fpf_factor(2 * n - r));
    if (kept.term_value != BigInt(slice_survivors[r])) ++report.survivor_mismatches;
    v.terms.push_back(std::move(kept));
  }
  v.lhs = signed_total;
  v.rhs = report.survivors;
  v.holds = v.lhs == v.rhs && v.terms_consistent();
  return report;
}

}  // namespace sytlab
