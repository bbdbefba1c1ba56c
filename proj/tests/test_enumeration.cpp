#include <gtest/gtest.h>

#include <numeric>
#include <thread>

#include "oracles.hpp"
#include "sytlab/enumeration.hpp"

using namespace sytlab;

namespace {

struct WordStats {
  std::uint64_t fixed;
  std::size_t lis;
  std::size_t lds;
};

std::vector<WordStats> involution_stats(std::uint32_t m) {
  std::vector<WordStats> out;
  for (const auto& w : oracle::involution_words(m)) {
    out.push_back({oracle::count_fixed(w), oracle::brute_lis(w), oracle::brute_lds(w)});
  }
  return out;
}

// generate-and-filter count over involutions of 1..m
std::uint64_t oracle_count(const std::vector<WordStats>& stats, bool fpf, std::size_t max_lis, std::size_t max_lds) {
  std::uint64_t hits = 0;
  for (const auto& s : stats) {
    if (fpf && s.fixed > 0) continue;
    if (s.lis > max_lis || s.lds > max_lds) continue;
    ++hits;
  }
  return hits;
}

std::uint64_t oracle_syt_count(const std::vector<std::size_t>& parts) {
  std::uint64_t f = 0;
  oracle::for_each_syt(parts, [&](const oracle::Rows&) { ++f; });
  return f;
}

constexpr std::size_t kNoBound = 100;

}  // namespace

TEST(Partitions, Examples) {
  auto all = partitions(4);
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all.front(), Shape({4}));
  EXPECT_EQ(all[1], Shape({3, 1}));
  EXPECT_EQ(all.back(), Shape({1, 1, 1, 1}));

  auto even = partitions(4, {.max_first_part = std::nullopt, .max_parts = std::nullopt, .all_columns_even = true});
  ASSERT_EQ(even.size(), 2u);
  EXPECT_EQ(even[0], Shape({2, 2}));
  EXPECT_EQ(even[1], Shape({1, 1, 1, 1}));

  auto empty = partitions(0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0], Shape{});
}

TEST(Partitions, ConstraintsAreExactAndComplete) {
  for (std::size_t n = 0; n <= 12; ++n) {
    auto reference = oracle::all_partitions(n);
    for (std::size_t first = 1; first <= n + 1; ++first) {
      for (std::size_t rows = 1; rows <= n + 1; ++rows) {
        for (bool even : {false, true}) {
          std::size_t expected = 0;
          for (const auto& p : reference) {
            Shape s(p);
            bool cols_even = std::ranges::all_of(s.column_lengths(), [](auto c) { return c % 2 == 0; });
            if (s.first_row() <= first && s.rows() <= rows && (!even || cols_even)) ++expected;
          }
          auto got = partitions(n, {.max_first_part = first, .max_parts = rows, .all_columns_even = even});
          ASSERT_EQ(got.size(), expected) << n << " " << first << " " << rows << " " << even;
          for (const auto& s : got) ASSERT_EQ(s.size(), n);
        }
      }
    }
  }
}

TEST(HookLength, Examples) {
  EXPECT_EQ(hook_length_count(Shape({5})), 1);
  EXPECT_EQ(hook_length_count(Shape({2, 2})), 2);
  EXPECT_EQ(hook_length_count(Shape({2, 1})), 2);
  EXPECT_EQ(hook_length_count(Shape{}), 1);
}

TEST(HookLength, MatchesExhaustiveGeneration) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& p : oracle::all_partitions(n)) {
      ASSERT_EQ(hook_length_count(Shape(p)), oracle_syt_count(p));
    }
  }
}

TEST(CountYK, Examples) {
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(count_y_k(1, n), 1);
  EXPECT_EQ(count_y_k(3, 2), 2);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(count_y_k(k, 0), 1);
  // y_3(0..4) = 1, 1, 2, 4, 9
  std::vector<int> expected{1, 1, 2, 4, 9};
  for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(count_y_k(3, n), expected[n]);
}

TEST(CountUK, Examples) {
  EXPECT_EQ(count_u_k(2, 3), 5);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(count_u_k(n, n), factorial(n));
  EXPECT_EQ(count_u_k(1, 3), 1);
}

TEST(BruteForceUK, ExamplesAndLimit) {
  EXPECT_EQ(brute_force_u_k(2, 3), 5);
  EXPECT_EQ(brute_force_u_k(3, 0), 1);
  EXPECT_EQ(brute_force_u_k(1, 4), 1);
  EXPECT_THROW(brute_force_u_k(2, 9), ScaleLimitError);
  try {
    brute_force_u_k(2, 9);
  } catch (const ScaleLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("oracle scale exceeded"), std::string::npos);
  }
  EXPECT_NO_THROW(brute_force_u_k(2, 9, {.permutations = 9}));
}

TEST(CountInvolutions, Examples) {
  EXPECT_EQ(count_involutions(0), 1);
  EXPECT_EQ(count_involutions(3), 4);
  EXPECT_EQ(count_involutions(4), 10);
}

TEST(CountFpf, Examples) {
  EXPECT_EQ(count_fpf(3), 0);
  EXPECT_EQ(count_fpf(4), 3);
  EXPECT_EQ(count_fpf(0), 1);
}

TEST(CountXK, Examples) {
  EXPECT_EQ(count_x_k(2, 4), 2);
  for (std::size_t m = 0; m <= 6; ++m) EXPECT_EQ(count_x_k(2, 2 * m), catalan(m));
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t r = 0; r <= 10; ++r) EXPECT_EQ(count_x_k(2 * m + 1, r), count_x_k(2 * m, r));
  }
  // the empty involution is fixed-point-free with LDS 0
  EXPECT_EQ(count_x_k(1, 0), 1);
  for (std::size_t r = 1; r <= 10; ++r) EXPECT_EQ(count_x_k(1, r), 0);
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(4), 14);
  // C_n counts SYT with every column of length two on 2n boxes
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::size_t> parts = n == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{n, n};
    EXPECT_EQ(catalan(n), oracle_syt_count(parts));
  }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Oracles, FormulasMatchGenerateAndFilter) {
  for (std::uint32_t m = 0; m <= 10; ++m) {
    const auto stats = involution_stats(m);
    ASSERT_EQ(count_involutions(m), oracle_count(stats, false, kNoBound, kNoBound)) << m;
    ASSERT_EQ(count_fpf(m), oracle_count(stats, true, kNoBound, kNoBound)) << m;
    for (std::size_t k = 1; k <= 6; ++k) {
      ASSERT_EQ(count_y_k(k, m), oracle_count(stats, false, k, kNoBound)) << k << " " << m;
      ASSERT_EQ(count_x_k(k, m), oracle_count(stats, true, kNoBound, k)) << k << " " << m;
      ASSERT_EQ(count_x_k_increasing(k, m), oracle_count(stats, true, k, kNoBound)) << k << " " << m;
    }
  }
}

TEST(Oracles, UKMatchesBruteForce) {
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t n = 0; n <= 8; ++n) ASSERT_EQ(count_u_k(k, n), brute_force_u_k(k, n)) << k << " " << n;
  }
}

TEST(GenerateInvolutions, Examples) {
  EXPECT_EQ(generate_involutions(labels({1, 2})).size(), 2u);
  EXPECT_EQ(generate_involutions(labels({3, 5, 8, 9}), {.fixed_point_free = true, .max_lds = std::nullopt}).size(), 3u);
  auto empty = generate_involutions({});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
}

TEST(GenerateInvolutions, OrderIsDeterministicAndStartsWithIdentity) {
  auto all = generate_involutions(labels({1, 2, 3}));
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0], Involution::identity(labels({1, 2, 3})));
  EXPECT_EQ(all[1], Involution::from_cycles(labels({1}), {{Label(2), Label(3)}}));
  EXPECT_EQ(all[2], Involution::from_cycles(labels({3}), {{Label(1), Label(2)}}));
  EXPECT_EQ(all[3], Involution::from_cycles(labels({2}), {{Label(1), Label(3)}}));
}

TEST(GenerateInvolutions, StreamLengthsMatchCounts) {
  for (std::uint32_t m = 0; m <= 9; ++m) {
    auto support = ground_set(m);
    ASSERT_EQ(generate_involutions(support).size(), count_involutions(m));
    ASSERT_EQ(generate_involutions(support, {.fixed_point_free = true, .max_lds = std::nullopt}).size(), count_fpf(m));
    for (std::size_t k = 1; k <= 4; ++k) {
      ASSERT_EQ(generate_involutions(support, {.max_lds = k}).size(), count_y_k(k, m));
      ASSERT_EQ(generate_involutions(support, {.fixed_point_free = true, .max_lds = k}).size(), count_x_k(k, m));
    }
  }
}

TEST(Properties, TelescopingAndMonotonicity) {
  for (std::size_t n = 0; n <= 8; ++n) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += count_u_k(k, n) - count_u_k(k - 1, n);
    if (n > 0) {
      EXPECT_EQ(total, factorial(n));
    }
    BigInt shapes = 0;
    for (const auto& s : partitions(n)) shapes += hook_length_count(s);
    EXPECT_EQ(count_involutions(n), shapes);
  }
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t k = 1; k <= 12; ++k) {
      EXPECT_LE(count_y_k(k, n), count_y_k(k + 1, n));
      if (k >= n) {
        EXPECT_EQ(count_y_k(k, n), count_y_k(k + 1, n));
      }
    }
    for (std::size_t k = 1; k <= 6; ++k) {
      if (n % 2 == 1) {
        EXPECT_EQ(count_x_k(k, n), 0);
      }
    }
  }
}

TEST(CountQuery, ValidatesBound) {
  EXPECT_THROW((CountQuery{CountFamily::y, std::nullopt, 3}.validate()), PreconditionError);
  EXPECT_THROW((CountQuery{CountFamily::catalan, 2, 3}.validate()), PreconditionError);
  EXPECT_THROW((CountQuery{CountFamily::u, 0, 3}.validate()), PreconditionError);
  EXPECT_NO_THROW((CountQuery{CountFamily::x, 2, 3}.validate()));
  EXPECT_EQ(parse_family("y_unbounded"), CountFamily::y_unbounded);
  EXPECT_FALSE(parse_family("z").has_value());
}

TEST(CountCache, ConcurrentReadersAgree) {
  CountCache cache;
  std::vector<std::thread> workers;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      BigInt acc = 0;
      for (std::size_t n = 0; n <= 14; ++n) acc += cache(CountFamily::y, 3, n) + cache(CountFamily::u, 2, n);
      results[t] = acc;
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
  EXPECT_EQ(cache.size(), 30u);
  EXPECT_EQ(*cache.find({CountFamily::y, 3, 4}), 9);
}
