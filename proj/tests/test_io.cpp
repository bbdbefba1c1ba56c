#include <gtest/gtest.h>

#include <map>
#include <random>

#include "json.hpp"
#include "sytlab/cache_file.hpp"
#include "sytlab/records.hpp"

using namespace sytlab;

TEST(CycleNotation, ParsesSingleDigitGroups) {
  auto v = parse_cycles("(31)(62)(5)");
  EXPECT_EQ(v.fixed_points(), labels({5}));
  ASSERT_EQ(v.two_cycles().size(), 2u);
  EXPECT_EQ(v.two_cycles()[0], (TwoCycle{Label(1), Label(3)}));
  EXPECT_EQ(v.two_cycles()[1], (TwoCycle{Label(2), Label(6)}));
  EXPECT_TRUE(parse_cycles("").empty());
  EXPECT_TRUE(parse_cycles("()").empty());
  EXPECT_EQ(parse_cycles(" (7) (84) "), parse_cycles("(7)(84)"));
}

TEST(CycleNotation, CommasForWideLabels) {
  auto v = parse_cycles("(12,3)(4)");
  EXPECT_EQ(v(Label(12)), Label(3));
  EXPECT_EQ(v.fixed_points(), labels({4}));
  EXPECT_EQ(format_cycles(v), "(12,3),(4)");
  EXPECT_EQ(parse_cycles("(12,3),(4)"), v);
  // without commas "(12)" is the 2-cycle on 1 and 2
  EXPECT_EQ(parse_cycles("(12)")(Label(1)), Label(2));
  auto fixed = parse_cycles("(12),(3)");
  EXPECT_EQ(fixed.fixed_points(), labels({3, 12}));
  EXPECT_EQ(format_cycles(fixed), "(3),(12)");
}

TEST(CycleNotation, Errors) {
  EXPECT_THROW(parse_cycles("(123)"), ParseError);
  EXPECT_THROW(parse_cycles("(31)(1)"), ParseError);
  EXPECT_THROW(parse_cycles("(33)"), ParseError);
  EXPECT_THROW(parse_cycles("(3"), ParseError);
  EXPECT_THROW(parse_cycles("3)"), ParseError);
  EXPECT_THROW(parse_cycles("(0)"), ParseError);
  EXPECT_THROW(parse_cycles("(a)"), ParseError);
}

TEST(CycleNotation, FormatParseRoundTrip) {
  for (std::uint32_t m = 0; m <= 12; m += 3) {
    for (const auto& v : generate_involutions(ground_set(m))) ASSERT_EQ(parse_cycles(format_cycles(v)), v);
  }
}

TEST(WordNotation, ParsesAndRejects) {
  EXPECT_EQ(parse_word("3 6 1 5 2"), parse_cycles("(31)(62)(5)"));
  EXPECT_EQ(parse_word("1 2 3"), Involution::identity(labels({1, 2, 3})));
  EXPECT_THROW(parse_word("2 1 3 4 5 6 5"), ParseError);
  EXPECT_THROW(parse_word("2 3 1"), ParseError);
  EXPECT_THROW(parse_word("1 x"), ParseError);
}

TEST(Range, Grammar) {
  EXPECT_EQ(parse_range("3"), (std::vector<std::size_t>{3}));
  EXPECT_EQ(parse_range("0..4"), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  EXPECT_THROW(parse_range("4..2"), ParseError);
  EXPECT_THROW(parse_range("a..2"), ParseError);
  EXPECT_THROW(parse_range(""), ParseError);
}

TEST(CacheFile, KeysRoundTrip) {
  CountQuery q{CountFamily::x, 3, 10};
  EXPECT_EQ(cache_key(q), "x/3/10");
  EXPECT_EQ(parse_cache_key("x/3/10"), q);
  EXPECT_EQ(parse_cache_key("catalan/-/4"), (CountQuery{CountFamily::catalan, std::nullopt, 4}));
  EXPECT_THROW(parse_cache_key("x/-/4"), ParseError);
  EXPECT_THROW(parse_cache_key("z/1/4"), ParseError);
  EXPECT_THROW(parse_cache_key("y/1"), ParseError);
}

TEST(CacheFile, SaveLoadSaveIsByteIdentical) {
  CountCache cache;
  for (std::size_t n = 0; n <= 12; ++n) {
    cache(CountFamily::y, 3, n);
    cache(CountFamily::u, 2, n);
    cache(CountFamily::x_unbounded, std::nullopt, n);
  }
  cache(CountFamily::catalan, std::nullopt, 40);  // larger than 64 bits
  auto first = serialize_cache(cache);
  auto reloaded = deserialize_cache(first);
  EXPECT_EQ(reloaded.snapshot(), cache.snapshot());
  EXPECT_EQ(serialize_cache(reloaded), first);

  auto doc = nlohmann::json::parse(first);
  EXPECT_EQ(doc["version"], kCacheVersion);
  EXPECT_TRUE(doc["entries"]["y/3/4"].is_string());
  EXPECT_EQ(doc["entries"]["y/3/4"], "9");
  EXPECT_TRUE(find_cache_mismatches(reloaded).empty());
}

TEST(CacheFile, DetectsPoisonedEntry) {
  CountCache cache;
  cache(CountFamily::y, 3, 4);
  cache(CountFamily::catalan, std::nullopt, 3);
  auto doc = nlohmann::json::parse(serialize_cache(cache));
  doc["entries"]["y/3/4"] = "10";
  auto poisoned = deserialize_cache(doc.dump());
  auto bad = find_cache_mismatches(poisoned);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(cache_key(bad[0]), "y/3/4");
}

TEST(CacheFile, RejectsMalformedDocuments) {
  EXPECT_THROW(deserialize_cache("not json"), ParseError);
  EXPECT_THROW(deserialize_cache(R"({"format":"other","version":1,"entries":{}})"), ParseError);
  EXPECT_THROW(deserialize_cache(R"({"format":"sytlab-count-cache","version":2,"entries":{}})"), ParseError);
  EXPECT_THROW(deserialize_cache(R"({"format":"sytlab-count-cache","version":1,"entries":{"y/3/4":9}})"), ParseError);
  EXPECT_THROW(deserialize_cache(R"({"format":"sytlab-count-cache","version":1,"entries":{"y/3/4":"-9"}})"),
               ParseError);
  EXPECT_THROW(deserialize_cache(R"({"format":"sytlab-count-cache","version":1,"entries":{"y/3/4":"9x"}})"),
               ParseError);
}

namespace {

// every cell value of a record, read back from each rendering
std::vector<std::string> cells_from_json(const std::string& text) {
  std::vector<std::string> out;
  auto doc = nlohmann::ordered_json::parse(text);
  for (const auto& [name, rows] : doc["tables"].items()) {
    for (const auto& row : rows) {
      for (const auto& [col, value] : row.items()) out.push_back(value.get<std::string>());
    }
  }
  return out;
}

std::vector<std::string> cells_from_csv(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      header = true;
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    std::string cell;
    std::istringstream fields(line);
    while (std::getline(fields, cell, ',')) out.push_back(cell);
  }
  return out;
}

std::vector<std::string> cells_of(const OutputRecord& record) {
  std::vector<std::string> out;
  for (const auto& t : record.tables) {
    for (const auto& row : t.rows) out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

TEST(Output, FormatsCarryIdenticalValues) {
  CountCache cache;
  std::vector<OutputRecord> records;
  records.push_back(count_record({CountFamily::y, 3, 0}, parse_range("0..12"), cache));
  records.push_back(verdict_record({verify_corollary_k3(3, cache), verify_odd_k(5, 4, cache)}));
  records.push_back(audit_record(signed_cancellation_audit(2, 3, {}, cache)));
  records.push_back(g_record(Arrangement(labels({3, 1}), 2), true));
  for (const auto& r : records) {
    auto expected = cells_of(r);
    EXPECT_EQ(cells_from_json(render(r, OutputFormat::json)), expected);
    EXPECT_EQ(cells_from_csv(render(r, OutputFormat::csv)), expected);
    auto table = render(r, OutputFormat::table);
    for (const auto& cell : expected) EXPECT_NE(table.find(cell), std::string::npos) << cell;
  }
}

TEST(Output, CountRecordValues) {
  CountCache cache;
  auto r = count_record({CountFamily::y, 3, 0}, parse_range("0..4"), cache);
  ASSERT_EQ(r.tables.size(), 1u);
  std::vector<std::string> values;
  for (const auto& row : r.tables[0].rows) values.push_back(row[3]);
  EXPECT_EQ(values, (std::vector<std::string>{"1", "1", "2", "4", "9"}));
}

TEST(Output, RskRecordForWorkedExample) {
  auto r = rsk_record(parse_cycles("(31)(62)(5)"));
  auto stats = r.tables.back();
  ASSERT_EQ(stats.name, "statistics");
  // word 3 6 1 5 2: LIS 2 (e.g. 3 6), LDS 3 (6 5 2); one fixed point
  EXPECT_EQ(stats.rows[0][0], "[2,2,1]");
  EXPECT_EQ(stats.rows[0][1], "2");
  EXPECT_EQ(stats.rows[0][2], "3");
  EXPECT_EQ(stats.rows[0][5], "1");
  EXPECT_EQ(stats.rows[0][6], "1");
  EXPECT_EQ(stats.rows[0][7], "true");
}

TEST(Output, CsvEscapesSeparators) {
  OutputRecord r;
  r.table("t", {"a"}).add({"x,y"});
  EXPECT_NE(render(r, OutputFormat::csv).find("\"x,y\""), std::string::npos);
}
