#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "brute_force_oracle.hpp"
#include "cubic/representations.hpp"
#include "cubic/serialize.hpp"
#include "generators.hpp"

namespace cubic {
namespace {

using IT = Triple<Integer>;

TEST(SearchRepresentations, SmallValues) {
  const auto table = search_representations(30, 10);
  ASSERT_EQ(table.entries.size(), 31U);
  // Scan order starts at -bound_box, so among the permutations of (1,0,0)
  // the recorded witness is (0,0,1).
  ASSERT_TRUE(table.at(1).has_value());
  EXPECT_EQ(table.at(1)->triple(), IT(0, 0, 1));
  ASSERT_TRUE(table.at(2).has_value());
  EXPECT_EQ(table.at(2)->triple(), IT(0, 1, 1));
  EXPECT_EQ(cubic_norm(IT(1, 1, 0)), Integer(2));
  EXPECT_FALSE(table.at(3).has_value());
  ASSERT_TRUE(table.at(0).has_value());
  EXPECT_EQ(table.at(0)->triple(), IT(-10, -10, -10));
}

TEST(SearchRepresentations, MatchesBruteForce) {
  for (const auto& [max_n, box] : std::vector<std::pair<int, int>>{{30, 10}, {60, 4}, {5, 0}, {0, 3}, {100, 7}}) {
    const auto table = search_representations(max_n, box);
    const auto oracle = testing::brute_force_witnesses(max_n, box);
    for (int n = 0; n <= max_n; ++n) {
      const auto it = oracle.find(n);
      const auto& entry = table.at(static_cast<std::size_t>(n));
      ASSERT_EQ(entry.has_value(), it != oracle.end()) << "n=" << n;
      if (!entry) continue;
      ASSERT_EQ(entry->triple(), IT(it->second[0], it->second[1], it->second[2])) << "n=" << n;
      ASSERT_EQ(entry->n(), Integer(n));
      ASSERT_EQ(cubic_norm(entry->triple()), Integer(n));
    }
  }
}

TEST(SearchRepresentations, Deterministic) {
  EXPECT_EQ(search_representations(50, 6), search_representations(50, 6));
}

TEST(SearchRepresentations, RejectsBadBounds) {
  EXPECT_THROW(search_representations(-1, 3), std::invalid_argument);
  EXPECT_THROW(search_representations(3, -1), std::invalid_argument);
  EXPECT_THROW(search_representations(3, kMaxSearchBox + 1), std::invalid_argument);
}

TEST(SearchRepresentations, JsonRoundTrip) {
  const auto table = search_representations(30, 10);
  const Json j = table_to_json(table);
  EXPECT_EQ(j["entries"]["1"], Json::array({0, 0, 1}));
  EXPECT_TRUE(j["entries"]["3"].is_null());
  EXPECT_EQ(j["bound_n"], 30);
  EXPECT_EQ(table_from_json(Json::parse(j.dump())), table);
}

TEST(Witness, Validation) {
  EXPECT_NO_THROW(Witness(4, IT(1, 2, 1)));
  EXPECT_THROW(Witness(5, IT(1, 2, 1)), std::invalid_argument);
  EXPECT_EQ(Witness(IT(2, 1, 0)).n(), Integer(9));
}

TEST(ComposeWitnesses, Examples) {
  const Witness two(2, IT(1, 1, 0));
  const Witness four = compose_witnesses(two, two);
  EXPECT_EQ(four.n(), Integer(4));
  EXPECT_EQ(four.triple(), IT(1, 2, 1));

  const Witness one(1, IT(1, 0, 0));
  const Witness w(IT(2, 1, 1));
  EXPECT_EQ(compose_witnesses(one, w), w);

  const Witness nine(9, IT(2, 1, 0));
  const Witness eighteen = compose_witnesses(two, nine);
  EXPECT_EQ(eighteen.n(), Integer(18));
  EXPECT_EQ(cubic_norm(eighteen.triple()), Integer(18));
}

TEST(ComposeWitnesses, ClosureOnTable) {
  const auto table = search_representations(30, 10);
  std::vector<Witness> present;
  for (const auto& e : table.entries) {
    if (e && !e->n().is_zero()) present.push_back(*e);
  }
  testing::Gen gen(60);
  for (int i = 0; i < 200; ++i) {
    const auto& w1 = present[static_cast<std::size_t>(gen.small(0, static_cast<std::int64_t>(present.size()) - 1))];
    const auto& w2 = present[static_cast<std::size_t>(gen.small(0, static_cast<std::int64_t>(present.size()) - 1))];
    const Witness w = compose_witnesses(w1, w2);
    ASSERT_EQ(w.n(), w1.n() * w2.n());
    ASSERT_EQ(cubic_norm(w.triple()), w.n());
  }
}

TEST(ZeroDivisorScan, ContainsFactTwoPatterns) {
  const auto pairs = zero_divisor_scan(1);
  auto has = [&](const IT& a, const IT& b) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
  };
  EXPECT_TRUE(has(IT(1, -1, 0), IT(1, 1, 1)));
  EXPECT_TRUE(has(IT(1, 1, 1), IT(0, 1, -1)));
  for (const auto& [a, b] : pairs) {
    ASSERT_TRUE(zero_divisor_pair_condition(a, b));
    auto generic = [](const IT& t) { return !t.trace().is_zero() && !t.is_diagonal(); };
    ASSERT_FALSE(generic(a) && generic(b));
  }
  EXPECT_THROW(zero_divisor_scan(0), std::invalid_argument);
}

TEST(ZeroDivisorScan, EqualsClassificationPrediction) {
  const int bound = 2;
  const auto pairs = zero_divisor_scan(bound);
  const std::set<std::string> scanned = [&] {
    std::set<std::string> s;
    for (const auto& [a, b] : pairs) s.insert(to_string(a) + "|" + to_string(b));
    return s;
  }();
  ASSERT_EQ(scanned.size(), pairs.size());

  std::set<std::string> predicted;
  std::set<std::string> by_condition;
  std::vector<IT> box;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      for (int z = -bound; z <= bound; ++z) {
        if (x != 0 || y != 0 || z != 0) box.emplace_back(x, y, z);
      }
    }
  }
  for (const auto& a : box) {
    const auto info = classify_zero_divisor(a);
    for (const auto& b : box) {
      if (info.annihilator.contains(b)) predicted.insert(to_string(a) + "|" + to_string(b));
      if (zero_divisor_pair_condition(a, b)) by_condition.insert(to_string(a) + "|" + to_string(b));
    }
  }
  EXPECT_EQ(scanned, predicted);
  EXPECT_EQ(scanned, by_condition);
}

}  // namespace
}  // namespace cubic
