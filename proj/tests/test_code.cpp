#include "ptd/io.hpp"

#include <set>

#include "catch2/catch_amalgamated.hpp"

using namespace ptd;

TEST_CASE("linear code basics") {
  auto f2 = make_field(2);
  LinearCode c(FqMatrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}}));
  CHECK(c.length() == 3);
  CHECK(c.dimension() == 2);
  CHECK(c.word_count() == 4);
  CHECK(c.weight_enumerator() == std::vector<long long>({1, 0, 3, 0}));
  CHECK(c.minimum_weight() == 2);
  CHECK(c.words_of_weight(2).size() == 3);
  CHECK(c.words_of_weight(1).empty());
  CHECK(c.contains({1, 0, 1}));
  CHECK(c.contains({0, 0, 0}));
  CHECK_FALSE(c.contains({1, 0, 0}));
  CHECK_THROWS_AS(c.contains({1, 0}), error);

  // rank-deficient and misshapen generators are rejected
  CHECK_THROWS_AS(LinearCode(FqMatrix::from_rows(f2, {{1, 1, 0}, {1, 1, 0}})),
                  error);
  CHECK_THROWS_AS(LinearCode(FqMatrix::from_rows(f2, {{1, 1}, {0, 1}, {1, 0}})),
                  error);
}

TEST_CASE("support helpers") {
  CHECK(support({0, 2, 0, 1, 2}) == std::vector<int>({1, 3, 4}));
  CHECK(entries_equal({0, 2, 0, 1, 2}, 2) == std::vector<int>({1, 4}));
  CHECK(entries_equal({0, 2, 0, 1, 2}, 1) == std::vector<int>({3}));
  CHECK(support({0, 0}).empty());
}

TEST_CASE("binary Golay code") {
  LinearCode c = golay_code(2);
  CHECK(c.length() == 24);
  CHECK(c.dimension() == 12);
  CHECK(c.minimum_weight() == 8);
  const auto& wt = c.weight_enumerator();
  CHECK(wt[0] == 1);
  CHECK(wt[8] == 759);
  CHECK(wt[12] == 2576);
  CHECK(wt[16] == 759);
  CHECK(wt[24] == 1);
  long long total = 0;
  for (long long n : wt) total += n;
  CHECK(total == 4096);
  CHECK(c.contains(std::vector<int>(24, 1)));
}

TEST_CASE("octads form a Steiner system S(5,8,24)") {
  LinearCode c = golay_code(2);
  auto octads = c.words_of_weight(8);
  REQUIRE(octads.size() == 759);
  // every 5-set of coordinates lies in exactly one octad
  std::set<std::vector<int>> seen;
  for (const auto& w : octads) {
    std::vector<int> s = support(w);
    REQUIRE(s.size() == 8);
    std::vector<int> choose(5);
    // enumerate the 56 5-subsets of the support
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int cc = b + 1; cc < 8; ++cc)
          for (int d = cc + 1; d < 8; ++d)
            for (int e = d + 1; e < 8; ++e) {
              choose = {s[a], s[b], s[cc], s[d], s[e]};
              auto [it, fresh] = seen.insert(choose);
              REQUIRE(fresh);
            }
  }
  CHECK(seen.size() == 42504u);  // C(24,5)
}

TEST_CASE("ternary Golay code") {
  LinearCode c = golay_code(3);
  CHECK(c.length() == 12);
  CHECK(c.dimension() == 6);
  CHECK(c.minimum_weight() == 6);
  const auto& wt = c.weight_enumerator();
  CHECK(wt[0] == 1);
  CHECK(wt[6] == 264);
  CHECK(wt[9] == 440);
  CHECK(wt[12] == 24);
  CHECK(c.contains(std::vector<int>(12, 1)));
  CHECK(c.contains(std::vector<int>(12, 2)));

  auto full = c.words_of_weight(12);
  REQUIRE(full.size() == 24);
  int skipped = 0;
  for (const auto& w : full) {
    if (w == std::vector<int>(12, 1) || w == std::vector<int>(12, 2)) {
      ++skipped;
      continue;
    }
    CHECK(entries_equal(w, 1).size() == 6);
    CHECK(entries_equal(w, 2).size() == 6);
  }
  CHECK(skipped == 2);
}

TEST_CASE("golay_code rejects other characteristics") {
  CHECK_THROWS_AS(golay_code(5), error);
}
