#include "catch2/catch_amalgamated.hpp"
#include "ptd/constructions.hpp"
#include "ptd/io.hpp"
#include "ptd/search.hpp"

using namespace ptd;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("search preconditions") {
  REQUIRE_THROWS_WITH(search_small(symmetric_group(21), 3),
                      ContainsSubstring("degree exceeds 20"));
  REQUIRE_THROWS_WITH(search_small(symmetric_group(8), 2),
                      ContainsSubstring("3 <= k"));
  REQUIRE_THROWS_WITH(search_small(symmetric_group(8), 5),
                      ContainsSubstring("3 <= k"));
}

TEST_CASE("symmetric groups have no non-trivial hits") {
  for (int v = 6; v <= 8; ++v) {
    Group g = symmetric_group(v);
    for (int k = 3; 2 * k <= v; ++k) {
      INFO("Sym(" << v << "), k=" << k);
      REQUIRE(search_small(g, k).empty());
    }
  }
}

TEST_CASE("the linear fractional group of degree eight finds two affine spaces") {
  // PSL(2,7) splits the 70 four-subsets of its eight points into orbits of
  // sizes 14 + 14 + 42.  Both 14-orbits are invariant affine-space structures:
  // each is a 2-(8,4,3) design (a copy of AG(3,2)), so the search reports two
  // hits with identical parameters.  AGL(3,2) fuses one of them away, which is
  // why the full affine group reports a single hit below.
  Group psl27 = load_group("psl27_deg8.grp");
  REQUIRE(search_small(psl27, 3).empty());
  auto hits = search_small(psl27, 4);
  REQUIRE(hits.size() == 2);
  REQUIRE(hits[0].representative == std::vector<int>{0, 1, 2, 3});
  REQUIRE(hits[1].representative == std::vector<int>{0, 1, 2, 6});
  for (const auto& h : hits) {
    REQUIRE(h.degree == 8);
    REQUIRE(h.k == 4);
    REQUIRE(h.params.v == 8);
    REQUIRE(h.params.b == 14);
    REQUIRE(h.params.lambda == 3);
    REQUIRE(h.params.mu == 2);
    REQUIRE(h.report.verdict);
    REQUIRE(h.report.method == "brute");
  }

  auto ranged = search_small(psl27, 3, 4);
  REQUIRE(ranged.size() == 2);
}

TEST_CASE("the full affine group finds the same design") {
  auto hits = search_small(agl_group(3, 2), 3, 4);
  REQUIRE(hits.size() == 1);
  REQUIRE(hits.front().k == 4);
  REQUIRE(hits.front().params.b == 14);
  REQUIRE(hits.front().params.lambda == 3);
}

TEST_CASE("the Fano plane is the unique hit at degree seven") {
  auto hits = search_small(psl_group(3, 2), 3);
  REQUIRE(hits.size() == 1);
  REQUIRE(hits.front().params.v == 7);
  REQUIRE(hits.front().params.b == 7);
  REQUIRE(hits.front().params.lambda == 1);
}

TEST_CASE("the line design is found at degree fifteen") {
  auto hits = search_small(psl_group(4, 2), 3);
  REQUIRE(hits.size() == 1);
  REQUIRE(hits.front().params.b == 35);
  REQUIRE(hits.front().params.lambda == 1);
  REQUIRE(hits.front().params.mu == 1);
}

TEST_CASE("the affine plane of order four is found") {
  auto f16 = make_field(2, 4);
  auto hits = search_small(agammal1(f16, "AGammaL(1,16)"), 4);
  REQUIRE(hits.size() == 1);
  REQUIRE(hits.front().params.v == 16);
  REQUIRE(hits.front().params.b == 20);
  REQUIRE(hits.front().params.lambda == 1);
  REQUIRE(hits.front().group_label == "AGammaL(1,16)");
}

TEST_CASE("the Hadamard design is the unique hexad hit for the Mathieu group") {
  Group m11 = load_group("m11_deg12.grp");
  auto hits = search_small(m11, 3, 6);
  REQUIRE(hits.size() == 1);
  const auto& h = hits.front();
  REQUIRE(h.k == 6);
  REQUIRE(h.params.v == 12);
  REQUIRE(h.params.b == 22);
  REQUIRE(h.params.lambda == 5);
  REQUIRE(h.params.mu == 3);
  REQUIRE(h.report.point_pairs == 1);
  REQUIRE(h.report.flags == 1);
  REQUIRE(h.report.antiflags == 1);
  REQUIRE(h.report.intersecting_block_pairs == 1);
  REQUIRE(h.report.disjoint_block_pairs == 1);
}

TEST_CASE("the Mathieu group on eleven letters has no hits") {
  Group m11 = load_group("m11_deg11.grp");
  REQUIRE(search_small(m11, 3, 5).empty());
}
