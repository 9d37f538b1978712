#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ptd/group.hpp"
#include "ptd/linalg.hpp"

using ptd::FqMatrix;
using ptd::GF;
using ptd::Subspace;

namespace {

// permutation of GF(q)^d induced by x -> x*M
ptd::Permutation vector_perm(const FqMatrix& m) {
  const GF& f = m.field();
  int n = 1;
  for (int i = 0; i < m.rows(); ++i) n *= f.size();
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x)
    img[x] = ptd::vec_to_index(f, m.apply(ptd::index_to_vec(f, m.rows(), x)));
  return ptd::Permutation(img);
}

ptd::Group matrix_group(const std::vector<FqMatrix>& mats) {
  std::vector<ptd::Permutation> gens;
  for (const auto& m : mats) gens.push_back(vector_perm(m));
  return ptd::Group(gens.at(0).degree(), gens);
}

}  // namespace

TEST_CASE("vector index encoding is little-endian base q") {
  GF f(3);
  CHECK(ptd::vec_to_index(f, {2, 1, 0}) == 5);
  CHECK(ptd::vec_to_index(f, {0, 0, 2}) == 18);
  CHECK(ptd::index_to_vec(f, 3, 5) == std::vector<int>{2, 1, 0});
  for (int i = 0; i < 27; ++i)
    CHECK(ptd::vec_to_index(f, ptd::index_to_vec(f, 3, i)) == i);
}

TEST_CASE("matrix product agrees with successive application") {
  auto f = ptd::make_field(5);
  auto m = FqMatrix::from_rows(f, {{1, 2}, {3, 4}});
  auto n = FqMatrix::from_rows(f, {{0, 1}, {2, 3}});
  auto mn = m * n;
  for (int x = 0; x < 25; ++x) {
    auto v = ptd::index_to_vec(*f, 2, x);
    CHECK(mn.apply(v) == n.apply(m.apply(v)));
  }
}

TEST_CASE("inverse and singularity") {
  auto f = ptd::make_field(2, 2);
  auto m = FqMatrix::from_rows(f, {{1, 2}, {3, 0}});  // det = -2*3 = 1
  auto mi = m.inverse();
  CHECK(m * mi == FqMatrix::identity(f, 2));
  CHECK(mi * m == FqMatrix::identity(f, 2));
  auto sing = FqMatrix::from_rows(f, {{1, 2}, {2, 3}});  // row2 = eps*row1
  CHECK(sing.rank() == 1);
  CHECK_THROWS_AS(sing.inverse(), ptd::error);
}

TEST_CASE("row reduction reaches reduced echelon form") {
  auto f = ptd::make_field(3);
  auto m = FqMatrix::from_rows(f, {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}});
  m.row_reduce();
  // full rank: must be the identity
  CHECK(m == FqMatrix::identity(f, 3));
}

TEST_CASE("span canonicalization is basis independent") {
  GF f(2, 2);
  auto a = ptd::span_of(f, {{1, 0, 2}, {0, 1, 1}});
  auto b = ptd::span_of(f, {{0, 1, 1}, {1, 1, 3}});  // row1+row2, swapped
  CHECK(a == b);
  CHECK(a.dim() == 2);
  auto c = ptd::span_of(f, {{1, 0, 2}, {2, 0, 3}, {3, 0, 1}});  // all multiples
  CHECK(c.dim() == 1);
  CHECK(c.basis[0] == std::vector<int>{1, 0, 2});
}

TEST_CASE("subspace counts match Gaussian binomials") {
  struct Case {
    int d, k, q;
    long long expect;
  };
  for (auto [d, k, q, expect] : std::vector<Case>{{4, 1, 2, 15},
                                                  {4, 2, 2, 35},
                                                  {4, 3, 2, 15},
                                                  {3, 1, 3, 13},
                                                  {3, 2, 3, 13},
                                                  {2, 1, 4, 5},
                                                  {4, 1, 3, 40},
                                                  {4, 2, 3, 130},
                                                  {3, 1, 4, 21},
                                                  {3, 2, 4, 21},
                                                  {5, 2, 2, 155}}) {
    CHECK(ptd::gaussian_binomial(d, k, q) == expect);
    int p = q, e = 1;
    if (q == 4) p = 2, e = 2;
    auto subs = ptd::all_subspaces(ptd::make_field(p, e), d, k);
    INFO("d=" << d << " k=" << k << " q=" << q);
    CHECK((long long)subs.size() == expect);
    CHECK(std::set<Subspace>(subs.begin(), subs.end()).size() == subs.size());
    for (const auto& s : subs) CHECK(s.dim() == k);
  }
}

TEST_CASE("matrix image of a subspace has the same dimension") {
  auto f = ptd::make_field(2);
  auto m = FqMatrix::from_rows(f, {{1, 1, 0}, {0, 1, 0}, {1, 0, 1}});
  REQUIRE(m.rank() == 3);
  for (const auto& s : ptd::all_subspaces(f, 3, 2)) {
    auto img = ptd::apply_to_subspace(*f, s, m);
    CHECK(img.dim() == 2);
  }
}

TEST_CASE("special and general linear group orders") {
  CHECK(matrix_group(ptd::sl_generators(ptd::make_field(2), 2)).order() == 6);
  CHECK(matrix_group(ptd::sl_generators(ptd::make_field(2, 2), 2)).order() == 60);
  CHECK(matrix_group(ptd::sl_generators(ptd::make_field(3), 2)).order() == 24);
  CHECK(matrix_group(ptd::gl_generators(ptd::make_field(3), 2)).order() == 48);
  CHECK(matrix_group(ptd::gl_generators(ptd::make_field(2, 2), 2)).order() == 180);
  CHECK(matrix_group(ptd::sl_generators(ptd::make_field(2), 4)).order() == 20160);
}
