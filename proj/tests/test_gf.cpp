#include <catch2/catch_amalgamated.hpp>

#include "ptd/gf.hpp"

using ptd::GF;

TEST_CASE("documented defining polynomials") {
  CHECK(GF(2, 2).modulus_coefficients() == std::vector<int>{1, 1});      // x^2+x+1
  CHECK(GF(3, 2).modulus_coefficients() == std::vector<int>{2, 1});      // x^2+x+2
  CHECK(GF(2, 4).modulus_coefficients() == std::vector<int>{1, 1, 0, 0});  // x^4+x+1
}

TEST_CASE("defining polynomial is irreducible (trial division)") {
  // verify independently of the cycle argument used by the constructor
  for (auto [p, e] : {std::pair{2, 4}, {2, 8}, {3, 3}, {5, 2}, {2, 6}}) {
    GF f(p, e);
    std::vector<int> mod = f.modulus_coefficients();
    mod.push_back(1);  // monic of degree e
    // trial-divide by every monic divisor of degree 1..e/2
    for (int deg = 1; 2 * deg <= e; ++deg) {
      long long count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (long long enc = 0; enc < count; ++enc) {
        std::vector<int> d(deg + 1, 1);  // monic
        long long t = enc;
        for (int i = 0; i < deg; ++i) {
          d[i] = t % p;
          t /= p;
        }
        // remainder of mod / d over GF(p)
        std::vector<int> r = mod;
        for (int i = (int)r.size() - 1; i >= deg; --i) {
          int c = r[i] % p;
          if (c == 0) continue;
          for (int j = 0; j <= deg; ++j)
            r[i - deg + j] = ((r[i - deg + j] - c * d[j]) % p + p) % p;
        }
        bool zero = true;
        for (int i = 0; i < deg; ++i)
          if (r[i] % p != 0) zero = false;
        INFO("p=" << p << " e=" << e << " divisor enc=" << enc << " deg=" << deg);
        CHECK_FALSE(zero);
      }
    }
  }
}

TEST_CASE("field axioms across all sizes up to 256") {
  uint32_t lcg = 12345;
  auto rnd = [&](int m) {
    lcg = lcg * 1664525u + 1013904223u;
    return static_cast<int>(lcg >> 8) % m;
  };
  for (int p = 2; p <= 256; ++p) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    for (long long q = p, e = 1; q <= 256; q *= p, ++e) {
      GF f(p, (int)e);
      REQUIRE(f.size() == q);
      // inverses: exact, for every nonzero element
      for (int a = 1; a < f.size(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
      // identity/commutativity/associativity/distributivity on sampled triples
      for (int trial = 0; trial < 60; ++trial) {
        int a = rnd(f.size()), b = rnd(f.size()), c = rnd(f.size());
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      }
    }
  }
}

TEST_CASE("generator order and exp/log round trip") {
  for (auto [p, e] : {std::pair{2, 4}, {3, 2}, {5, 1}, {7, 2}, {2, 8}}) {
    GF f(p, e);
    int q = f.size();
    // generator has full multiplicative order
    std::vector<char> seen(q, 0);
    int x = 1;
    for (int k = 0; k < q - 1; ++k) {
      CHECK_FALSE(seen[x]);
      seen[x] = 1;
      CHECK(f.exp(k) == x);
      CHECK(f.log(x) == k);
      x = f.mul(x, f.generator());
    }
    CHECK(x == 1);
  }
}

TEST_CASE("GF(16) landmark values") {
  GF f(2, 4);
  CHECK(f.generator() == 2);  // the class of x
  CHECK(f.exp(5) == 6);
  CHECK(f.exp(10) == 7);
  // {0, 1, eps^5, eps^10} is the unique order-4 subfield
  std::vector<int> k4{0, 1, 6, 7};
  for (int a : k4)
    for (int b : k4) {
      CHECK(std::count(k4.begin(), k4.end(), f.add(a, b)) == 1);
      CHECK(std::count(k4.begin(), k4.end(), f.mul(a, b)) == 1);
    }
}

TEST_CASE("frobenius is a field automorphism fixing the prime field") {
  for (auto [p, e] : {std::pair{2, 4}, {3, 3}, {5, 2}}) {
    GF f(p, e);
    for (int a = 0; a < f.size(); ++a) {
      for (int b = 0; b < f.size(); ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
    for (int c = 0; c < p; ++c) CHECK(f.frobenius(c) == c);
  }
}

TEST_CASE("absolute trace is additive onto the prime field") {
  GF f(2, 4);
  int hits0 = 0, hits1 = 0;
  for (int a = 0; a < 16; ++a) {
    int t = f.trace(a);
    CHECK((t == 0 || t == 1));
    (t == 0 ? hits0 : hits1)++;
    for (int b = 0; b < 16; ++b)
      CHECK(f.trace(f.add(a, b)) == (f.trace(a) ^ f.trace(b)));
  }
  CHECK(hits0 == 8);  // trace is balanced
  CHECK(hits1 == 8);
  GF g(2, 2);
  CHECK(g.trace(0) == 0);
  CHECK(g.trace(1) == 0);  // 1 + 1
  CHECK(g.trace(2) == 1);  // x + x^2 = x + x + 1
  CHECK(g.trace(3) == 1);
}

TEST_CASE("subfield embedding of GF(4) in GF(16)") {
  GF big(2, 4), small(2, 2);
  auto emb = big.embedding_of(small);
  REQUIRE(emb.size() == 4);
  CHECK(emb[0] == 0);
  CHECK(emb[1] == 1);
  std::vector<int> image{emb[0], emb[1], emb[2], emb[3]};
  std::sort(image.begin(), image.end());
  CHECK(image == std::vector<int>{0, 1, 6, 7});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(emb[small.add(a, b)] == big.add(emb[a], emb[b]));
      CHECK(emb[small.mul(a, b)] == big.mul(emb[a], emb[b]));
    }
}

TEST_CASE("relative trace lands in the subfield") {
  GF big(2, 4), small(2, 2);
  auto emb = big.embedding_of(small);
  std::vector<int> image{emb[0], emb[1], emb[2], emb[3]};
  for (int a = 0; a < 16; ++a) {
    int t = big.trace_to_subfield(a, 2);
    CHECK(std::count(image.begin(), image.end(), t) == 1);
  }
  // GF(4)-semilinearity of x -> x + x^4 over the subfield scalars
  for (int s : image)
    for (int a = 0; a < 16; ++a)
      CHECK(big.trace_to_subfield(big.mul(s, a), 2) ==
            big.mul(s, big.trace_to_subfield(a, 2)));
}

TEST_CASE("bad field parameters are rejected") {
  CHECK_THROWS_AS(GF(4, 1), ptd::error);    // not prime
  CHECK_THROWS_AS(GF(2, 9), ptd::error);    // 512 > 256
  CHECK_THROWS_AS(GF(257, 1), ptd::error);  // too large
  CHECK_THROWS_AS(GF(2, 0), ptd::error);
  GF f(2, 2);
  CHECK_THROWS_AS(f.inv(0), ptd::error);
  CHECK_THROWS_AS(f.log(0), ptd::error);
  CHECK_THROWS_AS(f.add(1, 4), ptd::error);
}
