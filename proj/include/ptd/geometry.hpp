#pragma once

// Finite-geometry group actions: linear/affine/semilinear groups acting on
// vector spaces and projective spaces over GF(q), hyperplane-coset designs,
// restriction of scalars, the one-dimensional semilinear transitivity
// criterion (Foulser; Foulser-Kallaher), Zsigmondy primitive prime
// divisors, and hyperovals of the projective plane of order 4.

#include <cstdint>
#include <optional>

#include "ptd/design.hpp"
#include "ptd/linalg.hpp"

namespace ptd {

// ---------------------------------------------------------------------------
// Actions on the q^d vectors (little-endian index encoding from linalg).

inline Permutation vector_permutation(const Fq& f, const FqMatrix& m) {
  int d = m.rows();
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  std::vector<int> img(n);
  for (long long x = 0; x < n; ++x)
    img[x] = static_cast<int>(vec_to_index(*f, m.apply(index_to_vec(*f, d, static_cast<int>(x)))));
  return Permutation(std::move(img));
}

inline Group vector_action(const Fq& f, int d, const std::vector<FqMatrix>& mats,
                           std::string label = "") {
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  std::vector<Permutation> gens;
  gens.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != d || m.cols() != d)
      throw error("vector action: matrix size differs from dimension");
    gens.push_back(vector_permutation(f, m));
  }
  return Group(static_cast<int>(n), std::move(gens), std::move(label));
}

inline Permutation translation_permutation(const Fq& f, const std::vector<int>& t) {
  int d = static_cast<int>(t.size());
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  std::vector<int> img(n);
  for (long long x = 0; x < n; ++x) {
    auto v = index_to_vec(*f, d, static_cast<int>(x));
    for (int i = 0; i < d; ++i) v[i] = f->add(v[i], t[i]);
    img[x] = static_cast<int>(vec_to_index(*f, v));
  }
  return Permutation(std::move(img));
}

// The full group of q^d translations, generated additively coordinate by
// coordinate (one generator per GF(p)-basis element of each coordinate).
inline Group translation_group(const Fq& f, int d, std::string label = "") {
  std::vector<Permutation> gens;
  for (int i = 0; i < d; ++i)
    for (int m = 0; m < f->extension_degree(); ++m) {
      std::vector<int> t(d, 0);
      std::vector<int> coords(f->extension_degree(), 0);
      coords[m] = 1;
      t[i] = f->from_coords(coords);
      gens.push_back(translation_permutation(f, t));
    }
  int degree = gens.empty() ? 1 : gens[0].degree();
  return Group(degree, std::move(gens), std::move(label));
}

// Affine group: all translations plus the given linear parts.
inline Group affine_group(const Fq& f, int d, const std::vector<FqMatrix>& mats,
                          std::string label = "") {
  Group tr = translation_group(f, d);
  std::vector<Permutation> gens = tr.generators();
  for (const auto& m : mats) gens.push_back(vector_permutation(f, m));
  return Group(tr.degree(), std::move(gens), std::move(label));
}

// Coordinatewise Frobenius x_i -> x_i^p on GF(q)^d.
inline Permutation frobenius_on_vectors(const Fq& f, int d) {
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  std::vector<int> img(n);
  for (long long x = 0; x < n; ++x) {
    auto v = index_to_vec(*f, d, static_cast<int>(x));
    for (auto& c : v) c = f->frobenius(c);
    img[x] = static_cast<int>(vec_to_index(*f, v));
  }
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// Projective space: points are monic coordinate vectors (first nonzero
// coordinate 1), listed in increasing little-endian index order.

inline std::vector<int> normalize_projective(const Fq& f, std::vector<int> v) {
  for (int c : v)
    if (c != 0) {
      int inv = f->inv(c);
      for (auto& x : v) x = f->mul(x, inv);
      return v;
    }
  throw error("projective: zero vector has no projective point");
}

inline std::vector<std::vector<int>> projective_points(const Fq& f, int d) {
  if (d < 2) throw error("projective: need dimension at least 2");
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  std::vector<std::vector<int>> pts;
  for (long long x = 1; x < n; ++x) {
    auto v = index_to_vec(*f, d, static_cast<int>(x));
    if (normalize_projective(f, v) == v) pts.push_back(v);
  }
  return pts;  // already in index order
}

// Lookup table: little-endian vector index -> projective point number.
inline std::vector<int> projective_index_table(const Fq& f, int d) {
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= f->size();
  auto pts = projective_points(f, d);
  std::vector<int> table(n, -1);
  for (size_t i = 0; i < pts.size(); ++i) {
    // every nonzero vector maps to the number of its normalization
    for (int c = 1; c < f->size(); ++c) {
      auto v = pts[i];
      for (auto& x : v) x = f->mul(x, c);
      table[vec_to_index(*f, v)] = static_cast<int>(i);
    }
  }
  return table;
}

inline Permutation projective_permutation(const Fq& f, const FqMatrix& m) {
  int d = m.rows();
  auto pts = projective_points(f, d);
  auto table = projective_index_table(f, d);
  std::vector<int> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    img[i] = table[vec_to_index(*f, m.apply(pts[i]))];
  return Permutation(std::move(img));
}

inline Group projective_action(const Fq& f, int d,
                               const std::vector<FqMatrix>& mats,
                               std::string label = "") {
  std::vector<Permutation> gens;
  gens.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != d || m.cols() != d)
      throw error("projective action: matrix size differs from dimension");
    gens.push_back(projective_permutation(f, m));
  }
  auto pts = projective_points(f, d);
  return Group(static_cast<int>(pts.size()), std::move(gens), std::move(label));
}

inline Permutation frobenius_on_projective(const Fq& f, int d) {
  auto pts = projective_points(f, d);
  auto table = projective_index_table(f, d);
  std::vector<int> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    auto v = pts[i];
    for (auto& c : v) c = f->frobenius(c);
    img[i] = table[vec_to_index(*f, v)];
  }
  return Permutation(std::move(img));
}

// Adds the Frobenius permutation to a linear group's generators: the
// semilinear closure GammaL / PGammaL in its action on vectors or on
// projective points.
inline Group semilinear_closure(const Group& g, const Fq& f, int d,
                                bool projective, std::string label = "") {
  Permutation frob =
      projective ? frobenius_on_projective(f, d) : frobenius_on_vectors(f, d);
  if (frob.degree() != g.degree())
    throw error("semilinear closure: group degree does not match the space");
  auto gens = g.generators();
  gens.push_back(frob);
  return Group(g.degree(), std::move(gens),
               label.empty() ? g.label() : std::move(label));
}

enum class ProjectiveKind { points, lines, hyperplanes };

// All subspaces of the given projective kind, as canonical Subspace values.
inline std::vector<Subspace> projective_objects(const Fq& f, int d,
                                                ProjectiveKind kind) {
  switch (kind) {
    case ProjectiveKind::points:
      if (d < 2) throw error("projective objects: need dimension at least 2");
      return all_subspaces(f, d, 1);
    case ProjectiveKind::lines:
      if (d < 3)
        throw error("projective objects: lines need dimension at least 3");
      return all_subspaces(f, d, 2);
    case ProjectiveKind::hyperplanes:
      if (d < 2) throw error("projective objects: need dimension at least 2");
      return all_subspaces(f, d, d - 1);
  }
  throw error("projective objects: unknown kind");
}

// Projective point numbers lying inside a subspace.
inline std::vector<int> points_in_subspace(const Fq& f, int d, const Subspace& s) {
  auto table = projective_index_table(f, d);
  long long combos = 1;
  for (int i = 0; i < s.dim(); ++i) combos *= f->size();
  std::vector<int> out;
  for (long long c = 1; c < combos; ++c) {
    auto coeff = index_to_vec(*f, s.dim(), static_cast<int>(c));
    std::vector<int> v(d, 0);
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < d; ++j)
        v[j] = f->add(v[j], f->mul(coeff[i], s.basis[i][j]));
    out.push_back(table[vec_to_index(*f, v)]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// The affine design AG_{f-1}(f, q): points are the q^f vectors, blocks are
// all cosets of hyperplanes.  Each hyperplane class corresponds to a monic
// linear functional; its q level sets form one parallel class.

inline Design affine_hyperplane_cosets(const Fq& f, int fdim) {
  if (fdim < 2) throw error("affine cosets: need dimension at least 2");
  long long n = 1;
  for (int i = 0; i < fdim; ++i) n *= f->size();
  auto functionals = projective_points(f, fdim);
  std::vector<std::vector<int>> blocks;
  for (const auto& a : functionals)
    for (int c = 0; c < f->size(); ++c) {
      std::vector<int> blk;
      for (long long x = 0; x < n; ++x) {
        auto v = index_to_vec(*f, fdim, static_cast<int>(x));
        int val = 0;
        for (int i = 0; i < fdim; ++i) val = f->add(val, f->mul(a[i], v[i]));
        if (val == c) blk.push_back(static_cast<int>(x));
      }
      blocks.push_back(std::move(blk));
    }
  return Design(static_cast<int>(n), std::move(blocks),
                "AG(" + std::to_string(fdim) + "," + std::to_string(f->size()) + ")");
}

// ---------------------------------------------------------------------------
// Restriction of scalars: GF(p^e)-linear maps as GF(p)-matrices.  The basis
// of GF(p^e)^d over GF(p) is x^m e_i ordered by index i*e + m, which makes
// the little-endian vector index over GF(p^e) agree with the little-endian
// index over GF(p).

inline FqMatrix scalar_multiplication_matrix(const Fq& f, int a, const Fq& fp) {
  int e = f->extension_degree();
  if (fp->size() != f->characteristic() || fp->extension_degree() != 1)
    throw error("scalar restriction: target must be the prime field");
  FqMatrix m(fp, e, e);
  for (int row = 0; row < e; ++row) {
    std::vector<int> basis(e, 0);
    basis[row] = 1;
    auto c = f->coords(f->mul(a, f->from_coords(basis)));
    for (int col = 0; col < e; ++col) m.set(row, col, c[col]);
  }
  return m;
}

inline FqMatrix frobenius_power_matrix(const Fq& f, int t, const Fq& fp) {
  int e = f->extension_degree();
  if (fp->size() != f->characteristic() || fp->extension_degree() != 1)
    throw error("scalar restriction: target must be the prime field");
  FqMatrix m(fp, e, e);
  for (int row = 0; row < e; ++row) {
    std::vector<int> basis(e, 0);
    basis[row] = 1;
    int v = f->from_coords(basis);
    for (int s = 0; s < t; ++s) v = f->frobenius(v);
    auto c = f->coords(v);
    for (int col = 0; col < e; ++col) m.set(row, col, c[col]);
  }
  return m;
}

inline FqMatrix restrict_scalars(const FqMatrix& m, const Fq& fp) {
  const GF& f = m.field();
  int e = f.extension_degree();
  int d = m.rows();
  if (m.cols() != d) throw error("scalar restriction: need a square matrix");
  if (fp->size() != f.characteristic() || fp->extension_degree() != 1)
    throw error("scalar restriction: target must be the prime field");
  FqMatrix out(fp, d * e, d * e);
  for (int i = 0; i < d; ++i)
    for (int mm = 0; mm < e; ++mm) {
      std::vector<int> basis(e, 0);
      basis[mm] = 1;
      int xm = f.from_coords(basis);
      for (int j = 0; j < d; ++j) {
        auto c = f.coords(f.mul(m.at(i, j), xm));
        for (int mp = 0; mp < e; ++mp) out.set(i * e + mm, j * e + mp, c[mp]);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Point relabeling (conjugation by a bijection of the ground set).

inline Group relabel_points(const Group& g, const std::vector<int>& new_of_old,
                            std::string label = "") {
  if (static_cast<int>(new_of_old.size()) != g.degree())
    throw error("relabel: map size does not match the degree");
  Permutation pi(new_of_old);  // validates bijection
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> img(g.degree());
    for (int x = 0; x < g.degree(); ++x) img[pi(x)] = pi(s(x));
    gens.emplace_back(std::move(img));
  }
  return Group(g.degree(), std::move(gens),
               label.empty() ? g.label() : std::move(label));
}

// Index map identifying GF(q^2) with GF(q)^2 via the basis {1, g} over the
// embedded subfield, g the canonical generator of the big field.  Entry
// [big field element value] = little-endian index of its coordinate pair.
inline std::vector<int> subfield_plane_relabeling(const Fq& big, const Fq& sub) {
  if (big->characteristic() != sub->characteristic() ||
      big->extension_degree() != 2 * sub->extension_degree())
    throw error("subfield plane: need a quadratic extension");
  auto phi = big->embedding_of(*sub);
  int g = big->generator();
  std::vector<int> map(big->size(), -1);
  for (int u = 0; u < sub->size(); ++u)
    for (int v = 0; v < sub->size(); ++v) {
      int val = big->add(phi[u], big->mul(phi[v], g));
      if (map[val] != -1)
        throw error("subfield plane: generator lies in the subfield");
      map[val] = u + sub->size() * v;
    }
  return map;
}

// ---------------------------------------------------------------------------
// One-dimensional affine/semilinear groups on the q field elements.

inline Group agl1(const Fq& f, std::string label = "") {
  std::vector<int> mul_img(f->size()), add_img(f->size());
  for (int x = 0; x < f->size(); ++x) {
    mul_img[x] = f->mul(f->generator(), x);
    add_img[x] = f->add(x, 1);
  }
  return Group(f->size(), {Permutation(mul_img), Permutation(add_img)},
               std::move(label));
}

inline Group agammal1(const Fq& f, std::string label = "") {
  Group base = agl1(f);
  auto gens = base.generators();
  std::vector<int> frob_img(f->size());
  for (int x = 0; x < f->size(); ++x) frob_img[x] = f->frobenius(x);
  gens.emplace_back(std::move(frob_img));
  return Group(f->size(), std::move(gens), std::move(label));
}

// ---------------------------------------------------------------------------
// Subgroups of GammaL(1, p^d) in standard form (Foulser; Foulser-Kallaher):
// G0 = <tau^i, tau^j sigma^t> with tau: x -> eps*x and sigma: x -> x^p.

struct GammaL1Subgroup {
  long long p = 2;
  long long d = 1;
  long long i = 1;
  long long j = 0;
  long long t = 1;
};

namespace detail {
inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// (p^{kt} - 1) / (p^t - 1) mod i, computed as 1 + p^t + ... + p^{(k-1)t}.
inline long long geometric_sum_mod(long long p, long long t, long long k,
                                   long long i) {
  long long step = 1;
  {
    long long base = p % i;
    for (long long s = 0; s < t; ++s) step = (__int128)step * base % i;
  }
  long long term = 1 % i, sum = 0;
  for (long long s = 0; s < k; ++s) {
    sum = (sum + term) % i;
    term = (__int128)term * step % i;
  }
  return sum;
}
}  // namespace detail

// Checks the standard-form conditions; throws naming the violated one.
inline void gammal1_validate(const GammaL1Subgroup& s) {
  if (!detail::is_prime_ll(s.p)) throw error("gammal1: p must be prime");
  if (s.d < 1 || s.d > 62) throw error("gammal1: d out of range");
  long long qm1 = 1;
  for (long long k = 0; k < s.d; ++k) {
    qm1 *= s.p;
    if (qm1 > (1LL << 62)) throw error("gammal1: p^d too large");
  }
  qm1 -= 1;
  if (s.i <= 0 || qm1 % s.i != 0)
    throw error("gammal1: condition (1) fails: need i > 0 and i | p^d - 1");
  if (s.t <= 0 || s.d % s.t != 0)
    throw error("gammal1: condition (2) fails: need t > 0 and t | d");
  if (s.j < 0 || s.j >= s.i ||
      (__int128)s.j % s.i *
              detail::geometric_sum_mod(s.p, s.t, s.d / s.t, s.i) % s.i !=
          0)
    throw error(
        "gammal1: condition (3) fails: need 0 <= j < i and i | j(p^d-1)/(p^t-1)");
}

// Transitivity on the nonzero field elements: i = 1, or (A) j > 0 with
// i | j(p^{it}-1)/(p^t-1) and (B) no 1 < k < i with i | j(p^{kt}-1)/(p^t-1).
inline bool gammal1_is_transitive(const GammaL1Subgroup& s) {
  gammal1_validate(s);
  if (s.i == 1) return true;
  if (s.j == 0) return false;
  for (long long k = 2; k <= s.i; ++k) {
    long long sum = detail::geometric_sum_mod(s.p, s.t, k, s.i);
    if ((__int128)s.j * sum % s.i == 0) return k == s.i;
  }
  return false;
}

// The group as permutations of the p^d field elements (0 is fixed).
// Generators: x -> eps^i x  and  x -> (eps^j x)^{p^t}.
inline Group gammal1_group(const GammaL1Subgroup& s, std::string label = "") {
  gammal1_validate(s);
  auto f = make_field(static_cast<int>(s.p), static_cast<int>(s.d));
  std::vector<int> g1(f->size()), g2(f->size());
  int ei = f->exp(s.i);
  int ej = f->exp(s.j);
  for (int x = 0; x < f->size(); ++x) {
    g1[x] = f->mul(ei, x);
    int y = f->mul(ej, x);
    for (long long st = 0; st < s.t; ++st) y = f->frobenius(y);
    g2[x] = y;
  }
  return Group(f->size(), {Permutation(g1), Permutation(g2)}, std::move(label));
}

// Expected order of a standard-form subgroup: (p^d - 1)/i * (d/t).
inline long long gammal1_order(const GammaL1Subgroup& s) {
  gammal1_validate(s);
  long long q = 1;
  for (long long k = 0; k < s.d; ++k) q *= s.p;
  return (q - 1) / s.i * (s.d / s.t);
}

// ---------------------------------------------------------------------------
// Zsigmondy: primes s | p^d - 1 with s not dividing p^c - 1 for 0 < c < d,
// equivalently the multiplicative order of p mod s equals d.

inline std::vector<long long> zsigmondy_ppd(long long p, long long d) {
  if (!detail::is_prime_ll(p)) throw error("zsigmondy: p must be prime");
  if (d < 1) throw error("zsigmondy: d must be positive");
  long long n = 1;
  for (long long k = 0; k < d; ++k) {
    n *= p;
    if (n > (1LL << 40)) throw error("zsigmondy: p^d too large");
  }
  n -= 1;
  std::vector<long long> primes;
  long long rest = n;
  for (long long q = 2; q * q <= rest; ++q)
    while (rest % q == 0) {
      if (primes.empty() || primes.back() != q) primes.push_back(q);
      rest /= q;
    }
  if (rest > 1) primes.push_back(rest);
  std::vector<long long> out;
  for (long long s : primes) {
    long long ord = 1, pw = p % s;
    while (pw != 1) {
      pw = pw * p % s;
      ++ord;
    }
    if (ord == d) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hyperovals of PG(2,4): 6-point sets meeting every line in at most 2
// points.  There are 168 of them, falling into three orbits of 56 under
// PSL(3,4).

inline std::vector<std::vector<int>> hyperovals_pg24() {
  auto f = make_field(2, 2);
  auto lines = projective_objects(f, 3, ProjectiveKind::lines);
  std::vector<uint32_t> line_mask;
  line_mask.reserve(lines.size());
  for (const auto& l : lines) {
    uint32_t m = 0;
    for (int pt : points_in_subspace(f, 3, l)) m |= uint32_t(1) << pt;
    line_mask.push_back(m);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> idx{0, 1, 2, 3, 4, 5};
  const int n = 21, k = 6;
  while (true) {
    uint32_t mask = 0;
    for (int i : idx) mask |= uint32_t(1) << i;
    bool arc = true;
    for (uint32_t lm : line_mask)
      if (__builtin_popcount(lm & mask) > 2) {
        arc = false;
        break;
      }
    if (arc) out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace ptd
