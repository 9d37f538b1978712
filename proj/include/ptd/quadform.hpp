#pragma once

// Quadratic functions on GF(2)^n, their polarisations, the dichotomy of
// nondegenerate types by zero counting (Arf invariant in disguise, cf.
// MacWilliams & Sloane ch. 15), symplectic transvection generators for
// Sp(2m,2), and the induced action on the forms polarising to the
// standard alternating form.

#include <cstdint>

#include "ptd/geometry.hpp"

namespace ptd {

class QuadraticForm {
 public:
  enum class Type { hyperbolic, elliptic, degenerate };

  explicit QuadraticForm(int n) : n_(n), coeff_(n * n, 0) {
    if (n < 1 || n > 16) throw error("quadratic form: variable count out of range");
  }

  // sum of x_{2t} x_{2t+1} over the m coordinate pairs
  static QuadraticForm standard_hyperbolic(int m) {
    QuadraticForm q(2 * m);
    for (int t = 0; t < m; ++t) q.set_coeff(2 * t, 2 * t + 1, true);
    return q;
  }

  int variables() const { return n_; }

  bool coeff(int i, int j) const {
    check_pair(i, j);
    return coeff_[i * n_ + j] != 0;
  }
  void set_coeff(int i, int j, bool v) {
    check_pair(i, j);
    coeff_[i * n_ + j] = v ? 1 : 0;
  }
  bool constant() const { return constant_; }
  void set_constant(bool v) { constant_ = v; }

  // x is a coordinate bitmask (little-endian, as in the vector actions)
  int evaluate(int x) const {
    int acc = constant_ ? 1 : 0;
    for (int i = 0; i < n_; ++i) {
      if (!((x >> i) & 1)) continue;
      for (int j = i; j < n_; ++j)
        if (((x >> j) & 1) && coeff_[i * n_ + j]) acc ^= 1;
    }
    return acc;
  }

  int zero_count() const {
    int z = 0;
    for (int x = 0; x < (1 << n_); ++x)
      if (evaluate(x) == 0) ++z;
    return z;
  }

  // Nondegenerate quadratic functions on 2m variables have either
  // 2^{2m-1} + 2^{m-1} or 2^{2m-1} - 2^{m-1} zeros; anything else is
  // classified as degenerate.  The count is invariant under translation
  // and invertible substitution, so this never consults the labels.
  Type type() const {
    if (n_ % 2 != 0) return Type::degenerate;
    int m = n_ / 2;
    int z = zero_count();
    if (z == (1 << (n_ - 1)) + (1 << (m - 1))) return Type::hyperbolic;
    if (z == (1 << (n_ - 1)) - (1 << (m - 1))) return Type::elliptic;
    return Type::degenerate;
  }

  // B(x,y) = Q(x+y) + Q(x) + Q(y): the strict upper coefficients.
  bool polarisation(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return coeff(i, j);
  }

  // true when the polarisation is the standard alternating form pairing
  // coordinates (2t, 2t+1)
  bool polarises_to_standard() const {
    if (n_ % 2 != 0) return false;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        bool expect = (j == i + 1) && (i % 2 == 0);
        if (coeff(i, j) != expect) return false;
      }
    return true;
  }

  // Q o A, i.e. x -> Q(x A); A must be over GF(2) with matching size.
  QuadraticForm composed_with(const FqMatrix& a) const {
    if (a.field().size() != 2 || a.rows() != n_ || a.cols() != n_)
      throw error("quadratic form: need a square GF(2) matrix of matching size");
    std::vector<int> row_mask(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (a.at(i, j)) row_mask[i] |= 1 << j;
    return from_values(n_, [&](int x) {
      int y = 0;
      for (int i = 0; i < n_; ++i)
        if ((x >> i) & 1) y ^= row_mask[i];
      return evaluate(y);
    });
  }

  // x -> Q(x + t); the constant picks up Q(t)
  QuadraticForm translated(int t) const {
    return from_values(n_, [&](int x) { return evaluate(x ^ t); });
  }

  bool operator==(const QuadraticForm& o) const {
    return n_ == o.n_ && constant_ == o.constant_ && coeff_ == o.coeff_;
  }
  bool operator<(const QuadraticForm& o) const {
    return std::tie(n_, constant_, coeff_) < std::tie(o.n_, o.constant_, o.coeff_);
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 0 || j < i || j >= n_)
      throw error("quadratic form: coefficient index out of range");
  }

  // Reconstruct the (necessarily degree <= 2) function from its values.
  template <class F>
  static QuadraticForm from_values(int n, F&& value) {
    QuadraticForm q(n);
    int c = value(0);
    q.set_constant(c != 0);
    for (int i = 0; i < n; ++i) q.set_coeff(i, i, ((value(1 << i) ^ c) & 1) != 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int v = value((1 << i) | (1 << j)) ^ value(1 << i) ^ value(1 << j) ^ c;
        q.set_coeff(i, j, (v & 1) != 0);
      }
    for (int x = 0; x < (1 << n); ++x)
      if (q.evaluate(x) != value(x))
        throw error("quadratic form: source function has degree above 2");
    return q;
  }

  int n_;
  bool constant_ = false;
  std::vector<uint8_t> coeff_;  // upper triangle used, i <= j
};

// The 2^{2m} constant-free quadratic functions polarising to the standard
// alternating form: the standard hyperbolic form plus every diagonal
// (= linear, since x^2 = x) adjustment.  Listed in diagonal-mask order.
inline std::vector<QuadraticForm> forms_polarising_standard(int m) {
  if (m < 1 || m > 7) throw error("forms: m out of range");
  int n = 2 * m;
  std::vector<QuadraticForm> out;
  out.reserve(1 << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    QuadraticForm q = QuadraticForm::standard_hyperbolic(m);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) q.set_coeff(i, i, true);
    out.push_back(std::move(q));
  }
  return out;
}

// Standard alternating form B(x,y) = sum over pairs (2t, 2t+1).
inline bool standard_alternating(int n, int x, int y) {
  int acc = 0;
  for (int t = 0; t + 1 < n; t += 2)
    acc ^= (((x >> t) & (y >> (t + 1))) ^ ((x >> (t + 1)) & (y >> t))) & 1;
  return acc != 0;
}

// Symplectic transvections x -> x + B(x,v) v for every nonzero v; these
// generate Sp(2m,2) (Dieudonne's classical generation theorem).
inline std::vector<FqMatrix> symplectic_transvections(int m) {
  if (m < 1 || m > 7) throw error("symplectic: m out of range");
  int n = 2 * m;
  auto f2 = make_field(2);
  std::vector<FqMatrix> out;
  out.reserve((1 << n) - 1);
  for (int v = 1; v < (1 << n); ++v) {
    FqMatrix t(f2, n, n);
    for (int i = 0; i < n; ++i) {
      int row = (1 << i) ^ (standard_alternating(n, 1 << i, v) ? v : 0);
      for (int j = 0; j < n; ++j) t.set(i, j, (row >> j) & 1);
    }
    out.push_back(std::move(t));
  }
  return out;
}

inline Group symplectic_group(int m, std::string label = "") {
  auto f2 = make_field(2);
  return vector_action(
      f2, 2 * m, symplectic_transvections(m),
      label.empty() ? "Sp(" + std::to_string(2 * m) + ",2)" : std::move(label));
}

// Action of the transvections on the forms of one type (indexing the
// forms of that type in diagonal-mask order): Q -> Q o T.
inline Group form_type_action(int m, QuadraticForm::Type type,
                              std::string label = "") {
  auto forms = forms_polarising_standard(m);
  std::vector<int> index(forms.size(), -1);
  std::vector<int> keep;
  for (size_t i = 0; i < forms.size(); ++i)
    if (forms[i].type() == type) {
      index[i] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(i));
    }
  if (keep.empty()) throw error("form action: no forms of that type");
  // map a form back to its diagonal mask
  auto mask_of = [&](const QuadraticForm& q) {
    QuadraticForm base = QuadraticForm::standard_hyperbolic(m);
    int mask = 0;
    for (int i = 0; i < 2 * m; ++i)
      if (q.coeff(i, i) != base.coeff(i, i)) mask |= 1 << i;
    return mask;
  };
  std::vector<Permutation> gens;
  for (const auto& t : symplectic_transvections(m)) {
    std::vector<int> img(keep.size());
    for (size_t k = 0; k < keep.size(); ++k) {
      QuadraticForm q = forms[keep[k]].composed_with(t);
      if (!q.polarises_to_standard() || q.constant())
        throw error("form action: family not preserved");
      int target = index[mask_of(q)];
      if (target < 0) throw error("form action: type not preserved");
      img[k] = target;
    }
    gens.emplace_back(std::move(img));
  }
  return Group(static_cast<int>(keep.size()), std::move(gens), std::move(label));
}

// Change of basis C (rows = new basis) with C G C^T = standard alternating
// form, for a nondegenerate alternating Gram matrix G over GF(2).
inline FqMatrix symplectic_basis_change(const FqMatrix& gram) {
  int n = gram.rows();
  if (gram.cols() != n || gram.field().size() != 2)
    throw error("symplectic basis: need a square GF(2) matrix");
  if (n % 2 != 0) throw error("symplectic basis: odd dimension");
  for (int i = 0; i < n; ++i) {
    if (gram.at(i, i) != 0) throw error("symplectic basis: not alternating");
    for (int j = 0; j < n; ++j)
      if (gram.at(i, j) != gram.at(j, i))
        throw error("symplectic basis: not symmetric");
  }
  auto pairing = [&](int x, int y) {
    int acc = 0;
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1)
        for (int j = 0; j < n; ++j)
          if (((y >> j) & 1) && gram.at(i, j)) acc ^= 1;
    return acc;
  };
  std::vector<int> basis;
  std::vector<int> space;  // bitmask vectors orthogonal to all chosen pairs
  for (int x = 1; x < (1 << n); ++x) space.push_back(x);
  for (int round = 0; round < n / 2; ++round) {
    if (space.empty()) throw error("symplectic basis: degenerate form");
    int u = space.front();
    int w = -1;
    for (int cand : space)
      if (pairing(u, cand)) {
        w = cand;
        break;
      }
    if (w < 0) throw error("symplectic basis: degenerate form");
    basis.push_back(u);
    basis.push_back(w);
    std::vector<int> nxt;
    for (int cand : space)
      if (cand != u && cand != w && !pairing(u, cand) && !pairing(w, cand))
        nxt.push_back(cand);
    space = std::move(nxt);
  }
  auto f2 = make_field(2);
  FqMatrix c(f2, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.set(i, j, (basis[i] >> j) & 1);
  return c;
}

// Generators of SL(2,2^m) = Sp(2,2^m) embedded in Sp(2m,2): restrict
// scalars of the natural 2-dimensional module to GF(2), equip it with the
// trace of the standard GF(2^m)-alternating form, and change coordinates
// so that the trace form becomes the standard one.
inline std::vector<FqMatrix> symplectic_subfield_generators(int m) {
  if (m < 2 || m > 8) throw error("subfield embedding: need 2 <= m <= 8");
  auto fq = make_field(2, m);
  auto f2 = make_field(2);
  int n = 2 * m;
  // expanded basis vector idx = m*i + s corresponds to eps^s e_i
  auto basis_entry = [&](int idx, int coord) {
    return coord == idx / m ? fq->exp(idx % m) : 0;
  };
  FqMatrix gram(f2, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int val = fq->add(fq->mul(basis_entry(a, 0), basis_entry(b, 1)),
                        fq->mul(basis_entry(a, 1), basis_entry(b, 0)));
      gram.set(a, b, fq->trace(val));
    }
  FqMatrix c = symplectic_basis_change(gram);
  FqMatrix cinv = c.inverse();
  std::vector<FqMatrix> out;
  for (const auto& mat : sl_generators(fq, 2))
    out.push_back(c * restrict_scalars(mat, f2) * cinv);
  return out;
}

}  // namespace ptd
