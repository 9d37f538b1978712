#pragma once

// Dense linear algebra over the small fields of gf.hpp: matrices, reduced
// row-echelon form, canonical subspaces, and generator sets for SL/GL.
//
// Vectors are row vectors acting on the right (x -> x*M), so composing
// two matrix actions multiplies the matrices in application order, the
// same left-factor-first convention used for permutations.

#include <algorithm>
#include <memory>
#include <vector>

#include "ptd/gf.hpp"

namespace ptd {

using Fq = std::shared_ptr<const GF>;

inline Fq make_field(int p, int e = 1) { return std::make_shared<GF>(p, e); }

// Little-endian radix-q encoding of a coordinate vector.
inline int vec_to_index(const GF& f, const std::vector<int>& v) {
  int idx = 0, mult = 1;
  for (int c : v) {
    if (!f.is_element(c)) throw error("vector: coordinate out of range");
    idx += c * mult;
    mult *= f.size();
  }
  return idx;
}

inline std::vector<int> index_to_vec(const GF& f, int dim, int index) {
  std::vector<int> v(dim);
  for (int i = 0; i < dim; ++i) {
    v[i] = index % f.size();
    index /= f.size();
  }
  return v;
}

class FqMatrix {
 public:
  FqMatrix(Fq field, int rows, int cols)
      : f_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw error("matrix: negative dimension");
  }

  static FqMatrix identity(Fq field, int n) {
    FqMatrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static FqMatrix from_rows(Fq field, const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    FqMatrix m(std::move(field), r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw error("matrix: ragged rows");
      for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  const GF& field() const { return *f_; }
  Fq field_ptr() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, int v) {
    if (!f_->is_element(v)) throw error("matrix: entry out of range");
    a_[static_cast<size_t>(i) * cols_ + j] = v;
  }

  FqMatrix operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix: dimension mismatch in product");
    FqMatrix out(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        int aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          out.set(i, j, f_->add(out.at(i, j), f_->mul(aik, o.at(k, j))));
      }
    return out;
  }

  std::vector<int> apply(const std::vector<int>& x) const {  // x * M
    if (static_cast<int>(x.size()) != rows_)
      throw error("matrix: vector length mismatch");
    std::vector<int> y(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < cols_; ++j)
        y[j] = f_->add(y[j], f_->mul(x[i], at(i, j)));
    }
    return y;
  }

  FqMatrix transpose() const {
    FqMatrix out(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
  }

  FqMatrix inverse() const {
    if (rows_ != cols_) throw error("matrix: only square matrices invert");
    FqMatrix aug(f_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
      aug.set(i, cols_ + i, 1);
    }
    aug.row_reduce();
    for (int i = 0; i < rows_; ++i)
      if (aug.at(i, i) != 1) throw error("matrix: singular");
    FqMatrix inv(f_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv.set(i, j, aug.at(i, cols_ + j));
    return inv;
  }

  int rank() const {
    FqMatrix c = *this;
    c.row_reduce();
    int r = 0;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (c.at(i, j) != 0) {
          ++r;
          break;
        }
    return r;
  }

  // In-place reduced row-echelon form.
  void row_reduce() {
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
      int piv = -1;
      for (int i = lead; i < rows_; ++i)
        if (at(i, col) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != lead)
        for (int j = 0; j < cols_; ++j) {
          int t = at(lead, j);
          set(lead, j, at(piv, j));
          set(piv, j, t);
        }
      int scale = f_->inv(at(lead, col));
      for (int j = 0; j < cols_; ++j) set(lead, j, f_->mul(at(lead, j), scale));
      for (int i = 0; i < rows_; ++i) {
        if (i == lead) continue;
        int factor = at(i, col);
        if (factor == 0) continue;
        for (int j = 0; j < cols_; ++j)
          set(i, j, f_->sub(at(i, j), f_->mul(factor, at(lead, j))));
      }
      ++lead;
    }
  }

  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
  bool operator<(const FqMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
  }

 private:
  Fq f_;
  int rows_, cols_;
  std::vector<int> a_;
};

// A subspace in canonical form: the rows of the reduced row-echelon basis,
// with zero rows dropped.  Two spans are equal iff their canonical rows are.
struct Subspace {
  std::vector<std::vector<int>> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  bool operator==(const Subspace& o) const { return basis == o.basis; }
  bool operator<(const Subspace& o) const { return basis < o.basis; }
};

inline Subspace span_of(const GF& f, const std::vector<std::vector<int>>& vectors) {
  std::vector<std::vector<int>> rows = vectors;
  int nrows = static_cast<int>(rows.size());
  int cols = nrows ? static_cast<int>(rows[0].size()) : 0;
  int lead = 0;
  for (int col = 0; col < cols && lead < nrows; ++col) {
    int piv = -1;
    for (int i = lead; i < nrows; ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[lead]);
    int scale = f.inv(rows[lead][col]);
    for (int j = 0; j < cols; ++j) rows[lead][j] = f.mul(rows[lead][j], scale);
    for (int i = 0; i < nrows; ++i) {
      if (i == lead || rows[i][col] == 0) continue;
      int factor = rows[i][col];
      for (int j = 0; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[lead][j]));
    }
    ++lead;
  }
  Subspace s;
  for (int i = 0; i < lead; ++i) s.basis.push_back(std::move(rows[i]));
  return s;
}

// All k-dimensional subspaces of GF(q)^d, enumerated by reduced-echelon
// pivot patterns; the count is the Gaussian binomial by construction.
inline std::vector<Subspace> all_subspaces(Fq field, int d, int k) {
  const GF& f = *field;
  if (k < 0 || k > d) return {};
  if (k == 0) return {Subspace{}};
  std::vector<Subspace> out;
  std::vector<int> pivots(k);
  // iterate over pivot-column combinations in lexicographic order
  for (int i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    // free positions: (i, j) with j > pivots[i], j not a pivot
    std::vector<std::pair<int, int>> free_pos;
    std::vector<char> is_piv(d, 0);
    for (int p : pivots) is_piv[p] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[i] + 1; j < d; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    long long combos = 1;
    for (size_t t = 0; t < free_pos.size(); ++t) combos *= f.size();
    for (long long enc = 0; enc < combos; ++enc) {
      Subspace s;
      s.basis.assign(k, std::vector<int>(d, 0));
      for (int i = 0; i < k; ++i) s.basis[i][pivots[i]] = 1;
      long long t = enc;
      for (auto [i, j] : free_pos) {
        s.basis[i][j] = static_cast<int>(t % f.size());
        t /= f.size();
      }
      out.push_back(std::move(s));
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && pivots[i] == d - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long long gaussian_binomial(int d, int k, long long q) {
  if (k < 0 || k > d) return 0;
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long long qd = 1, qk = 1;
    for (int t = 0; t < d - i; ++t) qd *= q;
    for (int t = 0; t < k - i; ++t) qk *= q;
    num *= (qd - 1);
    den *= (qk - 1);
    // keep intermediate values integral
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

// Image of a subspace under x -> x*M, re-canonicalized.
inline Subspace apply_to_subspace(const GF& f, const Subspace& s, const FqMatrix& m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(s.basis.size());
  for (const auto& v : s.basis) rows.push_back(m.apply(v));
  return span_of(f, rows);
}

// Elementary transvections I + c*E(i,j) for c running over the power basis
// {1, eps, ..., eps^{e-1}}; together they generate SL(n, q) since products
// with equal (i,j) add their parameters.
inline std::vector<FqMatrix> sl_generators(Fq field, int n) {
  if (n < 2) throw error("sl: dimension must be at least 2");
  std::vector<FqMatrix> gens;
  const GF& f = *field;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int m = 0; m < f.extension_degree(); ++m) {
        FqMatrix t = FqMatrix::identity(field, n);
        t.set(i, j, f.exp(m));
        gens.push_back(std::move(t));
      }
    }
  return gens;
}

// SL generators plus one diagonal of determinant eps: generates GL(n, q).
inline std::vector<FqMatrix> gl_generators(Fq field, int n) {
  auto gens = sl_generators(field, n);
  FqMatrix d = FqMatrix::identity(field, n);
  d.set(0, 0, field->generator());
  gens.push_back(std::move(d));
  return gens;
}

}  // namespace ptd
