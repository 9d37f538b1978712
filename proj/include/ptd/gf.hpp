#pragma once

// Small finite fields GF(p^e), q = p^e <= 256, with discrete exp/log tables.
//
// Elements are integers 0..q-1 read as base-p digit strings: the value
// sum d_i p^i stands for the polynomial sum d_i x^i in the basis
// {1, x, ..., x^{e-1}} of GF(p)[x]/(f).  Addition is digit-wise mod p;
// multiplication goes through the discrete log of the class of x.
//
// The defining polynomial f = x^e + c_{e-1}x^{e-1} + ... + c_0 is the
// monic polynomial whose non-leading coefficient value sum c_i p^i is
// smallest such that the powers x^1, x^2, ..., x^{q-1} run through all
// q-1 nonzero residues and return to 1 exactly at exponent q-1.  That
// cycle condition forces every nonzero residue to be a unit, so f is
// irreducible and x is a primitive element; no separate irreducibility
// test is needed.  The rule reproduces the classical table choices
// GF(4): x^2+x+1, GF(9): x^2+x+2, GF(16): x^4+x+1.

#include <cstdint>
#include <numeric>
#include <vector>

#include "ptd/perm.hpp"  // for ptd::error

namespace ptd {

class GF {
 public:
  GF(int p, int e = 1) : p_(p), e_(e) {
    if (e < 1) throw error("field: extension degree must be positive");
    if (!is_prime(p)) throw error("field: characteristic must be prime");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > 256) throw error("field: size above 256 not supported");
    }
    q_ = static_cast<int>(q);
    if (e_ == 1)
      build_prime_field();
    else
      build_extension_field();
  }

  int characteristic() const { return p_; }
  int extension_degree() const { return e_; }
  int size() const { return q_; }

  // Non-leading coefficients c_0..c_{e-1} of the defining polynomial
  // (empty for prime fields).
  const std::vector<int>& modulus_coefficients() const { return poly_; }

  // Primitive element: the class of x for e > 1 (value p), the smallest
  // primitive root mod p for e = 1.
  int generator() const { return gen_; }

  bool is_element(int a) const { return a >= 0 && a < q_; }

  int add(int a, int b) const {
    check(a), check(b);
    if (p_ == 2) return a ^ b;
    int out = 0, mult = 1;
    while (a || b) {
      out += ((a + b) % p_) * mult;
      a /= p_, b /= p_, mult *= p_;
    }
    return out;
  }

  int neg(int a) const {
    check(a);
    if (p_ == 2) return a;
    int out = 0, mult = 1;
    while (a) {
      out += ((p_ - a % p_) % p_) * mult;
      a /= p_, mult *= p_;
    }
    return out;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    check(a), check(b);
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  int inv(int a) const {
    check(a);
    if (a == 0) throw error("field: zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  int div(int a, int b) const { return mul(a, inv(b)); }

  int pow(int a, long long k) const {
    check(a);
    if (a == 0) {
      if (k < 0) throw error("field: zero has no inverse");
      return k == 0 ? 1 : 0;
    }
    long long m = (static_cast<long long>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
  }

  // epsilon^k for any integer k
  int exp(long long k) const {
    long long m = k % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
  }

  // discrete log base the primitive element; error on 0
  int log(int a) const {
    check(a);
    if (a == 0) throw error("field: log of zero");
    return log_[a];
  }

  int frobenius(int a) const { return pow(a, p_); }

  // Absolute trace to GF(p), returned as an element 0..p-1.
  int trace(int a) const {
    check(a);
    int s = 0, x = a;
    for (int i = 0; i < e_; ++i) {
      s = add(s, x);
      x = frobenius(x);
    }
    return s;
  }

  // Trace to the subfield GF(p^t), t | e; the result lies in that subfield
  // (as a subset of this field).
  int trace_to_subfield(int a, int t) const {
    if (t < 1 || e_ % t != 0) throw error("field: invalid subfield degree");
    int s = 0, x = a;
    for (int i = 0; i < e_ / t; ++i) {
      s = add(s, x);
      x = pow(x, ipow(p_, t));
    }
    return s;
  }

  // Coordinates with respect to the basis {1, x, ..., x^{e-1}}.
  std::vector<int> coords(int a) const {
    check(a);
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  int from_coords(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != e_) throw error("field: bad coordinate length");
    int a = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
      if (c[i] < 0 || c[i] >= p_) throw error("field: coordinate out of range");
      a += c[i] * mult;
      mult *= p_;
    }
    return a;
  }

  // Field embedding of GF(p^t) into this field (t | e), as a value map
  // indexed by the subfield's elements.  The image of the subfield's
  // primitive element is the smallest element of multiplicative order
  // p^t - 1 making the map additive, so the embedding is deterministic.
  std::vector<int> embedding_of(const GF& sub) const {
    if (sub.p_ != p_ || e_ % sub.e_ != 0)
      throw error("field: not a subfield");
    int m = sub.q_ - 1;
    for (int y = 1; y < q_; ++y) {
      if ((q_ - 1) / std::gcd(q_ - 1, log_[y]) != m) continue;
      std::vector<int> map(sub.q_, 0);
      for (int k = 0; k < m; ++k) map[sub.exp(k)] = pow(y, k);
      bool additive = true;
      for (int a = 0; a < sub.q_ && additive; ++a)
        for (int b = 0; b < sub.q_ && additive; ++b)
          if (map[sub.add(a, b)] != add(map[a], map[b])) additive = false;
      if (additive) return map;
    }
    throw error("field: no embedding found");  // unreachable for t | e
  }

 private:
  int p_, e_, q_, gen_ = 0;
  std::vector<int> poly_;
  std::vector<int> exp_, log_;

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static long long ipow(long long b, int k) {
    long long r = 1;
    while (k--) r *= b;
    return r;
  }

  void check(int a) const {
    if (!is_element(a)) throw error("field: element out of range");
  }

  void build_prime_field() {
    for (int g = 1; g < q_; ++g)
      if (try_tables([&](int a) { return a * g % q_; })) {
        gen_ = g;
        return;
      }
    throw error("field: no primitive root found");  // unreachable
  }

  void build_extension_field() {
    // multiply by x modulo x^e + sum c_i x^i, digits base p
    for (int cval = 1; cval < q_; ++cval) {
      std::vector<int> c(e_);
      int t = cval;
      for (int i = 0; i < e_; ++i) {
        c[i] = t % p_;
        t /= p_;
      }
      auto mulx = [&](int a) {
        int carry = a / (q_ / p_);  // leading digit
        int shifted = (a % (q_ / p_)) * p_;
        if (carry == 0) return shifted;
        // subtract carry * (sum c_i x^i)
        int out = shifted, mult = 1;
        for (int i = 0; i < e_; ++i) {
          int d = (out / mult) % p_;
          d = (d - carry * c[i]) % p_;
          if (d < 0) d += p_;
          out += (d - (out / mult) % p_) * mult;
          mult *= p_;
        }
        return out;
      };
      if (try_tables(mulx)) {
        poly_ = std::move(c);
        gen_ = p_;
        return;
      }
    }
    throw error("field: no defining polynomial found");  // unreachable
  }

  // Fills exp/log by iterating `step` from 1; succeeds when the orbit of 1
  // has length exactly q-1 (every nonzero residue is a power of the
  // generator).
  template <class Step>
  bool try_tables(Step&& step) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      if (log_[x] >= 0) return false;  // premature cycle
      exp_[k] = x;
      log_[x] = k;
      x = step(x);
    }
    return x == 1;
  }
};

}  // namespace ptd
