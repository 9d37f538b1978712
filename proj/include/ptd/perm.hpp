#pragma once

// Permutations of {0, ..., n-1} stored as image vectors.
//
// Composition is left-to-right: (p * q)(x) = q(p(x)).  This is the
// convention of most computational group theory systems; products of
// transversal elements read in application order.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptd {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
        throw error("permutation: image list is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  // Cycle notation input, e.g. from_cycles(5, {{0,1,2},{3,4}}).
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        int from = c[i], to = c[(i + 1) % c.size()];
        if (from < 0 || from >= degree)
          throw error("permutation: cycle point out of range");
        img[from] = to;
      }
    }
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
    Permutation r;
    r.img_ = std::move(inv);
    return r;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
      throw error("permutation: degree mismatch in product");
    std::vector<int> img(p.img_.size());
    for (int x = 0; x < p.degree(); ++x) img[x] = q.img_[p.img_[x]];
    Permutation r;
    r.img_ = std::move(img);
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

  // Order of the permutation as an element (lcm of cycle lengths).
  uint64_t element_order() const {
    std::vector<char> seen(img_.size(), 0);
    uint64_t ord = 1;
    for (int x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      uint64_t len = 0;
      for (int y = x; !seen[y]; y = img_[y]) {
        seen[y] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      std::vector<int> c;
      for (int y = x; !seen[y]; y = img_[y]) {
        seen[y] = 1;
        c.push_back(y);
      }
      if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
    }
    return out;
  }

  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

 private:
  std::vector<int> img_;
};

}  // namespace ptd
