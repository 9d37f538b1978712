#pragma once

// Incidence designs with explicit point-set blocks, their numerical
// parameters, classical transforms (complement, dual, derived, residual),
// and structural predicates.  Background: Lander, "Symmetric Designs: An
// Algebraic Approach"; Beth, Jungnickel & Lenz, "Design Theory".

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include "ptd/group.hpp"

namespace ptd {

class Design {
 public:
  // Blocks are sorted internally; the block list itself is sorted
  // lexicographically unless keep_order is set (the dual transform keeps
  // its natural order so that taking the dual twice is the identity).
  Design(int v, std::vector<std::vector<int>> blocks, std::string label = "",
         bool keep_order = false)
      : v_(v), blocks_(std::move(blocks)), label_(std::move(label)) {
    if (v_ <= 0) throw error("design: need at least one point");
    if (blocks_.empty()) throw error("design: need at least one block");
    for (auto& b : blocks_) {
      if (b.empty()) throw error("design: empty block");
      std::sort(b.begin(), b.end());
      for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] >= v_) throw error("design: point out of range");
        if (i > 0 && b[i] == b[i - 1])
          throw error("design: repeated point inside a block");
      }
    }
    if (!keep_order) std::sort(blocks_.begin(), blocks_.end());
  }

  int points() const { return v_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_.at(i); }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  bool incident(int point, int block) const {
    const auto& b = blocks_.at(block);
    return std::binary_search(b.begin(), b.end(), point);
  }

  // Blocks as bitmasks over points (64-bit words), for intersection counts.
  std::vector<std::vector<uint64_t>> block_bitsets() const {
    size_t words = (v_ + 63) / 64;
    std::vector<std::vector<uint64_t>> bs(blocks_.size(),
                                          std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < blocks_.size(); ++i)
      for (int p : blocks_[i]) bs[i][p / 64] |= uint64_t(1) << (p % 64);
    return bs;
  }

  // Per-point incidence bitmasks over block indices.
  std::vector<std::vector<uint64_t>> point_bitsets() const {
    size_t words = (blocks_.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> ps(v_, std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < blocks_.size(); ++i)
      for (int p : blocks_[i]) ps[p][i / 64] |= uint64_t(1) << (i % 64);
    return ps;
  }

  bool operator==(const Design& o) const {
    return v_ == o.v_ && blocks_ == o.blocks_;
  }

 private:
  int v_;
  std::vector<std::vector<int>> blocks_;
  std::string label_;
};

struct DesignParameters {
  int v = 0;
  int b = 0;
  std::optional<int> k;          // block size when uniform
  std::optional<int> r;          // point degree when uniform
  std::optional<long long> lambda;  // pair coverage when a 2-design
  int t_max = 0;                 // largest t <= cap with uniform positive t-coverage
  std::map<int, long long> intersection_profile;  // |B ∩ B'| -> pair count
  std::optional<int> mu;         // the nonzero size when profile is {0, mu}

  bool is_2_design() const { return lambda.has_value(); }
};

inline DesignParameters parameters(const Design& d, int t_cap = 5) {
  DesignParameters out;
  out.v = d.points();
  out.b = d.block_count();

  bool uniform = true;
  size_t k0 = d.block(0).size();
  for (const auto& b : d.blocks())
    if (b.size() != k0) uniform = false;
  if (uniform) out.k = static_cast<int>(k0);

  std::vector<long long> degree(d.points(), 0);
  for (const auto& b : d.blocks())
    for (int p : b) ++degree[p];
  if (std::all_of(degree.begin(), degree.end(),
                  [&](long long x) { return x == degree[0]; }))
    out.r = static_cast<int>(degree[0]);

  // t-design ladder: uniform positive coverage of all t-subsets, t <= cap.
  if (uniform) {
    auto pts = d.point_bitsets();
    size_t words = pts.empty() ? 0 : pts[0].size();
    int cap = std::min<int>(t_cap, static_cast<int>(k0));
    for (int t = 1; t <= cap; ++t) {
      long long common = -1;
      bool ok = true;
      std::vector<uint64_t> acc(words);
      // iterate over t-subsets of points with an index stack
      std::vector<int> idx(t);
      for (int i = 0; i < t; ++i) idx[i] = i;
      if (d.points() < t) break;
      while (ok) {
        std::fill(acc.begin(), acc.end(), ~uint64_t(0));
        for (int i = 0; i < t; ++i)
          for (size_t w = 0; w < words; ++w) acc[w] &= pts[idx[i]][w];
        long long cnt = 0;
        for (uint64_t w : acc) cnt += __builtin_popcountll(w);
        if (common < 0)
          common = cnt;
        else if (cnt != common)
          ok = false;
        // advance combination
        int i = t - 1;
        while (i >= 0 && idx[i] == d.points() - t + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!ok || common <= 0) break;
      out.t_max = t;
      if (t == 2) out.lambda = common;
    }
  }

  // intersection profile over unordered block pairs
  auto bits = d.block_bitsets();
  for (size_t i = 0; i < bits.size(); ++i)
    for (size_t j = i + 1; j < bits.size(); ++j) {
      int meet = 0;
      for (size_t w = 0; w < bits[i].size(); ++w)
        meet += __builtin_popcountll(bits[i][w] & bits[j][w]);
      ++out.intersection_profile[meet];
    }
  if (out.intersection_profile.size() == 2 &&
      out.intersection_profile.begin()->first == 0)
    out.mu = std::next(out.intersection_profile.begin())->first;
  return out;
}

inline bool is_symmetric(const Design& d) {
  auto p = parameters(d);
  return p.is_2_design() && p.b == p.v;
}

// Exactly two distinct intersection sizes; returns them (ascending) when so.
inline bool is_quasisymmetric(const Design& d, std::pair<int, int>* sizes = nullptr) {
  auto p = parameters(d);
  if (p.intersection_profile.size() != 2) return false;
  if (sizes) {
    auto it = p.intersection_profile.begin();
    sizes->first = it->first;
    sizes->second = std::next(it)->first;
  }
  return true;
}

inline Design complement_design(const Design& d) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(d.block_count());
  for (const auto& b : d.blocks()) {
    std::vector<int> c;
    c.reserve(d.points() - b.size());
    size_t at = 0;
    for (int p = 0; p < d.points(); ++p) {
      if (at < b.size() && b[at] == p)
        ++at;
      else
        c.push_back(p);
    }
    if (c.empty()) throw error("complement: block covers every point");
    blocks.push_back(std::move(c));
  }
  return Design(d.points(), std::move(blocks),
                d.label().empty() ? "" : d.label() + "^c");
}

// Incidence transpose.  Block i of the dual is the pencil of point i, kept
// in point order (not re-sorted) so that dual(dual(D)) == D literally.
inline Design dual_design(const Design& d) {
  std::vector<std::vector<int>> blocks(d.points());
  for (int j = 0; j < d.block_count(); ++j)
    for (int p : d.block(j)) blocks[p].push_back(j);
  return Design(d.block_count(), std::move(blocks),
                d.label().empty() ? "" : d.label() + "^*", /*keep_order=*/true);
}

namespace detail {
inline std::vector<int> drop_point(const std::vector<int>& b, int p) {
  std::vector<int> out;
  out.reserve(b.size());
  for (int x : b)
    if (x != p) out.push_back(x > p ? x - 1 : x);
  return out;
}
}  // namespace detail

// Blocks through p, with p removed; points above p shift down by one.
inline Design derived_design(const Design& d, int p) {
  if (p < 0 || p >= d.points()) throw error("derived: point out of range");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.blocks())
    if (std::binary_search(b.begin(), b.end(), p)) {
      auto nb = detail::drop_point(b, p);
      if (nb.empty()) throw error("derived: block was a single point");
      blocks.push_back(std::move(nb));
    }
  if (blocks.empty()) throw error("derived: no block through the point");
  return Design(d.points() - 1, std::move(blocks),
                d.label().empty() ? "" : d.label() + "_der");
}

// Blocks missing p, on the remaining points.
inline Design residual_design(const Design& d, int p) {
  if (p < 0 || p >= d.points()) throw error("residual: point out of range");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.blocks())
    if (!std::binary_search(b.begin(), b.end(), p))
      blocks.push_back(detail::drop_point(b, p));
  if (blocks.empty()) throw error("residual: every block passes through the point");
  return Design(d.points() - 1, std::move(blocks),
                d.label().empty() ? "" : d.label() + "_res");
}

struct StructuralChecks {
  bool connected = false;
  bool repeated_blocks = false;
  bool repeated_points = false;
  bool trivial = false;  // fails 2 < k < v (degenerate as a 2-design)
};

inline StructuralChecks structural_checks(const Design& d) {
  StructuralChecks out;

  // connectivity of the bipartite incidence graph
  int n = d.points() + d.block_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x < d.points()) {
      for (int j = 0; j < d.block_count(); ++j)
        if (!seen[d.points() + j] && d.incident(x, j)) {
          seen[d.points() + j] = 1;
          ++reached;
          stack.push_back(d.points() + j);
        }
    } else {
      for (int p : d.block(x - d.points()))
        if (!seen[p]) {
          seen[p] = 1;
          ++reached;
          stack.push_back(p);
        }
    }
  }
  out.connected = reached == n;

  for (int j = 1; j < d.block_count(); ++j)
    if (d.block(j) == d.block(j - 1)) out.repeated_blocks = true;
  // dual may keep natural order; compare all pairs when short, sort copies otherwise
  if (!out.repeated_blocks) {
    auto sorted = d.blocks();
    std::sort(sorted.begin(), sorted.end());
    for (size_t j = 1; j < sorted.size(); ++j)
      if (sorted[j] == sorted[j - 1]) out.repeated_blocks = true;
  }

  auto pts = d.point_bitsets();
  std::sort(pts.begin(), pts.end());
  for (size_t p = 1; p < pts.size(); ++p)
    if (pts[p] == pts[p - 1]) out.repeated_points = true;

  auto par = parameters(d);
  out.trivial = !(par.k.has_value() && 2 < *par.k && *par.k < par.v);
  return out;
}

// ---------------------------------------------------------------------------
// Group action on blocks induced from the point action.

// Permutation of block indices induced by a point permutation.  Repeated
// blocks are matched in index order inside each run of equal content.  An
// image block missing from the list is a preservation error.
inline Permutation induced_block_permutation(const Design& d, const Permutation& g) {
  if (g.degree() != d.points())
    throw error("block action: permutation degree differs from point count");
  std::map<std::vector<int>, std::vector<int>> where;
  for (int j = 0; j < d.block_count(); ++j) where[d.block(j)].push_back(j);
  auto cursor = where;  // next unused index per content
  std::vector<int> img(d.block_count());
  for (int j = 0; j < d.block_count(); ++j) {
    std::vector<int> image;
    image.reserve(d.block(j).size());
    for (int p : d.block(j)) image.push_back(g(p));
    std::sort(image.begin(), image.end());
    auto it = cursor.find(image);
    if (it == cursor.end() || it->second.empty())
      throw error("block action: group does not preserve the block list");
    img[j] = it->second.front();
    it->second.erase(it->second.begin());
  }
  return Permutation(std::move(img));
}

inline Group induced_block_action(const Design& d, const Group& g) {
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& s : g.generators())
    gens.push_back(induced_block_permutation(d, s));
  return Group(d.block_count(), std::move(gens),
               g.label().empty() ? "" : g.label() + " on blocks");
}

// ---------------------------------------------------------------------------
// Nicely-affine detection: block orbits of N are parallel classes and any
// two blocks from different orbits meet in the same number of points.

struct NicelyAffineReport {
  bool holds = false;
  std::vector<std::vector<int>> orbit_partition;  // block indices per N-orbit
  std::optional<int> mu;                          // cross-orbit intersection size
  std::string failure;                            // empty when holds
};

inline NicelyAffineReport nicely_affine(const Design& d, const Group& n) {
  NicelyAffineReport rep;
  Group onb = induced_block_action(d, n);  // throws if not preserved
  rep.orbit_partition = onb.orbits();

  if (!n.is_transitive()) {
    rep.failure = "group is not transitive on points";
    return rep;
  }

  auto bits = d.block_bitsets();
  auto meet = [&](int i, int j) {
    int m = 0;
    for (size_t w = 0; w < bits[i].size(); ++w)
      m += __builtin_popcountll(bits[i][w] & bits[j][w]);
    return m;
  };
  std::vector<int> orbit_of(d.block_count());
  for (size_t o = 0; o < rep.orbit_partition.size(); ++o)
    for (int j : rep.orbit_partition[o]) orbit_of[j] = static_cast<int>(o);

  for (int i = 0; i < d.block_count(); ++i)
    for (int j = i + 1; j < d.block_count(); ++j) {
      int m = meet(i, j);
      if (orbit_of[i] == orbit_of[j]) {
        if (m != 0) {
          rep.failure = "blocks in one orbit intersect";
          return rep;
        }
      } else {
        if (rep.mu && *rep.mu != m) {
          rep.failure = "cross-orbit intersection sizes differ";
          return rep;
        }
        rep.mu = m;
      }
    }
  rep.holds = true;
  return rep;
}

}  // namespace ptd
