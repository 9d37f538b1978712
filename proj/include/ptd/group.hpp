#pragma once

// Finite permutation groups with deterministic Schreier-Sims stabilizer
// chains (Sims 1970; see also Holt, Eick & O'Brien, "Handbook of
// Computational Group Theory", ch. 4).
//
// The chain is deterministic: base points are either prescribed by the
// caller or chosen as the smallest moved point whenever a new one is
// needed, and orbits are extended in breadth-first order with generators
// applied in list order.  Two runs over the same generator list therefore
// produce identical chains, transversals and orders.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <utility>

#include "ptd/perm.hpp"

namespace ptd {

inline std::vector<int> orbit_of(int degree, const std::vector<Permutation>& gens,
                                 int point) {
  if (point < 0 || point >= degree) throw error("orbit: point out of range");
  std::vector<int> orb{point};
  std::vector<char> seen(degree, 0);
  seen[point] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens) {
      int y = g(orb[i]);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

inline std::vector<std::vector<int>> orbits_of(int degree,
                                               const std::vector<Permutation>& gens) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree, 0);
  for (int p = 0; p < degree; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(degree, gens, p);
    for (int x : orb) seen[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

class StabilizerChain {
 public:
  // base_prefix: points forced to head the base, in the given order (they
  // stay even if their orbits are trivial, so that level 1 of the finished
  // chain generates the stabilizer of base_prefix[0], and so on).
  StabilizerChain(int degree, std::vector<Permutation> gens,
                  std::vector<int> base_prefix = {})
      : degree_(degree) {
    std::vector<Permutation> clean;
    for (auto& g : gens) {
      if (g.degree() != degree) throw error("chain: generator degree mismatch");
      if (!g.is_identity()) clean.push_back(std::move(g));
    }
    std::vector<char> in_base(degree, 0);
    for (int b : base_prefix) {
      if (b < 0 || b >= degree) throw error("chain: base point out of range");
      if (!in_base[b]) {
        in_base[b] = 1;
        levels_.push_back(Level{b});
      }
    }
    for (const auto& g : clean) {
      bool moves_base = false;
      for (const auto& L : levels_)
        if (g(L.base_point) != L.base_point) {
          moves_base = true;
          break;
        }
      if (!moves_base) {
        int p = smallest_moved(g);
        in_base[p] = 1;
        levels_.push_back(Level{p});
      }
    }
    if (!levels_.empty()) levels_[0].gens = std::move(clean);
    run_schreier_sims();
  }

  int degree() const { return degree_; }
  size_t num_levels() const { return levels_.size(); }

  std::vector<int> base() const {
    std::vector<int> b;
    for (const auto& L : levels_) b.push_back(L.base_point);
    return b;
  }

  std::vector<size_t> orbit_sizes() const {
    std::vector<size_t> s;
    for (const auto& L : levels_) s.push_back(L.orbit.size());
    return s;
  }

  const std::vector<int>& level_orbit(size_t i) const { return levels_.at(i).orbit; }

  // Strong generators fixing base[0..i-1]; level 0 holds the input
  // generators.  An index past the last level means the trivial group.
  std::vector<Permutation> level_generators(size_t i) const {
    if (i >= levels_.size()) return {};
    return levels_[i].gens;
  }

  uint64_t order() const {
    uint64_t n = 1;
    for (const auto& L : levels_)
      if (__builtin_mul_overflow(n, (uint64_t)L.orbit.size(), &n))
        throw error("chain: group order exceeds 64 bits");
    return n;
  }

  // Strips p through the chain starting at `start`.  Returns the residue;
  // *drop (if given) receives the level at which stripping stopped
  // (== num_levels() when p sifted all the way through).
  Permutation sift(const Permutation& p, int* drop = nullptr,
                   size_t start = 0) const {
    if (p.degree() != degree_) throw error("chain: sift degree mismatch");
    Permutation h = p;
    for (size_t l = start; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      int beta = h(L.base_point);
      if (beta == L.base_point) continue;
      int pos = L.where[beta];
      if (pos < 0) {
        if (drop) *drop = static_cast<int>(l);
        return h;
      }
      h = h * L.trans[pos].inverse();
    }
    if (drop) *drop = static_cast<int>(levels_.size());
    return h;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return sift(p).is_identity();
  }

  // Transversal element of level i mapping base[i] to `point`.
  Permutation transversal(size_t i, int point) const {
    const Level& L = levels_.at(i);
    int pos = L.where[point];
    if (pos < 0) throw error("chain: point not in level orbit");
    return L.trans[pos];
  }

  bool in_level_orbit(size_t i, int point) const {
    return levels_.at(i).where[point] >= 0;
  }

 private:
  struct Level {
    explicit Level(int b) : base_point(b) {}
    int base_point;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> where;
    std::vector<Permutation> trans;
  };

  int degree_;
  std::vector<Level> levels_;

  static int smallest_moved(const Permutation& g) {
    for (int x = 0; x < g.degree(); ++x)
      if (g(x) != x) return x;
    throw error("chain: identity has no moved point");
  }

  void recompute_orbit(Level& L) const {
    L.orbit.assign(1, L.base_point);
    L.where.assign(degree_, -1);
    L.where[L.base_point] = 0;
    L.trans.assign(1, Permutation::identity(degree_));
    for (size_t i = 0; i < L.orbit.size(); ++i)
      for (const auto& g : L.gens) {
        int y = g(L.orbit[i]);
        if (L.where[y] < 0) {
          L.where[y] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(y);
          L.trans.push_back(L.trans[i] * g);
        }
      }
  }

  void add_generator(size_t level, const Permutation& g) {
    for (const auto& h : levels_[level].gens)
      if (h == g) return;
    levels_[level].gens.push_back(g);
  }

  // Verifies Schreier closure of one level against the deeper part of the
  // chain.  On violation registers the residue and reports the deepest
  // level whose generating set changed.
  bool verify_level(size_t i, size_t* dirty) {
    Level& L = levels_[i];
    recompute_orbit(L);
    for (size_t oi = 0; oi < L.orbit.size(); ++oi)
      for (const auto& s : L.gens) {
        Permutation u = L.trans[oi] * s;
        int image = u(L.base_point);
        Permutation schreier = u * L.trans[L.where[image]].inverse();
        if (schreier.is_identity()) continue;
        int drop = 0;
        Permutation residue = sift(schreier, &drop, i + 1);
        if (residue.is_identity()) continue;
        if (drop == static_cast<int>(levels_.size()))
          levels_.push_back(Level{smallest_moved(residue)});
        for (size_t l = i + 1; l <= static_cast<size_t>(drop); ++l)
          add_generator(l, residue);
        *dirty = static_cast<size_t>(drop);
        return false;
      }
    return true;
  }

  void run_schreier_sims() {
    if (levels_.empty()) return;
    for (auto& L : levels_) recompute_orbit(L);
    // Invariant: levels deeper than i are Schreier-closed.
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0;) {
      size_t dirty = 0;
      if (verify_level(static_cast<size_t>(i), &dirty))
        --i;
      else
        i = static_cast<int>(dirty);
    }
  }
};

class Group {
 public:
  Group() : degree_(0) {}
  Group(int degree, std::vector<Permutation> gens, std::string label = "")
      : degree_(degree), gens_(std::move(gens)), label_(std::move(label)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw error("group: generator degree mismatch");
  }

  static Group trivial(int degree) { return Group(degree, {}, "1"); }

  static Group symmetric(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
      std::vector<std::vector<int>> cyc{{0, 1}};
      gens.push_back(Permutation::from_cycles(degree, cyc));
      if (degree >= 3) {
        std::vector<int> full(degree);
        std::iota(full.begin(), full.end(), 0);
        gens.push_back(Permutation::from_cycles(degree, {full}));
      }
    }
    return Group(degree, std::move(gens), "Sym(" + std::to_string(degree) + ")");
  }

  static Group alternating(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 3) {
      gens.push_back(Permutation::from_cycles(degree, {{0, 1, 2}}));
      if (degree >= 4) {
        std::vector<int> tail;
        for (int i = degree % 2 == 0 ? 1 : 0; i < degree; ++i) tail.push_back(i);
        gens.push_back(Permutation::from_cycles(degree, {tail}));
      }
    }
    return Group(degree, std::move(gens), "Alt(" + std::to_string(degree) + ")");
  }

  static Group cyclic(int degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
      std::vector<int> full(degree);
      std::iota(full.begin(), full.end(), 0);
      gens.push_back(Permutation::from_cycles(degree, {full}));
    }
    return Group(degree, std::move(gens), "C" + std::to_string(degree));
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  // The chain is built on first use and shared afterwards; the lock makes
  // concurrent first calls from different threads safe.  Once set it is
  // never replaced, so the returned reference stays valid.
  const StabilizerChain& chain() const {
    static std::mutex gate;
    std::scoped_lock lock(gate);
    if (!chain_) chain_ = std::make_shared<StabilizerChain>(degree_, gens_);
    return *chain_;
  }

  StabilizerChain chain_with_base(std::vector<int> base_prefix) const {
    return StabilizerChain(degree_, gens_, std::move(base_prefix));
  }

  uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& p) const { return chain().contains(p); }

  bool is_subgroup_of(const Group& super) const {
    if (degree_ != super.degree_) return false;
    for (const auto& g : gens_)
      if (!super.contains(g)) return false;
    return true;
  }

  std::vector<int> orbit(int point) const { return orbit_of(degree_, gens_, point); }
  std::vector<std::vector<int>> orbits() const { return orbits_of(degree_, gens_); }

  bool is_transitive() const {
    return degree_ > 0 && (int)orbit(0).size() == degree_;
  }

  // Largest t <= cap with G t-transitive (0 when intransitive): checks that
  // successive point stabilizers act with full orbits.
  int transitivity_degree(int cap = 6) const {
    if (degree_ == 0) return 0;
    cap = std::min(cap, degree_);
    std::vector<int> prefix(cap);
    std::iota(prefix.begin(), prefix.end(), 0);
    StabilizerChain ch(degree_, gens_, prefix);
    int t = 0;
    for (int i = 0; i < cap; ++i) {
      if ((int)ch.level_orbit(i).size() != degree_ - i) break;
      ++t;
    }
    return t;
  }

  Group point_stabilizer(int point) const {
    StabilizerChain ch(degree_, gens_, {point});
    return Group(degree_, ch.level_generators(1),
                 label_.empty() ? "" : label_ + "_" + std::to_string(point));
  }

  // Stabilizer of an ordered tuple of points.
  Group tuple_stabilizer(const std::vector<int>& points) const {
    StabilizerChain ch(degree_, gens_, points);
    return Group(degree_, ch.level_generators(points.size()));
  }

  // Number of orbits of the stabilizer of `point` (the permutation rank
  // when the group is transitive).
  int rank(int point = 0) const {
    return static_cast<int>(point_stabilizer(point).orbits().size());
  }

  std::vector<size_t> suborbit_sizes(int point = 0) const {
    std::vector<size_t> sizes;
    for (const auto& o : point_stabilizer(point).orbits())
      sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  Group normal_closure(std::vector<Permutation> seeds) const {
    std::vector<Permutation> ngens;
    std::shared_ptr<StabilizerChain> ch;
    auto known = [&](const Permutation& p) {
      if (p.is_identity()) return true;
      return ch && ch->contains(p);
    };
    std::queue<Permutation> work;
    for (auto& s : seeds) work.push(std::move(s));
    while (!work.empty()) {
      Permutation x = std::move(work.front());
      work.pop();
      if (known(x)) continue;
      ngens.push_back(x);
      ch = std::make_shared<StabilizerChain>(degree_, ngens);
      for (const auto& g : gens_) work.push(g.inverse() * x * g);
    }
    return Group(degree_, std::move(ngens));
  }

  Group derived_subgroup() const {
    std::vector<Permutation> comms;
    for (const auto& a : gens_)
      for (const auto& b : gens_) {
        Permutation c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    Group d = normal_closure(std::move(comms));
    if (!label_.empty()) d.set_label(label_ + "'");
    return d;
  }

  // Restriction to an invariant initial segment [0, prefix_len).
  Group restriction(int prefix_len, std::string label = "") const {
    std::vector<Permutation> rg;
    for (const auto& g : gens_) {
      std::vector<int> img(prefix_len);
      for (int x = 0; x < prefix_len; ++x) {
        int y = g(x);
        if (y >= prefix_len)
          throw error("restriction: segment is not invariant");
        img[x] = y;
      }
      rg.push_back(Permutation(std::move(img)));
    }
    return Group(prefix_len, std::move(rg), std::move(label));
  }

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::string label_;
  mutable std::shared_ptr<StabilizerChain> chain_;
};

// Action of a group on a family of objects closed under the group: apply()
// must map (permutation, object) to an object that compares equal to some
// member of `objects`.  Objects are indexed by their position in the given
// list.  Throws if the family is not closed.
template <class Obj, class Apply>
Group action_on(const Group& g, const std::vector<Obj>& objects, Apply&& apply,
                std::string label = "") {
  std::map<Obj, int> index;
  for (size_t i = 0; i < objects.size(); ++i) {
    if (!index.emplace(objects[i], static_cast<int>(i)).second)
      throw error("action: duplicate object in family");
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> img(objects.size());
    for (size_t i = 0; i < objects.size(); ++i) {
      auto it = index.find(apply(s, objects[i]));
      if (it == index.end())
        throw error("action: object family is not closed under the group");
      img[i] = it->second;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return Group(static_cast<int>(objects.size()), std::move(gens), std::move(label));
}

// ---------------------------------------------------------------------------
// Orbit counting on pairs, block systems, coset actions.

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n), size_(n, 1), classes_(n) {
    for (size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --classes_;
    return true;
  }
  size_t classes() const { return classes_; }
  size_t component_size(size_t x) { return size_[find(x)]; }

 private:
  std::vector<size_t> parent_;
  std::vector<size_t> size_;
  size_t classes_;
};

}  // namespace detail

// Number of orbits of <gens> on { (x,y) in left × right : related(x,y) }.
// Both index sets and the relation must be invariant under the group; a
// violation is an error.  Returns 0 when no pair qualifies.
template <class Rel>
size_t orbit_count_on_pairs(int degree, const std::vector<Permutation>& gens,
                            const std::vector<int>& left,
                            const std::vector<int>& right, Rel&& related) {
  size_t n = static_cast<size_t>(degree);
  std::vector<char> qual(n * n, 0);
  size_t qualifying = 0;
  for (int x : left)
    for (int y : right) {
      if (x < 0 || x >= degree || y < 0 || y >= degree)
        throw error("orbit count: index out of range");
      if (related(x, y)) {
        qual[static_cast<size_t>(x) * n + y] = 1;
        ++qualifying;
      }
    }
  if (qualifying == 0) return 0;
  detail::UnionFind uf(n * n);
  for (int x : left)
    for (int y : right) {
      if (!qual[static_cast<size_t>(x) * n + y]) continue;
      for (const auto& g : gens) {
        size_t to = static_cast<size_t>(g(x)) * n + g(y);
        if (!qual[to])
          throw error("orbit count: relation is not invariant under the group");
        uf.unite(static_cast<size_t>(x) * n + y, to);
      }
    }
  // Count classes among qualifying pairs only.
  std::vector<char> counted(n * n, 0);
  size_t orbits = 0;
  for (size_t i = 0; i < n * n; ++i) {
    if (!qual[i]) continue;
    size_t r = uf.find(i);
    if (!counted[r]) {
      counted[r] = 1;
      ++orbits;
    }
  }
  return orbits;
}

// Convenience overload over the full ground set on both sides.
template <class Rel>
size_t orbit_count_on_pairs(int degree, const std::vector<Permutation>& gens,
                            Rel&& related) {
  std::vector<int> all(degree);
  std::iota(all.begin(), all.end(), 0);
  return orbit_count_on_pairs(degree, gens, all, all,
                              std::forward<Rel>(related));
}

// Finest G-invariant partition in which a and b share a part (Atkinson's
// algorithm).  Returned as the partition's class index per point.
inline std::vector<int> minimal_block_system(int degree,
                                             const std::vector<Permutation>& gens,
                                             int a, int b) {
  detail::UnionFind uf(degree);
  std::vector<std::pair<int, int>> stack{{a, b}};
  uf.unite(a, b);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int u = g(x), v = g(y);
      if (uf.unite(u, v)) stack.emplace_back(u, v);
    }
  }
  std::vector<int> cls(degree, -1);
  int next = 0;
  for (int p = 0; p < degree; ++p) {
    size_t r = uf.find(p);
    if (cls[r] < 0) cls[r] = next++;
    cls[p] = cls[r];
  }
  return cls;
}

struct PrimitivityReport {
  bool transitive = false;
  bool primitive = false;
  // A nontrivial block system when imprimitive (class index per point for
  // the first witness found scanning companions of point 0 in order).
  std::vector<int> block_system;
  size_t block_size = 0;
};

inline PrimitivityReport primitivity(const Group& g) {
  PrimitivityReport rep;
  rep.transitive = g.is_transitive();
  if (!rep.transitive) return rep;
  if (g.degree() == 1) {
    rep.primitive = true;
    return rep;
  }
  for (int x = 1; x < g.degree(); ++x) {
    auto cls = minimal_block_system(g.degree(), g.generators(), 0, x);
    int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
    if (nclasses > 1) {
      rep.primitive = false;
      rep.block_system = std::move(cls);
      rep.block_size = static_cast<size_t>(g.degree()) / nclasses;
      return rep;
    }
  }
  rep.primitive = true;
  return rep;
}

// Summary of one permutation action: orbit structure of a point stabilizer
// plus primitivity.  For an intransitive group the rank field still counts
// the stabilizer's orbits, but the transitive / two_transitive / primitive
// flags stay unset and no block system is reported.
struct ActionReport {
  bool transitive = false;
  int rank = 0;
  bool two_transitive = false;
  std::vector<size_t> suborbit_sizes;  // sorted ascending, includes the fixed point
  bool primitive = false;
  std::vector<int> minimal_block_system;  // class per point; empty if none found
  size_t block_size = 0;
};

inline ActionReport action_report(const Group& g) {
  ActionReport rep;
  rep.suborbit_sizes = g.suborbit_sizes(0);
  rep.rank = static_cast<int>(rep.suborbit_sizes.size());
  rep.transitive = g.is_transitive();
  if (!rep.transitive) return rep;
  rep.two_transitive = rep.rank == 2;
  PrimitivityReport pr = primitivity(g);
  rep.primitive = pr.primitive;
  rep.minimal_block_system = std::move(pr.block_system);
  rep.block_size = pr.block_size;
  return rep;
}

// Action of g on the right cosets of a subgroup h, by right multiplication.
// Cosets are identified by their lexicographically least element (as an
// image vector), found by walking a chain of h with fully prescribed base.
// When `faithful` is given it receives whether the action has trivial
// kernel (image order equal to |g|).
inline Group coset_action(const Group& g, const Group& h, bool* faithful = nullptr,
                          size_t max_index = 100000) {
  if (g.degree() != h.degree())
    throw error("coset action: degree mismatch between group and subgroup");
  if (!h.is_subgroup_of(g))
    throw error("coset action: not a subgroup");
  std::vector<int> full_base(g.degree());
  std::iota(full_base.begin(), full_base.end(), 0);
  StabilizerChain hch(h.degree(), h.generators(), full_base);
  auto min_rep = [&](Permutation x) {
    // Minimize (u * x) over u in h, level by level: at level l the image of
    // base point l under u*x runs over x-images of the level-l orbit.
    for (size_t l = 0; l < hch.num_levels(); ++l) {
      const auto& orb = hch.level_orbit(l);
      int best_point = orb[0], best_val = x(orb[0]);
      for (int p : orb)
        if (x(p) < best_val) {
          best_val = x(p);
          best_point = p;
        }
      x = hch.transversal(l, best_point) * x;
    }
    return x;
  };
  uint64_t go = g.order(), ho = hch.order();
  if (go % ho != 0) throw error("coset action: order does not divide");
  uint64_t index = go / ho;
  if (index > max_index) throw error("coset action: index too large");
  std::map<std::vector<int>, int> id_of;
  std::vector<Permutation> reps;
  auto intern = [&](const Permutation& rep) {
    auto [it, fresh] = id_of.emplace(rep.images(), (int)reps.size());
    if (fresh) reps.push_back(rep);
    return it->second;
  };
  intern(min_rep(Permutation::identity(g.degree())));
  for (size_t i = 0; i < reps.size(); ++i) {
    Permutation cur = reps[i];  // reps grows; copy before use
    for (const auto& s : g.generators()) intern(min_rep(cur * s));
  }
  if (reps.size() != index)
    throw error("coset action: enumerated " + std::to_string(reps.size()) +
                " cosets, expected " + std::to_string(index));
  std::vector<Permutation> agens;
  for (const auto& s : g.generators()) {
    std::vector<int> img(reps.size());
    for (size_t i = 0; i < reps.size(); ++i)
      img[i] = id_of.at(min_rep(reps[i] * s).images());
    agens.push_back(Permutation(std::move(img)));
  }
  Group act((int)reps.size(), std::move(agens),
            g.label().empty() ? "" : g.label() + " on cosets");
  if (faithful) *faithful = act.order() == go;
  return act;
}

}  // namespace ptd
