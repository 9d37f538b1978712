#pragma once

// The design/group pairs of the classification: complete designs,
// projective and affine geometries, quadratic-form designs, the designs
// derived from the Golay codes (Hadamard 3-design, Witt design on 22
// points, Higman's geometry), hyperovals of PG(2,4), the coset-regular
// affine construction, and a fixed catalog of desk-scale instances with
// their expected parameters and verdicts.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptd/code.hpp"
#include "ptd/design.hpp"
#include "ptd/geometry.hpp"
#include "ptd/group.hpp"
#include "ptd/io.hpp"
#include "ptd/quadform.hpp"

namespace ptd {

// ---------------------------------------------------------------------------
// Elementary groups and designs.

inline Group symmetric_group(int n) {
  if (n < 1) throw error("symmetric group: degree must be positive");
  std::vector<Permutation> gens;
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  gens.emplace_back(std::move(cycle));
  if (n > 2) {
    std::vector<int> swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    gens.emplace_back(std::move(swap01));
  }
  return Group(n, std::move(gens), "Sym(" + std::to_string(n) + ")");
}

inline Group alternating_group(int n) {
  if (n < 3) throw error("alternating group: degree must be at least 3");
  std::vector<Permutation> gens;
  std::vector<int> three(n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1, three[1] = 2, three[2] = 0;
  gens.emplace_back(std::move(three));
  // an n-cycle for odd n, an (n-1)-cycle fixing 0 for even n
  std::vector<int> big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    big[0] = 0;
    for (int i = 1; i < n; ++i) big[i] = i % (n - 1) + 1;
  }
  gens.emplace_back(std::move(big));
  return Group(n, std::move(gens), "Alt(" + std::to_string(n) + ")");
}

// Every k-subset of {0..v-1} as one block.
inline Design complete_design(int v, int k) {
  if (k <= 1 || k > v)
    throw error("complete design: need 1 < k <= v");
  std::vector<std::vector<int>> blocks;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    blocks.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == v - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Design(v, std::move(blocks),
                "C(" + std::to_string(v) + "," + std::to_string(k) + ")");
}

// ---------------------------------------------------------------------------
// Prime power factorization for q-parametrised constructors.

inline Fq field_of_order(int q) {
  if (q < 2) throw error("field: order must be at least 2");
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;  // q itself is prime
  int e = 0;
  int rest = q;
  while (rest % p == 0) rest /= p, ++e;
  if (rest != 1)
    throw error("field: " + std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

// ---------------------------------------------------------------------------
// Projective designs and their classical groups.

inline Design pg_design(int d, int q, ProjectiveKind kind) {
  if (kind == ProjectiveKind::points)
    throw error("pg design: blocks must be lines or hyperplanes");
  if (kind == ProjectiveKind::hyperplanes && d <= 2)
    throw error("pg design: hyperplane design needs dimension d > 2");
  if (kind == ProjectiveKind::lines && d < 4)
    throw error("pg design: line design needs dimension d >= 4");
  auto f = field_of_order(q);
  auto objects = projective_objects(f, d, kind);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(objects.size());
  for (const auto& s : objects) blocks.push_back(points_in_subspace(f, d, s));
  int sub = kind == ProjectiveKind::hyperplanes ? d - 2 : 1;
  std::string label = "PG_" + std::to_string(sub) + "(" + std::to_string(d - 1) +
                      "," + std::to_string(q) + ")";
  return Design(static_cast<int>(gaussian_binomial(d, 1, q)),
                std::move(blocks), std::move(label));
}

inline Group psl_group(int d, int q) {
  auto f = field_of_order(q);
  return projective_action(f, d, sl_generators(f, d),
                           "PSL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

inline Group pgl_group(int d, int q) {
  auto f = field_of_order(q);
  return projective_action(f, d, gl_generators(f, d),
                           "PGL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

inline Group psigmal_group(int d, int q) {
  auto f = field_of_order(q);
  return semilinear_closure(psl_group(d, q), f, d, /*projective=*/true,
                            "PSigmaL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

inline Group pgammal_group(int d, int q) {
  auto f = field_of_order(q);
  return semilinear_closure(pgl_group(d, q), f, d, /*projective=*/true,
                            "PGammaL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

// ---------------------------------------------------------------------------
// Affine designs and groups.

inline Design ag_design(int f, int q) {
  return affine_hyperplane_cosets(field_of_order(q), f);
}

// Adjoin the translations to a linear group on the vectors of GF(q)^d.
inline Group affine_extension(const Fq& f, int d, const Group& linear,
                              std::string label) {
  Group trans = translation_group(f, d);
  if (linear.degree() != trans.degree())
    throw error("affine extension: degree mismatch with the vector space");
  auto gens = trans.generators();
  for (const auto& s : linear.generators()) gens.push_back(s);
  return Group(trans.degree(), std::move(gens), std::move(label));
}

inline Group asl_group(int f, int q) {
  auto fld = field_of_order(q);
  return affine_group(fld, f, sl_generators(fld, f),
                      "ASL(" + std::to_string(f) + "," + std::to_string(q) + ")");
}

inline Group agl_group(int f, int q) {
  auto fld = field_of_order(q);
  return affine_group(fld, f, gl_generators(fld, f),
                      "AGL(" + std::to_string(f) + "," + std::to_string(q) + ")");
}

inline Group agammal_group(int f, int q) {
  auto fld = field_of_order(q);
  Group base = affine_group(fld, f, gl_generators(fld, f));
  auto gens = base.generators();
  gens.push_back(frobenius_on_vectors(fld, f));
  return Group(base.degree(), std::move(gens),
               "AGammaL(" + std::to_string(f) + "," + std::to_string(q) + ")");
}

// AGammaL(1,16) in the point labeling of AG(2,4).
inline Group agammal1_on_plane() {
  auto f16 = make_field(2, 4);
  auto f4 = make_field(2, 2);
  return relabel_points(agammal1(f16), subfield_plane_relabeling(f16, f4),
                        "AGammaL(1,16)");
}

// ---------------------------------------------------------------------------
// Quadratic form designs S^-(2m) and S^+(2m).  Points are the 2^{2m}
// vectors, blocks the 2^{2m} forms polarising to the standard alternating
// form; a form is incident with its zeros when elliptic and its ones when
// hyperbolic, which gives every block size 2^{2m-1} - 2^{m-1} and makes
// the translations act (a translate of a form picks up a constant, turning
// zeros of one type into ones of the other).

inline Design quadratic_forms_design(int m, char sign) {
  if (m < 2 || m > 7)
    throw error("quadratic forms design: need 2 <= m <= 7");
  if (sign != '-' && sign != '+')
    throw error("quadratic forms design: sign must be '-' or '+'");
  auto forms = forms_polarising_standard(m);
  int n = 1 << (2 * m);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(forms.size());
  for (const auto& q : forms) {
    int want;
    if (q.type() == QuadraticForm::Type::elliptic)
      want = 0;
    else if (q.type() == QuadraticForm::Type::hyperbolic)
      want = 1;
    else
      throw error("quadratic forms design: degenerate member in the family");
    std::vector<int> blk;
    for (int x = 0; x < n; ++x)
      if (q.evaluate(x) == want) blk.push_back(x);
    blocks.push_back(std::move(blk));
  }
  Design minus(n, std::move(blocks), "S^-(" + std::to_string(2 * m) + ")");
  if (sign == '-') return minus;
  Design plus = complement_design(minus);
  return Design(plus.points(), plus.blocks(),
                "S^+(" + std::to_string(2 * m) + ")");
}

// 2^{2m}:Sp(2m,2), the full automorphism group of S^-(2m).
inline Group affine_symplectic_group(int m) {
  auto f2 = make_field(2);
  return affine_extension(f2, 2 * m, symplectic_group(m),
                          "2^" + std::to_string(2 * m) + ":Sp(" +
                              std::to_string(2 * m) + ",2)");
}

// ---------------------------------------------------------------------------
// The Alt(7) inside GL(4,2), from the bundled matrix data.  The file stores
// the generators as permutations of the 16 vectors; we re-verify that they
// fix the origin and act GF(2)-linearly before trusting them.

inline Group alt7_linear_group() {
  Group g = load_group("a7_gl42.grp");
  if (g.degree() != 16)
    throw error("alternating matrix data: expected degree 16");
  for (const auto& s : g.generators()) {
    if (s(0) != 0)
      throw error("alternating matrix data: generator moves the origin");
    for (int x = 0; x < 16; ++x)
      for (int y = 0; y < 16; ++y)
        if (s(x ^ y) != (s(x) ^ s(y)))
          throw error("alternating matrix data: generator is not linear");
  }
  return g;
}

inline std::vector<FqMatrix> alt7_matrices() {
  Group g = alt7_linear_group();
  auto f2 = make_field(2);
  std::vector<FqMatrix> out;
  for (const auto& s : g.generators()) {
    FqMatrix mat(f2, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) mat.set(i, j, (s(1 << i) >> j) & 1);
    out.push_back(std::move(mat));
  }
  return out;
}

// Alt(7) acting 2-transitively on the 15 points of PG(3,2) (= the nonzero
// vectors of GF(2)^4, shifted down by one).
inline Group alt7_on_pg32() {
  Group g = alt7_linear_group();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> img(15);
    for (int x = 1; x < 16; ++x) img[x - 1] = s(x) - 1;
    gens.emplace_back(std::move(img));
  }
  return Group(15, std::move(gens), "Alt(7)");
}

// ---------------------------------------------------------------------------
// Designs from the Golay codes and the bundled sporadic groups.

struct GolayDesigns {
  Design h12;               // the Hadamard 3-(12,6,2) design
  Group m11;                // its full automorphism group, degree 12
  Design h11;               // derived at the extension coordinate: 2-(11,5,2)
  Group psl211;             // PSL(2,11), the stabilizer of that coordinate
  Design m22_design;        // the 2-(22,6,5) Witt design on hexads
  Group m22;                // two-point stabilizer of the bundled M24
  Design d176;              // Higman's symmetric 2-(176,50,14) geometry
  std::optional<Group> hs;  // bundled Higman-Sims group, when present
};

inline GolayDesigns golay_designs() {
  // H(12): the 22 weight-12 ternary Golay words other than +-(1,...,1),
  // each contributing its +1 positions as a block.
  LinearCode ternary = golay_code(3);
  std::vector<int> ones(12, 1), twos(12, 2);
  std::vector<std::vector<int>> h12_blocks;
  for (const auto& w : ternary.words_of_weight(12)) {
    if (w == ones || w == twos) continue;
    h12_blocks.push_back(entries_equal(w, 1));
  }
  Design h12(12, std::move(h12_blocks), "H(12)");
  Group m11 = load_group("m11_deg12.grp");

  Design h11raw = derived_design(h12, 11);
  Design h11(h11raw.points(), h11raw.blocks(), "H(11)");
  Group psl211 = m11.point_stabilizer(11).restriction(11, "PSL(2,11)");

  // The Witt design on 22 points: octads of the binary Golay code through
  // the two highest coordinates, with those coordinates removed.
  LinearCode binary = golay_code(2);
  auto octads = binary.words_of_weight(8);
  std::vector<std::vector<int>> hexads;
  for (const auto& w : octads) {
    if (w[22] == 1 && w[23] == 1) {
      auto sup = support(w);
      sup.resize(6);  // drop the final entries 22 and 23
      hexads.push_back(std::move(sup));
    }
  }
  Design m22_design(22, std::move(hexads), "M22");
  Group m24 = load_group("m24_deg24.grp");
  Group m22 = m24.point_stabilizer(22).point_stabilizer(23).restriction(22, "M22");

  // Higman's geometry: octads containing exactly one of the two fixed
  // symbols, each family sorted by its coordinate bitmask (low coordinate =
  // low bit); incidence when the octads share 0 or 4 of the other symbols.
  std::vector<uint32_t> pts, quads;
  for (const auto& w : octads) {
    uint32_t mask = 0;
    for (int c = 0; c < 24; ++c)
      if (w[c]) mask |= uint32_t(1) << c;
    bool has22 = (mask >> 22) & 1, has23 = (mask >> 23) & 1;
    if (has22 && !has23) pts.push_back(mask);
    if (has23 && !has22) quads.push_back(mask);
  }
  std::sort(pts.begin(), pts.end());
  std::sort(quads.begin(), quads.end());
  const uint32_t low22 = (uint32_t(1) << 22) - 1;
  std::vector<std::vector<int>> d176_blocks(quads.size());
  for (size_t j = 0; j < quads.size(); ++j)
    for (size_t i = 0; i < pts.size(); ++i) {
      int meet = __builtin_popcount(pts[i] & quads[j] & low22);
      if (meet == 0 || meet == 4)
        d176_blocks[j].push_back(static_cast<int>(i));
    }
  Design d176(static_cast<int>(pts.size()), std::move(d176_blocks), "D176");

  std::optional<Group> hs;
  std::string hs_path = data_directory() + "/hs_deg176.grp";
  if (std::ifstream(hs_path).good()) hs = load_group_file(hs_path);

  return GolayDesigns{std::move(h12),  std::move(m11), std::move(h11),
                      std::move(psl211), std::move(m22_design), std::move(m22),
                      std::move(d176), std::move(hs)};
}

// ---------------------------------------------------------------------------
// The hyperoval design: one PSL(3,4)-orbit of hyperovals of PG(2,4), fixed
// as the orbit of the lexicographically least hyperoval.

inline Design hyperoval_design() {
  auto all = hyperovals_pg24();
  Group psl = psl_group(3, 4);
  std::set<std::vector<int>> orbit{all.front()};
  std::vector<std::vector<int>> frontier{all.front()};
  while (!frontier.empty()) {
    std::vector<int> cur = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : psl.generators()) {
      std::vector<int> img;
      img.reserve(cur.size());
      for (int p : cur) img.push_back(s(p));
      std::sort(img.begin(), img.end());
      if (orbit.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  std::vector<std::vector<int>> blocks(orbit.begin(), orbit.end());
  return Design(21, std::move(blocks), "PG(2,4)^hyp");
}

// ---------------------------------------------------------------------------
// The coset-regular affine construction: given G0 <= GL(d,p) and a suitable
// orbit {M_1,...,M_r} of subspaces, the blocks are all cosets of all M_i
// and the group is the extension of the translations by G0.

struct ConstructionInput {
  Fq field;                                // a prime field GF(p)
  int dim = 0;                             // d
  std::vector<FqMatrix> linear_generators; // generators of G0
  std::vector<Subspace> subspace_orbit;    // M_1, ..., M_r
};

struct AffineConstruction {
  Design design;
  Group group;         // N.G0 on the vectors
  Group translations;  // N, for the nicely-affine check
  Group linear_group;  // G0 on the vectors
};

namespace detail {

// All vector indices lying in a subspace (the span of its basis).
inline std::vector<int> subspace_vector_indices(const Fq& f, int d,
                                                const Subspace& s) {
  long long combos = 1;
  for (int i = 0; i < s.dim(); ++i) combos *= f->size();
  std::set<int> out{0};
  for (long long c = 1; c < combos; ++c) {
    auto coeff = index_to_vec(*f, s.dim(), static_cast<int>(c));
    std::vector<int> v(d, 0);
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < d; ++j)
        v[j] = f->add(v[j], f->mul(coeff[i], s.basis[i][j]));
    out.insert(vec_to_index(*f, v));
  }
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace detail

inline AffineConstruction construction_regN(const ConstructionInput& in,
                                            std::string group_label = "") {
  const Fq& f = in.field;
  int d = in.dim;
  if (f->extension_degree() != 1)
    throw error("construction: the field must be a prime field");
  if (d < 2) throw error("construction: dimension must be at least 2");
  long long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= f->size();
    if (n > 100000) throw error("construction: vector space too large");
  }
  int nv = static_cast<int>(n);

  for (const auto& s : in.subspace_orbit)
    if (s.dim() <= 0 || s.dim() >= d)
      throw error("construction: subspaces must be proper and nonzero");

  Group g0 = vector_action(f, d, in.linear_generators, "G0");
  if (static_cast<long long>(g0.orbit(1).size()) != n - 1)
    throw error(
        "construction: condition (a) fails: the linear group is not "
        "transitive on the nonzero vectors");

  int r = static_cast<int>(in.subspace_orbit.size());
  if (r < 3)
    throw error("construction: condition (b) fails: need at least three subspaces");
  std::optional<Group> on_m_opt;
  try {
    on_m_opt = action_on(g0, in.subspace_orbit,
                         [&](const Permutation& s, const Subspace& sub) {
                           std::vector<std::vector<int>> rows;
                           rows.reserve(sub.basis.size());
                           for (const auto& b : sub.basis) {
                             int img = s(vec_to_index(*f, b));
                             rows.push_back(index_to_vec(*f, d, img));
                           }
                           return span_of(*f, rows);
                         });
  } catch (const error&) {
    throw error(
        "construction: condition (b) fails: the subspace family is not "
        "invariant under the linear group");
  }
  const Group& on_m = *on_m_opt;
  if (static_cast<int>(on_m.orbit(0).size()) != r)
    throw error(
        "construction: condition (b) fails: the subspaces are not a single orbit");
  if (on_m.rank() != 2)
    throw error(
        "construction: condition (b) fails: the action on the subspaces is "
        "not 2-transitive");

  {
    std::vector<std::vector<int>> rows = in.subspace_orbit[0].basis;
    for (const auto& b : in.subspace_orbit[1].basis) rows.push_back(b);
    if (FqMatrix::from_rows(f, rows).rank() != d)
      throw error(
          "construction: condition (c) fails: the first two subspaces do not "
          "span the space");
  }

  // coset decomposition helpers
  auto vector_sum = [&](int x, int y) {
    auto a = index_to_vec(*f, d, x), b = index_to_vec(*f, d, y);
    for (int i = 0; i < d; ++i) a[i] = f->add(a[i], b[i]);
    return vec_to_index(*f, a);
  };
  auto cosets_of = [&](const Subspace& s) {
    auto members = detail::subspace_vector_indices(f, d, s);
    std::vector<int> coset_of(nv, -1);
    std::vector<std::vector<int>> cosets;
    for (int x = 0; x < nv; ++x) {
      if (coset_of[x] >= 0) continue;
      std::vector<int> cs;
      cs.reserve(members.size());
      for (int mvec : members) cs.push_back(vector_sum(x, mvec));
      std::sort(cs.begin(), cs.end());
      for (int y : cs) coset_of[y] = static_cast<int>(cosets.size());
      cosets.push_back(std::move(cs));
    }
    return std::make_pair(std::move(cosets), std::move(coset_of));
  };

  // condition (d): the stabiliser of M_1 inside G0 must act transitively on
  // the nonzero elements of V/M_1
  {
    auto [cosets, coset_of] = cosets_of(in.subspace_orbit[0]);
    std::vector<Permutation> combined;
    for (size_t gi = 0; gi < g0.generators().size(); ++gi) {
      std::vector<int> img(nv + r);
      for (int x = 0; x < nv; ++x) img[x] = g0.generators()[gi](x);
      for (int mi = 0; mi < r; ++mi) img[nv + mi] = nv + on_m.generators()[gi](mi);
      combined.emplace_back(std::move(img));
    }
    Group stab = Group(nv + r, std::move(combined)).point_stabilizer(nv);
    detail::UnionFind uf(cosets.size());
    for (const auto& s : stab.generators())
      for (int x = 0; x < nv; ++x) uf.unite(coset_of[x], coset_of[s(x)]);
    // orbits on nonzero cosets: all must merge into one class
    size_t zero_class = uf.find(coset_of[0]);
    std::set<size_t> nonzero_classes;
    for (size_t c = 0; c < cosets.size(); ++c)
      if (uf.find(c) != zero_class) nonzero_classes.insert(uf.find(c));
    if (cosets.size() > 1 && nonzero_classes.size() != 1)
      throw error(
          "construction: condition (d) fails: the subspace stabiliser is not "
          "transitive on the nonzero quotient elements");
  }

  std::vector<std::vector<int>> blocks;
  for (const auto& s : in.subspace_orbit) {
    auto [cosets, coset_of] = cosets_of(s);
    for (auto& cs : cosets) blocks.push_back(std::move(cs));
  }
  Design dsg(nv, std::move(blocks),
             "regN(" + std::to_string(d) + "," + std::to_string(f->size()) +
                 ";r=" + std::to_string(r) + ")");

  Group trans = translation_group(f, d);
  Group full = affine_extension(f, d, g0,
                                group_label.empty() ? "N:G0" : group_label);
  return AffineConstruction{std::move(dsg), std::move(full), std::move(trans),
                            std::move(g0)};
}

// ---------------------------------------------------------------------------
// The instance catalog: desk-scale design/group pairs for every table row
// of the classification, plus negative and trivial fixtures.  Tags are
// stable identifiers.

struct CatalogRow {
  std::string tag;
  Design design;
  std::optional<Group> group;  // absent: only the parameters are certifiable
  bool expect_verdict = true;
  int expect_v = 0;
  int expect_k = 0;
  long long expect_lambda = 0;
  std::optional<int> expect_mu;      // quasisymmetric rows
  std::optional<Group> translations; // candidate normal subgroup inside group
};

inline std::vector<CatalogRow> catalog() {
  std::vector<CatalogRow> rows;
  auto add = [&rows](std::string tag, Design d, std::optional<Group> g,
                     bool verdict, int v, int k, long long lambda,
                     std::optional<int> mu = std::nullopt,
                     std::optional<Group> trans = std::nullopt) {
    rows.push_back(CatalogRow{std::move(tag), std::move(d), std::move(g),
                              verdict, v, k, lambda, mu, std::move(trans)});
  };
  auto f2 = make_field(2);

  // ----- symmetric designs -----
  add("Table1:line1(5)", complete_design(5, 4), symmetric_group(5), true, 5, 4, 3);
  add("Table1:line1(8)", complete_design(8, 7), symmetric_group(8), true, 8, 7, 6);

  add("Table1:line2(3,2)", pg_design(3, 2, ProjectiveKind::hyperplanes),
      psl_group(3, 2), true, 7, 3, 1);
  add("Table1:line2(3,3)", pg_design(3, 3, ProjectiveKind::hyperplanes),
      psl_group(3, 3), true, 13, 4, 1);
  add("Table1:line2(4,2)", pg_design(4, 2, ProjectiveKind::hyperplanes),
      psl_group(4, 2), true, 15, 7, 3);
  add("Table1:line3", pg_design(4, 2, ProjectiveKind::hyperplanes),
      alt7_on_pg32(), true, 15, 7, 3);

  add("Table1:line4(3,2)", complement_design(pg_design(3, 2, ProjectiveKind::hyperplanes)),
      psl_group(3, 2), true, 7, 4, 2);
  add("Table1:line4(3,3)", complement_design(pg_design(3, 3, ProjectiveKind::hyperplanes)),
      psl_group(3, 3), true, 13, 9, 6);
  add("Table1:line4(4,2)", complement_design(pg_design(4, 2, ProjectiveKind::hyperplanes)),
      psl_group(4, 2), true, 15, 8, 4);
  add("Table1:line5", complement_design(pg_design(4, 2, ProjectiveKind::hyperplanes)),
      alt7_on_pg32(), true, 15, 8, 4);

  GolayDesigns gd = golay_designs();
  add("Table1:line6", gd.h11, gd.psl211, true, 11, 5, 2);
  add("Table1:line7", complement_design(gd.h11), gd.psl211, true, 11, 6, 3);
  add("Table1:line8", gd.d176, gd.hs, true, 176, 50, 14);
  add("Table1:line9", complement_design(gd.d176), gd.hs, true, 176, 126, 90);

  add("Table1:line10(m=2,e=1)", quadratic_forms_design(2, '-'),
      affine_symplectic_group(2), true, 16, 6, 2, std::nullopt,
      translation_group(f2, 4));
  add("Table1:line10(m=2,derived)", quadratic_forms_design(2, '-'),
      affine_extension(f2, 4, symplectic_group(2).derived_subgroup(),
                       "2^4:Sp(4,2)'"),
      true, 16, 6, 2, std::nullopt, translation_group(f2, 4));
  add("Table1:line10(m=2,e=2)", quadratic_forms_design(2, '-'),
      affine_extension(f2, 4,
                       vector_action(f2, 4, symplectic_subfield_generators(2),
                                     "SL(2,4)"),
                       "2^4:SL(2,4)"),
      true, 16, 6, 2, std::nullopt, translation_group(f2, 4));
  add("Table1:line10(m=3,e=1)", quadratic_forms_design(3, '-'),
      affine_symplectic_group(3), true, 64, 28, 12, std::nullopt,
      translation_group(f2, 6));
  add("Table1:line12(m=2,e=1)", quadratic_forms_design(2, '+'),
      affine_symplectic_group(2), true, 16, 10, 6, std::nullopt,
      translation_group(f2, 4));
  add("Table1:line12(m=3,e=1)", quadratic_forms_design(3, '+'),
      affine_symplectic_group(3), true, 64, 36, 20, std::nullopt,
      translation_group(f2, 6));

  // ----- quasisymmetric designs -----
  auto f3 = make_field(3);
  auto f4 = make_field(2, 2);
  add("Table2:line1(3,3)", ag_design(3, 3), asl_group(3, 3), true, 27, 9, 4, 3,
      translation_group(f3, 3));
  add("Table2:line2", ag_design(4, 2),
      affine_extension(f2, 4, alt7_linear_group(), "2^4:Alt(7)"), true, 16, 8,
      7, 4, translation_group(f2, 4));
  add("Table2:line3", ag_design(2, 4), agammal1_on_plane(), true, 16, 4, 1, 1,
      translation_group(f4, 2));
  add("Table2:line4", ag_design(3, 2), load_group("psl27_deg8.grp"), true, 8,
      4, 3, 2);
  add("Table2:line5", gd.h12, gd.m11, true, 12, 6, 5, 3);
  add("Table2:line6", pg_design(4, 2, ProjectiveKind::lines), psl_group(4, 2),
      true, 15, 3, 1, 1);
  add("Table2:line7", hyperoval_design(), psigmal_group(3, 4), true, 21, 6, 4, 2);
  add("Table2:line8", gd.m22_design, gd.m22, true, 22, 6, 5, 2);

  // ----- trivial designs (pairwise transitive but out of scope) -----
  add("triv:C(4,4)", complete_design(4, 4), symmetric_group(4), true, 4, 4, 1);
  add("triv:C(5,2)", complete_design(5, 2), symmetric_group(5), true, 5, 2, 1);

  // ----- negative fixtures -----
  auto binom = [](int a, int b) {
    long long out = 1;
    for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
    return out;
  };
  for (auto [v, k] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {6, 4},
                                                      {7, 3}, {7, 4}, {7, 5},
                                                      {8, 3}, {8, 4}, {8, 5},
                                                      {8, 6}})
    add("neg:C(" + std::to_string(v) + "," + std::to_string(k) + ")",
        complete_design(v, k), symmetric_group(v), false, v, k,
        binom(v - 2, k - 2));

  // Sp(6,2) acting on one type of forms, with the nonzero vectors as blocks
  // (each vector incident with the forms taking a fixed value on it): a
  // 2-design with two orbits on intersecting block pairs and none disjoint.
  for (auto type : {QuadraticForm::Type::hyperbolic, QuadraticForm::Type::elliptic}) {
    bool hyp = type == QuadraticForm::Type::hyperbolic;
    auto forms = forms_polarising_standard(3);
    std::vector<int> keep;
    for (size_t i = 0; i < forms.size(); ++i)
      if (forms[i].type() == type) keep.push_back(static_cast<int>(i));
    int want = hyp ? 1 : 0;
    std::vector<std::vector<int>> blocks;
    for (int b = 1; b < 64; ++b) {
      std::vector<int> blk;
      for (size_t k = 0; k < keep.size(); ++k)
        if (forms[keep[k]].evaluate(b) == want) blk.push_back(static_cast<int>(k));
      blocks.push_back(std::move(blk));
    }
    Design d(static_cast<int>(keep.size()), std::move(blocks),
             hyp ? "Sp62-points-hyperbolic" : "Sp62-points-elliptic");
    add(hyp ? "neg:Sp62-hyperbolic" : "neg:Sp62-elliptic", std::move(d),
        form_type_action(3, type), false, hyp ? 36 : 28, hyp ? 16 : 12,
        hyp ? 12 : 11);
  }

  return rows;
}

}  // namespace ptd
