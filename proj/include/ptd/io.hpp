#pragma once

// Line-oriented text formats for groups (.grp), designs (.dsg) and code
// generator matrices (.code), with line-numbered diagnostics, plus the
// bundled-data directory lookup and the validated Golay code loaders.

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ptd/code.hpp"
#include "ptd/design.hpp"
#include "ptd/group.hpp"

namespace ptd {

// Malformed or inconsistent input data (distinct from usage errors so the
// command line tool can map it to its own exit status).
class parse_error : public error {
 public:
  parse_error(const std::string& path, int line, const std::string& what)
      : error(path + ":" + std::to_string(line) + ": " + what) {}
};

inline std::string data_directory() {
  if (const char* env = std::getenv("PTD_DATA_DIR")) return env;
#ifdef PTD_DEFAULT_DATA_DIR
  return PTD_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

namespace detail {

struct Line {
  int number;
  std::string text;
};

inline std::vector<Line> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t a = raw.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t");
    std::string text = raw.substr(a, b - a + 1);
    if (text[0] == '#') continue;
    out.push_back({number, std::move(text)});
  }
  return out;
}

inline long long parse_int(const std::string& path, int line,
                           const std::string& token, const char* what) {
  try {
    size_t used = 0;
    long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw parse_error(path, line, std::string("expected ") + what +
                                      ", found '" + token + "'");
  }
}

}  // namespace detail

// .grp: `degree N`; `perm i0 i1 ... i_{N-1}` per generator (0-based images);
// optional `label <text>`, `expect-order <n>` (order verified via the
// stabilizer chain) and `expect-transitive <k>` (exact transitivity degree);
// `#` comments.
inline Group load_group_file(const std::string& path) {
  int degree = -1;
  std::string label;
  long long expect_order = -1;
  int expect_transitive = -1;
  int expect_transitive_line = 0, expect_order_line = 0;
  std::vector<Permutation> gens;

  for (const auto& [number, text] : detail::read_lines(path)) {
    std::istringstream ss(text);
    std::string key;
    ss >> key;
    if (key == "degree") {
      std::string tok;
      ss >> tok;
      degree = static_cast<int>(detail::parse_int(path, number, tok, "degree"));
      if (degree < 1) throw parse_error(path, number, "degree must be positive");
    } else if (key == "label") {
      std::getline(ss, label);
      size_t a = label.find_first_not_of(" \t");
      label = a == std::string::npos ? "" : label.substr(a);
    } else if (key == "expect-order") {
      std::string tok;
      ss >> tok;
      expect_order = detail::parse_int(path, number, tok, "group order");
      expect_order_line = number;
    } else if (key == "expect-transitive") {
      std::string tok;
      ss >> tok;
      expect_transitive = static_cast<int>(
          detail::parse_int(path, number, tok, "transitivity degree"));
      expect_transitive_line = number;
    } else if (key == "perm") {
      if (degree < 0)
        throw parse_error(path, number, "perm line before degree header");
      std::vector<int> img;
      std::string tok;
      while (ss >> tok)
        img.push_back(
            static_cast<int>(detail::parse_int(path, number, tok, "image")));
      if (static_cast<int>(img.size()) != degree)
        throw parse_error(path, number,
                          "perm line has " + std::to_string(img.size()) +
                              " images, expected " + std::to_string(degree));
      try {
        gens.emplace_back(std::move(img));
      } catch (const error& e) {
        throw parse_error(path, number, e.what());
      }
    } else {
      throw parse_error(path, number, "unknown directive '" + key + "'");
    }
  }
  if (degree < 0) throw parse_error(path, 1, "missing degree header");

  Group g(degree, std::move(gens), std::move(label));
  if (expect_order >= 0 && g.order() != static_cast<unsigned long long>(expect_order))
    throw parse_error(path, expect_order_line,
                      "group order is " + std::to_string(g.order()) +
                          ", expected " + std::to_string(expect_order));
  if (expect_transitive >= 0 && g.transitivity_degree() != expect_transitive)
    throw parse_error(
        path, expect_transitive_line,
        "transitivity degree is " + std::to_string(g.transitivity_degree()) +
            ", expected " + std::to_string(expect_transitive));
  return g;
}

// .dsg: `points V`; `block p1 p2 ...` per block (0-based, strictly
// ascending); optional `label <text>`, `expect k <n>`, `expect lambda <n>`;
// `#` comments.
inline Design load_design_file(const std::string& path) {
  int points = -1;
  std::string label;
  long long expect_k = -1, expect_lambda = -1;
  int expect_k_line = 0, expect_lambda_line = 0;
  std::vector<std::vector<int>> blocks;

  for (const auto& [number, text] : detail::read_lines(path)) {
    std::istringstream ss(text);
    std::string key;
    ss >> key;
    if (key == "points") {
      std::string tok;
      ss >> tok;
      points =
          static_cast<int>(detail::parse_int(path, number, tok, "point count"));
      if (points < 1)
        throw parse_error(path, number, "point count must be positive");
    } else if (key == "label") {
      std::getline(ss, label);
      size_t a = label.find_first_not_of(" \t");
      label = a == std::string::npos ? "" : label.substr(a);
    } else if (key == "expect") {
      std::string which, tok;
      ss >> which >> tok;
      if (which == "k") {
        expect_k = detail::parse_int(path, number, tok, "block size");
        expect_k_line = number;
      } else if (which == "lambda") {
        expect_lambda = detail::parse_int(path, number, tok, "pair count");
        expect_lambda_line = number;
      } else {
        throw parse_error(path, number, "expect must name k or lambda");
      }
    } else if (key == "block") {
      if (points < 0)
        throw parse_error(path, number, "block line before points header");
      std::vector<int> blk;
      std::string tok;
      while (ss >> tok)
        blk.push_back(
            static_cast<int>(detail::parse_int(path, number, tok, "point")));
      if (blk.empty()) throw parse_error(path, number, "empty block");
      for (size_t i = 0; i < blk.size(); ++i) {
        if (blk[i] < 0 || blk[i] >= points)
          throw parse_error(path, number, "point out of range");
        if (i > 0 && blk[i] <= blk[i - 1])
          throw parse_error(path, number, "block points must be ascending");
      }
      blocks.push_back(std::move(blk));
    } else {
      throw parse_error(path, number, "unknown directive '" + key + "'");
    }
  }
  if (points < 0) throw parse_error(path, 1, "missing points header");
  if (blocks.empty()) throw parse_error(path, 1, "no blocks");

  Design d(points, std::move(blocks), std::move(label));
  if (expect_k >= 0)
    for (int j = 0; j < d.block_count(); ++j)
      if (static_cast<long long>(d.block(j).size()) != expect_k)
        throw parse_error(path, expect_k_line,
                          "block size " + std::to_string(d.block(j).size()) +
                              " differs from expected " +
                              std::to_string(expect_k));
  if (expect_lambda >= 0) {
    DesignParameters p = parameters(d, 2);
    if (!p.lambda || *p.lambda != expect_lambda)
      throw parse_error(path, expect_lambda_line,
                        "pair coverage does not match expected lambda " +
                            std::to_string(expect_lambda));
  }
  return d;
}

// Writes a group in the .grp format read by load_group_file.  The order is
// emitted as an expect-order line so that reloading re-verifies it.
inline void save_group_file(const Group& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << "degree " << g.degree() << '\n';
  if (!g.label().empty()) out << "label " << g.label() << '\n';
  out << "expect-order " << g.order() << '\n';
  for (const auto& p : g.generators()) {
    out << "perm";
    for (int i = 0; i < p.degree(); ++i) out << ' ' << p(i);
    out << '\n';
  }
  if (!out) throw error("write failed for " + path);
}

// Writes a design in the .dsg format read by load_design_file.  Uniform
// block size and pair coverage, when present, are emitted as expect lines
// so that reloading re-verifies them.
inline void save_design_file(const Design& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << "points " << d.points() << '\n';
  if (!d.label().empty()) out << "label " << d.label() << '\n';
  DesignParameters par = parameters(d, 2);
  if (par.k) out << "expect k " << *par.k << '\n';
  if (par.lambda) out << "expect lambda " << *par.lambda << '\n';
  for (const auto& blk : d.blocks()) {
    out << "block";
    for (int p : blk) out << ' ' << p;
    out << '\n';
  }
  if (!out) throw error("write failed for " + path);
}

// .code: `field p e`; `length n`; `dim k`; then k rows of n digits.
inline LinearCode load_code_file(const std::string& path) {
  int p = -1, e = -1, length = -1, dim = -1;
  std::vector<std::vector<int>> rows;
  int last_line = 1;

  for (const auto& [number, text] : detail::read_lines(path)) {
    last_line = number;
    std::istringstream ss(text);
    std::string key;
    ss >> key;
    if (key == "field") {
      std::string tp, te;
      ss >> tp >> te;
      p = static_cast<int>(detail::parse_int(path, number, tp, "characteristic"));
      e = static_cast<int>(detail::parse_int(path, number, te, "degree"));
    } else if (key == "length") {
      std::string tok;
      ss >> tok;
      length = static_cast<int>(detail::parse_int(path, number, tok, "length"));
    } else if (key == "dim") {
      std::string tok;
      ss >> tok;
      dim = static_cast<int>(detail::parse_int(path, number, tok, "dimension"));
    } else {
      // a digit row
      if (p < 0 || length < 0 || dim < 0)
        throw parse_error(path, number, "digit row before complete header");
      std::string extra;
      if (static_cast<int>(key.size()) != length || (ss >> extra))
        throw parse_error(path, number, "expected a row of " +
                                            std::to_string(length) + " digits");
      std::vector<int> row;
      for (char c : key) {
        if (c < '0' || c > '9')
          throw parse_error(path, number, "invalid digit");
        row.push_back(c - '0');
      }
      rows.push_back(std::move(row));
    }
  }
  if (p < 0) throw parse_error(path, last_line, "missing field header");
  if (length < 0) throw parse_error(path, last_line, "missing length header");
  if (dim < 0) throw parse_error(path, last_line, "missing dim header");
  if (static_cast<int>(rows.size()) != dim)
    throw parse_error(path, last_line,
                      "have " + std::to_string(rows.size()) +
                          " rows, expected " + std::to_string(dim));
  Fq f;
  try {
    f = make_field(p, e);
  } catch (const error& err) {
    throw parse_error(path, last_line, err.what());
  }
  for (const auto& row : rows)
    for (int digit : row)
      if (digit >= f->size())
        throw parse_error(path, last_line, "digit exceeds field size");
  try {
    return LinearCode(FqMatrix::from_rows(f, rows));
  } catch (const error& err) {
    throw parse_error(path, last_line, err.what());
  }
}

inline Group load_group(const std::string& name) {
  return load_group_file(data_directory() + "/" + name);
}

// The two bundled Golay codes, by characteristic; their defining weight
// facts are re-verified on every load so a corrupted data file cannot
// propagate silently.
inline LinearCode golay_code(int characteristic) {
  if (characteristic == 2) {
    LinearCode c = load_code_file(data_directory() + "/golay24.code");
    const auto& wt = c.weight_enumerator();
    if (c.length() != 24 || c.dimension() != 12 || c.minimum_weight() != 8 ||
        wt[8] != 759)
      throw error("golay24.code does not define the binary Golay code");
    return c;
  }
  if (characteristic == 3) {
    LinearCode c = load_code_file(data_directory() + "/golay12.code");
    const auto& wt = c.weight_enumerator();
    if (c.length() != 12 || c.dimension() != 6 || c.minimum_weight() != 6 ||
        wt[12] != 24)
      throw error("golay12.code does not define the ternary Golay code");
    return c;
  }
  throw error("golay_code: characteristic must be 2 or 3");
}

}  // namespace ptd
