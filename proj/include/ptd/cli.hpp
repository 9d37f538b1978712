#pragma once

// The command-line front end.  cli_main is the whole program: it takes the
// argument vector (without the program name) plus the two output streams, so
// the test suite can drive every subcommand in-process.  Exit status
// contract: 0 = success, 1 = a verification that ran and reported failure,
// 2 = usage or input-format errors (malformed data files carry file:line
// diagnostics).

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptd/certify.hpp"
#include "ptd/search.hpp"

namespace ptd {

namespace detail {

// A bad invocation, as opposed to bad data inside a well-named file.
class usage_error : public error {
  using error::error;
};

// Parsed "--key value" pairs after the subcommand.  `allowed` maps each
// flag name to whether it consumes a value; boolean flags store "1".
struct FlagSet {
  std::string subcommand;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }

  const std::string& require(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end())
      throw usage_error(subcommand + ": missing required flag --" + key);
    return it->second;
  }

  long long require_int(const std::string& key) const {
    return to_int(key, require(key));
  }

  long long int_or(const std::string& key, long long fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : to_int(key, it->second);
  }

  long long to_int(const std::string& key, const std::string& text) const {
    try {
      size_t used = 0;
      long long v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw usage_error(subcommand + ": flag --" + key +
                      " expects an integer, found '" + text + "'");
  }
};

inline FlagSet parse_flags(const std::vector<std::string>& args,
                           const std::map<std::string, bool>& allowed) {
  FlagSet fs;
  fs.subcommand = args.front();
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0)
      throw usage_error(fs.subcommand + ": expected a --flag, found '" + tok +
                        "'");
    std::string key = tok.substr(2);
    auto it = allowed.find(key);
    if (it == allowed.end())
      throw usage_error(fs.subcommand + ": unknown flag --" + key);
    if (fs.values.count(key))
      throw usage_error(fs.subcommand + ": flag --" + key + " given twice");
    if (!it->second) {
      fs.values[key] = "1";
      continue;
    }
    if (i + 1 >= args.size())
      throw usage_error(fs.subcommand + ": flag --" + key + " needs a value");
    fs.values[key] = args[++i];
  }
  return fs;
}

inline std::string parameter_line(const DesignParameters& par) {
  if (!par.k || !par.lambda) return "not a t-design (t>=2)";
  std::ostringstream os;
  os << "2-(" << par.v << ',' << *par.k << ',' << *par.lambda << ')';
  if (par.r) os << " r=" << *par.r;
  os << " t-max=" << par.t_max;
  return os.str();
}

inline void print_usage(std::ostream& out) {
  out << "usage: ptd <subcommand> [--flag value ...]\n"
         "\n"
         "subcommands:\n"
         "  construct   --tag TAG [--out FILE.dsg] [--group-out FILE.grp]\n"
         "              (or --list to enumerate the catalogue tags)\n"
         "  group       --file FILE.grp\n"
         "  params      --design FILE.dsg\n"
         "  verify      --design FILE.dsg --group FILE.grp"
         " [--mode fast|brute|both]\n"
         "  certify-all [--max-points N] [--out FILE]\n"
         "  gammal1     --p P --d D --i I --j J --t T\n"
         "  zsigmondy   --p P --d D\n"
         "  search      --group FILE.grp [--k K | --kmin A --kmax B]\n"
         "\n"
         "bundled data files are looked up in ./data unless the\n"
         "PTD_DATA_DIR environment variable points elsewhere.\n";
}

inline int cmd_construct(const FlagSet& fs, std::ostream& out) {
  std::vector<CatalogRow> rows = catalog();
  if (fs.has("list")) {
    for (const auto& row : rows) out << row.tag << '\n';
    return 0;
  }
  const std::string& tag = fs.require("tag");
  for (const auto& row : rows) {
    if (row.tag != tag) continue;
    DesignParameters par = parameters(row.design);
    out << "tag: " << row.tag << '\n';
    out << "label: " << row.design.label() << '\n';
    out << "points: " << par.v << '\n';
    out << "blocks: " << par.b << '\n';
    out << "parameters: " << parameter_line(par) << '\n';
    if (par.mu) out << "mu: " << *par.mu << '\n';
    if (row.group)
      out << "group: " << row.group->label() << " order=" << row.group->order()
          << '\n';
    else
      out << "group: absent\n";
    if (fs.has("out")) {
      save_design_file(row.design, fs.values.at("out"));
      out << "wrote: " << fs.values.at("out") << '\n';
    }
    if (fs.has("group-out")) {
      if (!row.group)
        throw usage_error("construct: row " + tag + " has no bundled group");
      save_group_file(*row.group, fs.values.at("group-out"));
      out << "wrote: " << fs.values.at("group-out") << '\n';
    }
    return 0;
  }
  throw usage_error("construct: unknown catalogue tag '" + tag +
                    "' (run 'construct --list')");
}

inline int cmd_group(const FlagSet& fs, std::ostream& out) {
  Group g = load_group_file(fs.require("file"));
  out << "label: " << (g.label().empty() ? "(unlabelled)" : g.label()) << '\n';
  out << "degree: " << g.degree() << '\n';
  out << "order: " << g.order() << '\n';
  out << "transitivity: " << g.transitivity_degree() << '\n';
  if (g.is_transitive()) {
    out << "rank: " << g.rank() << '\n';
    out << "suborbits:";
    for (size_t s : g.suborbit_sizes()) out << ' ' << s;
    out << '\n';
  }
  return 0;
}

inline int cmd_params(const FlagSet& fs, std::ostream& out) {
  Design d = load_design_file(fs.require("design"));
  DesignParameters par = parameters(d);
  if (!d.label().empty()) out << "label: " << d.label() << '\n';
  out << "points: " << par.v << '\n';
  out << "blocks: " << par.b << '\n';
  out << "parameters: " << parameter_line(par) << '\n';
  if (par.k && par.lambda) {
    out << "profile: " << profile_string(par) << '\n';
    if (par.mu) out << "mu: " << *par.mu << '\n';
  }
  return 0;
}

inline int cmd_verify(const FlagSet& fs, std::ostream& out, std::ostream& err) {
  Design d = load_design_file(fs.require("design"));
  Group g = load_group_file(fs.require("group"));
  std::string mode = fs.has("mode") ? fs.values.at("mode") : "both";
  if (mode != "fast" && mode != "brute" && mode != "both")
    throw usage_error("verify: --mode must be fast, brute or both");

  DesignParameters par = parameters(d);
  out << "design: " << (d.label().empty() ? "(unlabelled)" : d.label()) << ' '
      << parameter_line(par) << " b=" << par.b << '\n';
  out << "group: " << (g.label().empty() ? "(unlabelled)" : g.label())
      << " degree=" << g.degree() << " order=" << g.order() << '\n';

  std::optional<PairwiseReport> fast, brute;
  bool degenerate = structural_checks(d).trivial || !par.lambda;
  if (mode == "fast" || mode == "both") {
    if (degenerate && mode == "both")
      out << "fast: skipped (degenerate design)\n";
    else
      fast = fast_verify(d, g);
  }
  if (mode == "brute" || mode == "both") brute = brute_verify(d, g);
  if (fast) out << "fast: " << pairwise_line(*fast) << '\n';
  if (brute) out << "brute: " << pairwise_line(*brute) << '\n';

  bool verdict = brute ? brute->verdict : fast->verdict;
  if (fast && brute &&
      (fast->point_pairs != brute->point_pairs || fast->flags != brute->flags ||
       fast->antiflags != brute->antiflags ||
       fast->intersecting_block_pairs != brute->intersecting_block_pairs ||
       fast->disjoint_block_pairs != brute->disjoint_block_pairs ||
       fast->verdict != brute->verdict)) {
    err << "verify: the two verification routes disagree\n";
    out << "verdict: false\n";
    return 1;
  }
  out << "verdict: " << (verdict ? "true" : "false") << '\n';
  return verdict ? 0 : 1;
}

inline int cmd_certify_all(const FlagSet& fs, std::ostream& out,
                           std::ostream& err) {
  long long max_points = fs.int_or("max-points", 200);
  if (max_points < 1)
    throw usage_error("certify-all: --max-points must be positive");
  CertificationRun run = certify_all(static_cast<int>(max_points));
  if (fs.has("out")) {
    std::ofstream file(fs.values.at("out"));
    if (!file) throw error("cannot write " + fs.values.at("out"));
    file << run.text();
    out << "wrote: " << fs.values.at("out") << '\n';
    out << "certified: " << run.passed << " passed, " << run.failed
        << " failed, " << run.skipped << " skipped\n";
  } else {
    out << run.text();
  }
  if (!run.all_pass()) {
    for (const auto& c : run.certificates)
      if (c.status == "fail") err << "failed: " << c.tag << ": " << c.detail << '\n';
    return 1;
  }
  return 0;
}

inline int cmd_gammal1(const FlagSet& fs, std::ostream& out) {
  GammaL1Subgroup s{fs.require_int("p"), fs.require_int("d"),
                    fs.require_int("i"), fs.require_int("j"),
                    fs.require_int("t")};
  gammal1_validate(s);
  out << "transitive: " << (gammal1_is_transitive(s) ? "yes" : "no") << '\n';
  out << "order: " << gammal1_order(s) << '\n';
  return 0;
}

inline int cmd_zsigmondy(const FlagSet& fs, std::ostream& out) {
  std::vector<long long> ppd =
      zsigmondy_ppd(fs.require_int("p"), fs.require_int("d"));
  out << "primitive-prime-divisors:";
  if (ppd.empty()) out << " none";
  for (long long q : ppd) out << ' ' << q;
  out << '\n';
  return 0;
}

inline int cmd_search(const FlagSet& fs, std::ostream& out) {
  Group g = load_group_file(fs.require("group"));
  if (fs.has("k") && (fs.has("kmin") || fs.has("kmax")))
    throw usage_error("search: give either --k or --kmin/--kmax, not both");
  long long kmin, kmax;
  if (fs.has("k")) {
    kmin = kmax = fs.require_int("k");
  } else {
    kmin = fs.int_or("kmin", 3);
    kmax = fs.int_or("kmax", g.degree() / 2);
  }
  if (kmin > kmax) throw usage_error("search: --kmin exceeds --kmax");
  std::vector<SearchResult> hits = search_small(
      g, static_cast<int>(kmin), static_cast<int>(kmax));
  for (const auto& h : hits) {
    out << "hit: k=" << h.k << " parameters=2-(" << h.params.v << ','
        << *h.params.k << ',' << *h.params.lambda << ") b=" << h.params.b;
    if (h.params.mu) out << " mu=" << *h.params.mu;
    out << " rep={";
    for (size_t i = 0; i < h.representative.size(); ++i)
      out << (i ? "," : "") << h.representative[i];
    out << "} verdict=" << (h.report.verdict ? "true" : "false") << '\n';
  }
  out << "hits: " << hits.size() << '\n';
  return 0;
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  using namespace detail;
  if (args.empty()) {
    print_usage(err);
    return 2;
  }
  const std::string& sub = args.front();
  if (sub == "help" || sub == "--help" || sub == "-h") {
    print_usage(out);
    return 0;
  }
  try {
    if (sub == "construct")
      return cmd_construct(
          parse_flags(args, {{"tag", true},
                             {"out", true},
                             {"group-out", true},
                             {"list", false}}),
          out);
    if (sub == "group") return cmd_group(parse_flags(args, {{"file", true}}), out);
    if (sub == "params")
      return cmd_params(parse_flags(args, {{"design", true}}), out);
    if (sub == "verify")
      return cmd_verify(
          parse_flags(args, {{"design", true}, {"group", true}, {"mode", true}}),
          out, err);
    if (sub == "certify-all")
      return cmd_certify_all(
          parse_flags(args, {{"max-points", true}, {"out", true}}), out, err);
    if (sub == "gammal1")
      return cmd_gammal1(parse_flags(args, {{"p", true},
                                            {"d", true},
                                            {"i", true},
                                            {"j", true},
                                            {"t", true}}),
                         out);
    if (sub == "zsigmondy")
      return cmd_zsigmondy(parse_flags(args, {{"p", true}, {"d", true}}), out);
    if (sub == "search")
      return cmd_search(parse_flags(args, {{"group", true},
                                           {"k", true},
                                           {"kmin", true},
                                           {"kmax", true}}),
                        out);
    err << "unknown subcommand '" << sub << "'\n";
    print_usage(err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ptd
