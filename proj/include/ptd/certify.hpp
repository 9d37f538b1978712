#pragma once

// Certificates for the catalogued design/group pairs.  A certificate records
// the recomputed design parameters, the results of both verification routes
// (exhaustive pair-orbit counting and the stabilizer-orbit conditions), the
// structural classification of the induced block action, and a pass/fail
// status against the catalogue row's expectations.  Certificate bodies are
// plain "key: value" text, byte-for-byte reproducible across runs: timings
// are kept out of the body and every derived quantity is recomputed from the
// block list rather than echoed from the expectation.

#include <chrono>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptd/constructions.hpp"
#include "ptd/verify.hpp"

namespace ptd {

struct Certificate {
  std::string tag;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;  // mismatch list on failure, or a note on a plain pass
  DesignParameters params;
  std::optional<PairwiseReport> fast;
  std::optional<PairwiseReport> brute;
  std::optional<BlockActionReport> block_action;
  double seconds = 0.0;  // wall clock; deliberately excluded from body()

  std::string body() const;
};

namespace detail {

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline std::string pairwise_line(const PairwiseReport& rep) {
  std::ostringstream os;
  os << "point-pairs=" << rep.point_pairs << " flags=" << rep.flags
     << " antiflags=" << rep.antiflags
     << " intersecting=" << rep.intersecting_block_pairs
     << " disjoint=" << rep.disjoint_block_pairs
     << " verdict=" << (rep.verdict ? "true" : "false");
  return os.str();
}

inline std::string profile_string(const DesignParameters& p) {
  if (p.intersection_profile.empty()) return "none";
  std::ostringstream os;
  bool first = true;
  for (const auto& [size, count] : p.intersection_profile) {
    if (!first) os << ' ';
    first = false;
    os << size << '^' << count;
  }
  return os.str();
}

}  // namespace detail

inline std::string Certificate::body() const {
  std::ostringstream os;
  os << "certificate: " << tag << '\n';
  if (status == "skipped") {
    os << "points: " << params.v << '\n';
    os << "status: skipped\n";
    if (!detail.empty()) os << "detail: " << detail << '\n';
    return os.str();
  }
  os << "points: " << params.v << '\n';
  os << "blocks: " << params.b << '\n';
  if (params.k && params.lambda) {
    os << "parameters: 2-(" << params.v << ',' << *params.k << ','
       << *params.lambda << ")";
    if (params.r) os << " r=" << *params.r;
    os << " t-max=" << params.t_max << '\n';
  } else {
    os << "parameters: not a 2-design\n";
  }
  os << "profile: " << detail::profile_string(params) << '\n';
  if (params.mu) os << "mu: " << *params.mu << '\n';
  if (fast) os << "fast: " << detail::pairwise_line(*fast) << '\n';
  if (brute) os << "brute: " << detail::pairwise_line(*brute) << '\n';
  if (block_action) {
    os << "block-action: faithful-points=" << detail::yesno(block_action->faithful_on_points)
       << " faithful-blocks=" << detail::yesno(block_action->faithful_on_blocks)
       << " rank=" << block_action->rank_on_blocks
       << " primitive=" << detail::yesno(block_action->primitive_on_blocks)
       << " symmetry=" << block_action->symmetry
       << " case=" << block_action->imprimitive_case << '\n';
    if (block_action->nicely && block_action->nicely->holds) {
      os << "parallelism: classes=" << block_action->nicely->orbit_partition.size();
      if (block_action->nicely->mu) os << " mu=" << *block_action->nicely->mu;
      os << '\n';
    }
  }
  os << "status: " << status << '\n';
  if (!detail.empty()) os << "detail: " << detail << '\n';
  return os.str();
}

// Certifies one catalogue row: recomputes the parameters, runs whichever
// verification routes apply (the stabilizer-orbit route refuses degenerate
// designs, the exhaustive route is capped by a pair budget), cross-checks
// the two reports when both ran, and classifies the block action of every
// verified non-degenerate pair.  A row whose point count exceeds the budget
// is skipped rather than failed.  Exceptions are caught and turned into a
// failed certificate so that one bad row cannot abort a whole run.
inline Certificate certify_row(const CatalogRow& row, int max_points = 200) {
  auto t0 = std::chrono::steady_clock::now();
  Certificate cert;
  cert.tag = row.tag;
  auto finish = [&](std::string status, std::string detail) -> Certificate& {
    cert.status = std::move(status);
    cert.detail = std::move(detail);
    cert.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return cert;
  };

  if (row.design.points() > max_points) {
    cert.params.v = row.design.points();
    cert.params.b = row.design.block_count();
    return finish("skipped", "point count " + std::to_string(cert.params.v) +
                                 " exceeds the budget of " +
                                 std::to_string(max_points));
  }

  std::vector<std::string> problems;
  auto mismatch = [&problems](const std::string& what, long long got,
                              long long want) {
    problems.push_back(what + "=" + std::to_string(got) + " expected " +
                       std::to_string(want));
  };

  try {
    cert.params = parameters(row.design);
    if (cert.params.v != row.expect_v)
      mismatch("points", cert.params.v, row.expect_v);
    if (!cert.params.k)
      problems.push_back("block sizes are not uniform");
    else if (*cert.params.k != row.expect_k)
      mismatch("block-size", *cert.params.k, row.expect_k);
    if (!cert.params.lambda)
      problems.push_back("pair coverage is not uniform");
    else if (*cert.params.lambda != row.expect_lambda)
      mismatch("pair-coverage", *cert.params.lambda, row.expect_lambda);
    if (row.expect_mu) {
      if (!cert.params.mu)
        problems.push_back("expected a quasisymmetric profile {0, " +
                           std::to_string(*row.expect_mu) + "}");
      else if (*cert.params.mu != *row.expect_mu)
        mismatch("mu", *cert.params.mu, *row.expect_mu);
    }

    StructuralChecks checks = structural_checks(row.design);
    if (!row.group) {
      std::string note =
          "construction-only: parameters verified, group check skipped";
      if (!problems.empty()) {
        std::string all = problems.front();
        for (size_t i = 1; i < problems.size(); ++i) all += "; " + problems[i];
        return finish("fail", all);
      }
      return finish("pass", note);
    }

    const Group& g = *row.group;
    if (!checks.trivial) cert.fast = fast_verify(row.design, g);
    long long v = cert.params.v, b = cert.params.b;
    if (v * b + b * b <= 1000000) cert.brute = brute_verify(row.design, g);
    if (!cert.fast && !cert.brute)
      problems.push_back("no verification route applies");
    if (cert.fast && cert.brute) {
      const PairwiseReport& f = *cert.fast;
      const PairwiseReport& r = *cert.brute;
      if (f.point_pairs != r.point_pairs || f.flags != r.flags ||
          f.antiflags != r.antiflags ||
          f.intersecting_block_pairs != r.intersecting_block_pairs ||
          f.disjoint_block_pairs != r.disjoint_block_pairs ||
          f.verdict != r.verdict)
        problems.push_back("the two verification routes disagree");
    }
    if (cert.fast || cert.brute) {
      bool verdict = cert.brute ? cert.brute->verdict : cert.fast->verdict;
      if (verdict != row.expect_verdict)
        problems.push_back(std::string("verdict=") +
                           (verdict ? "true" : "false") + " expected " +
                           (row.expect_verdict ? "true" : "false"));
      if (verdict && !checks.trivial)
        cert.block_action = classify_block_action(
            row.design, g, row.translations ? &*row.translations : nullptr);
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }

  if (problems.empty()) return finish("pass", "");
  std::string all = problems.front();
  for (size_t i = 1; i < problems.size(); ++i) all += "; " + problems[i];
  return finish("fail", all);
}

struct CertificationRun {
  std::vector<Certificate> certificates;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  double seconds = 0.0;

  bool all_pass() const { return failed == 0; }

  // The full report: every certificate body in catalogue order followed by
  // a one-line tally.  Timing never appears, so two runs over the same
  // catalogue produce identical bytes.
  std::string text() const {
    std::string out;
    for (const auto& c : certificates) {
      out += c.body();
      out += '\n';
    }
    out += "certified: " + std::to_string(passed) + " passed, " +
           std::to_string(failed) + " failed, " + std::to_string(skipped) +
           " skipped\n";
    return out;
  }
};

// Certifies every catalogue row in order.
inline CertificationRun certify_all(int max_points = 200) {
  auto t0 = std::chrono::steady_clock::now();
  CertificationRun run;
  for (const CatalogRow& row : catalog()) {
    Certificate c = certify_row(row, max_points);
    if (c.status == "pass")
      ++run.passed;
    else if (c.status == "fail")
      ++run.failed;
    else
      ++run.skipped;
    run.certificates.push_back(std::move(c));
  }
  run.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return run;
}

}  // namespace ptd
