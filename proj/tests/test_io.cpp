#include "ptd/io.hpp"

#include <cstdio>
#include <fstream>

#include "catch2/catch_amalgamated.hpp"

using namespace ptd;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/ptd_io_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("group file round trip") {
  std::string path = write_temp("ok.grp",
                                "# a comment\n"
                                "label cyclic shift\n"
                                "degree 4\n"
                                "expect-order 4\n"
                                "expect-transitive 1\n"
                                "perm 1 2 3 0\n");
  Group g = load_group_file(path);
  CHECK(g.degree() == 4);
  CHECK(g.order() == 4);
  CHECK(g.label() == "cyclic shift");
}

TEST_CASE("group file diagnostics carry line numbers") {
  auto msg = [](const std::string& name, const std::string& content) {
    std::string path = write_temp(name, content);
    return error_of([&] { load_group_file(path); });
  };

  CHECK(msg("nodesg.grp", "perm 0 1\n").find(":1: perm line before degree") !=
        std::string::npos);
  CHECK(msg("nodeg2.grp", "label x\n").find("missing degree header") !=
        std::string::npos);
  CHECK(msg("short.grp", "degree 3\nperm 0 1\n").find(":2: perm line has 2") !=
        std::string::npos);
  CHECK(msg("unknown.grp", "degree 3\nfoo 1\n").find(":2: unknown directive 'foo'") !=
        std::string::npos);
  CHECK(msg("badint.grp", "degree x\n").find(":1: expected degree") !=
        std::string::npos);
  CHECK(msg("dup.grp", "degree 3\nperm 0 0 1\n").find(":2:") !=
        std::string::npos);
  CHECK(msg("order.grp", "degree 3\nexpect-order 5\nperm 1 2 0\n")
            .find(":2: group order is 3, expected 5") != std::string::npos);
  CHECK(msg("trans.grp", "degree 4\nexpect-transitive 2\nperm 1 2 3 0\n")
            .find(":2: transitivity degree is 1, expected 2") !=
        std::string::npos);
  CHECK(error_of([] { load_group_file("/tmp/ptd_io_missing.grp"); })
            .find("cannot open") != std::string::npos);
}

TEST_CASE("design file round trip") {
  std::string path = write_temp("fano.dsg",
                                "points 7\n"
                                "label fano\n"
                                "expect k 3\n"
                                "expect lambda 1\n"
                                "block 0 1 2\n"
                                "block 0 3 4\n"
                                "block 0 5 6\n"
                                "block 1 3 5\n"
                                "block 1 4 6\n"
                                "block 2 3 6\n"
                                "block 2 4 5\n");
  Design d = load_design_file(path);
  CHECK(d.points() == 7);
  CHECK(d.block_count() == 7);
  CHECK(d.label() == "fano");
  CHECK(is_symmetric(d));
}

TEST_CASE("design file diagnostics") {
  auto msg = [](const std::string& name, const std::string& content) {
    std::string path = write_temp(name, content);
    return error_of([&] { load_design_file(path); });
  };

  CHECK(msg("nopts.dsg", "block 0 1\n").find(":1: block line before points") !=
        std::string::npos);
  CHECK(msg("empty.dsg", "points 3\n").find("no blocks") != std::string::npos);
  CHECK(msg("desc.dsg", "points 3\nblock 1 0\n")
            .find(":2: block points must be ascending") != std::string::npos);
  CHECK(msg("range.dsg", "points 3\nblock 0 3\n").find(":2: point out of range") !=
        std::string::npos);
  CHECK(msg("blank.dsg", "points 3\nblock\n").find(":2: empty block") !=
        std::string::npos);
  CHECK(msg("what.dsg", "points 3\nexpect mu 2\nblock 0 1\n")
            .find(":2: expect must name k or lambda") != std::string::npos);
  CHECK(msg("k.dsg", "points 3\nexpect k 3\nblock 0 1\nblock 1 2\n")
            .find(":2: block size 2 differs from expected 3") !=
        std::string::npos);
  CHECK(msg("lam.dsg", "points 3\nexpect lambda 2\nblock 0 1\nblock 1 2\n")
            .find("does not match expected lambda") != std::string::npos);
}

TEST_CASE("code file diagnostics") {
  auto msg = [](const std::string& name, const std::string& content) {
    std::string path = write_temp(name, content);
    return error_of([&] { load_code_file(path); });
  };

  CHECK(msg("early.code", "110\n").find(":1: digit row before complete header") !=
        std::string::npos);
  CHECK(msg("width.code", "field 2 1\nlength 3\ndim 1\n1100\n")
            .find(":4: expected a row of 3 digits") != std::string::npos);
  CHECK(msg("digit.code", "field 2 1\nlength 3\ndim 1\n120\n")
            .find("digit exceeds field size") != std::string::npos);
  CHECK(msg("alpha.code", "field 2 1\nlength 3\ndim 1\n1a0\n")
            .find("invalid digit") != std::string::npos);
  CHECK(msg("count.code", "field 2 1\nlength 3\ndim 2\n110\n")
            .find("have 1 rows, expected 2") != std::string::npos);
  CHECK(msg("rank.code", "field 2 1\nlength 3\ndim 2\n110\n110\n")
            .find("rank deficient") != std::string::npos);
  CHECK(msg("nofield.code", "length 3\ndim 1\n").find("missing field header") !=
        std::string::npos);
}

TEST_CASE("data directory override") {
  std::string normal = data_directory();
  CHECK(!normal.empty());
  setenv("PTD_DATA_DIR", "/tmp/ptd_alt_data", 1);
  CHECK(data_directory() == "/tmp/ptd_alt_data");
  unsetenv("PTD_DATA_DIR");
  CHECK(data_directory() == normal);
}

TEST_CASE("bundled sporadic groups verify their chains") {
  Group psl = load_group("psl27_deg8.grp");
  CHECK(psl.order() == 168);
  CHECK(psl.label() == "PSL(2,7)");
  CHECK(psl.transitivity_degree() == 2);

  Group m11 = load_group("m11_deg11.grp");
  CHECK(m11.order() == 7920);
  CHECK(m11.transitivity_degree() == 4);

  Group m11b = load_group("m11_deg12.grp");
  CHECK(m11b.order() == 7920);
  CHECK(m11b.degree() == 12);
  CHECK(m11b.transitivity_degree() == 3);

  Group a7 = load_group("a7_gl42.grp");
  CHECK(a7.order() == 2520);
  CHECK(a7.degree() == 16);
  CHECK(a7.orbit(0) == std::vector<int>({0}));
  CHECK(a7.orbit(1).size() == 15);
}

TEST_CASE("large sporadic groups verify their chains") {
  Group m24 = load_group("m24_deg24.grp");
  CHECK(m24.order() == 244823040u);
  CHECK(m24.transitivity_degree() == 5);

  Group hs = load_group("hs_deg176.grp");
  CHECK(hs.order() == 44352000u);
  CHECK(hs.degree() == 176);
  CHECK(hs.transitivity_degree() == 2);
}
