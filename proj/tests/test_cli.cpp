#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "ptd/cli.hpp"

using namespace ptd;
using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch directory, fresh per test case.
struct Scratch {
  std::filesystem::path dir;
  explicit Scratch(const std::string& name)
      : dir(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string operator/(const std::string& leaf) const {
    return (dir / leaf).string();
  }
};

}  // namespace

TEST_CASE("usage errors exit with status two") {
  RunResult none = run({});
  CHECK(none.code == 2);
  CHECK_THAT(none.err, ContainsSubstring("usage:"));

  RunResult help = run({"help"});
  CHECK(help.code == 0);
  CHECK_THAT(help.out, ContainsSubstring("usage:"));
  CHECK_THAT(help.out, ContainsSubstring("certify-all"));

  RunResult unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_THAT(unknown.err, ContainsSubstring("unknown subcommand"));

  CHECK(run({"verify"}).code == 2);
  CHECK_THAT(run({"verify"}).err,
             ContainsSubstring("missing required flag --design"));
  CHECK_THAT(run({"verify", "--design"}).err, ContainsSubstring("needs a value"));
  CHECK_THAT(run({"params", "--design", "a", "--design", "b"}).err,
             ContainsSubstring("given twice"));
  CHECK_THAT(run({"params", "--blocks", "a"}).err,
             ContainsSubstring("unknown flag"));
  RunResult badint =
      run({"gammal1", "--p", "2", "--d", "x", "--i", "1", "--j", "0", "--t", "1"});
  CHECK(badint.code == 2);
  CHECK_THAT(badint.err, ContainsSubstring("expects an integer"));
}

TEST_CASE("construct writes files that reload and re-verify") {
  Scratch tmp("ptd_cli_construct");
  std::string dsg = tmp / "h11.dsg";
  std::string grp = tmp / "psl211.grp";
  RunResult r = run({"construct", "--tag", "Table1:line6", "--out", dsg,
                     "--group-out", grp});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("label: H(11)"));
  CHECK_THAT(r.out, ContainsSubstring("parameters: 2-(11,5,2)"));
  CHECK_THAT(r.out, ContainsSubstring("group: PSL(2,11) order=660"));

  Design d = load_design_file(dsg);  // expect k / expect lambda re-verified
  CHECK(d.points() == 11);
  CHECK(d.block_count() == 11);
  CHECK(d.label() == "H(11)");
  Group g = load_group_file(grp);  // expect-order re-verified
  CHECK(g.order() == 660);
  CHECK(g.degree() == 11);

  RunResult bad = run({"construct", "--tag", "nonsense"});
  CHECK(bad.code == 2);
  CHECK_THAT(bad.err, ContainsSubstring("unknown catalogue tag"));

  RunResult list = run({"construct", "--list"});
  REQUIRE(list.code == 0);
  CHECK_THAT(list.out, ContainsSubstring("Table1:line8"));
  CHECK_THAT(list.out, ContainsSubstring("Table2:line5"));
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 42);
}

TEST_CASE("params reports parameters or the degenerate diagnosis") {
  Scratch tmp("ptd_cli_params");
  std::string dsg = tmp / "h11.dsg";
  REQUIRE(run({"construct", "--tag", "Table1:line6", "--out", dsg}).code == 0);
  RunResult r = run({"params", "--design", dsg});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("parameters: 2-(11,5,2) r=5 t-max=2"));
  CHECK_THAT(r.out, ContainsSubstring("profile: 2^55"));

  std::string ragged = tmp / "ragged.dsg";
  {
    std::ofstream f(ragged);
    f << "points 5\nblock 0 1\nblock 0 1 2\n";
  }
  RunResult bad = run({"params", "--design", ragged});
  CHECK(bad.code == 0);
  CHECK_THAT(bad.out, ContainsSubstring("not a t-design (t>=2)"));

  std::string malformed = tmp / "malformed.dsg";
  {
    std::ofstream f(malformed);
    f << "block 0 1\n";
  }
  RunResult diag = run({"params", "--design", malformed});
  CHECK(diag.code == 2);
  CHECK_THAT(diag.err, ContainsSubstring("malformed.dsg:1:"));

  RunResult missing = run({"params", "--design", tmp / "absent.dsg"});
  CHECK(missing.code == 2);
  CHECK_THAT(missing.err, ContainsSubstring("cannot open"));
}

TEST_CASE("verify maps verdicts to exit statuses") {
  Scratch tmp("ptd_cli_verify");
  std::string dsg = tmp / "ag32.dsg";
  std::string grp = tmp / "psl27.grp";
  REQUIRE(run({"construct", "--tag", "Table2:line4", "--out", dsg,
               "--group-out", grp})
              .code == 0);

  RunResult both = run({"verify", "--design", dsg, "--group", grp, "--mode",
                        "both"});
  REQUIRE(both.code == 0);
  CHECK_THAT(both.out, ContainsSubstring("fast: point-pairs=1"));
  CHECK_THAT(both.out, ContainsSubstring("brute: point-pairs=1"));
  CHECK_THAT(both.out, ContainsSubstring("verdict: true"));
  CHECK(run({"verify", "--design", dsg, "--group", grp}).code == 0);
  CHECK(run({"verify", "--design", dsg, "--group", grp, "--mode", "fast"})
            .code == 0);

  // The translation subgroup preserves the affine design but is only
  // point-regular, so verification legitimately fails: exit status one.
  FiniteField f2(2);
  std::string trans = tmp / "translations.grp";
  save_group_file(translation_group(f2, 3), trans);
  Design ag = ag_design(3, 2);
  std::string agfile = tmp / "plain_ag32.dsg";
  save_design_file(ag, agfile);
  for (const char* mode : {"fast", "brute", "both"}) {
    RunResult fail =
        run({"verify", "--design", agfile, "--group", trans, "--mode", mode});
    INFO("mode " << mode << ": " << fail.err);
    CHECK(fail.code == 1);
    CHECK_THAT(fail.out, ContainsSubstring("verdict: false"));
  }

  // A group that does not even preserve the design is bad input, not a
  // failed verification.
  std::string s8 = tmp / "sym8.grp";
  save_group_file(symmetric_group(8), s8);
  RunResult invalid = run({"verify", "--design", agfile, "--group", s8});
  CHECK(invalid.code == 2);

  CHECK(run({"verify", "--design", agfile, "--group", trans, "--mode",
             "quick"})
            .code == 2);
}

TEST_CASE("certify-all writes the report and tallies the rows") {
  Scratch tmp("ptd_cli_certify");
  std::string report = tmp / "report.txt";
  RunResult r = run({"certify-all", "--max-points", "15", "--out", report});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("wrote: " + report));
  CHECK_THAT(r.out,
             ContainsSubstring("certified: 27 passed, 0 failed, 15 skipped"));
  std::ifstream in(report);
  std::stringstream body;
  body << in.rdbuf();
  CHECK_THAT(body.str(), ContainsSubstring("certificate: Table1:line6"));
  CHECK_THAT(body.str(), ContainsSubstring("certificate: Table2:line4"));
  CHECK_THAT(body.str(),
             ContainsSubstring("certified: 27 passed, 0 failed, 15 skipped"));

  CHECK(run({"certify-all", "--max-points", "0"}).code == 2);
}

TEST_CASE("gammal1 answers the transitivity question") {
  RunResult yes =
      run({"gammal1", "--p", "2", "--d", "4", "--i", "1", "--j", "0", "--t", "1"});
  REQUIRE(yes.code == 0);
  CHECK_THAT(yes.out, ContainsSubstring("transitive: yes"));
  CHECK_THAT(yes.out, ContainsSubstring("order: 60"));

  RunResult no =
      run({"gammal1", "--p", "2", "--d", "4", "--i", "5", "--j", "0", "--t", "4"});
  REQUIRE(no.code == 0);
  CHECK_THAT(no.out, ContainsSubstring("transitive: no"));
  CHECK_THAT(no.out, ContainsSubstring("order: 3"));

  RunResult invalid =
      run({"gammal1", "--p", "2", "--d", "4", "--i", "7", "--j", "0", "--t", "1"});
  CHECK(invalid.code == 2);
  CHECK_THAT(invalid.err, ContainsSubstring("condition (1)"));

  CHECK(run({"gammal1", "--p", "2", "--d", "4", "--i", "1", "--j", "0"}).code ==
        2);
}

TEST_CASE("zsigmondy lists the primitive prime divisors") {
  RunResult some = run({"zsigmondy", "--p", "2", "--d", "10"});
  REQUIRE(some.code == 0);
  CHECK_THAT(some.out, ContainsSubstring("primitive-prime-divisors: 11"));

  RunResult none = run({"zsigmondy", "--p", "2", "--d", "6"});
  REQUIRE(none.code == 0);
  CHECK_THAT(none.out, ContainsSubstring("primitive-prime-divisors: none"));

  CHECK(run({"zsigmondy", "--p", "4", "--d", "2"}).code == 2);
}

TEST_CASE("search reports every verified hit") {
  Scratch tmp("ptd_cli_search");
  std::string grp = tmp / "psl27.grp";
  REQUIRE(run({"construct", "--tag", "Table2:line4", "--group-out", grp})
              .code == 0);

  RunResult r = run({"search", "--group", grp, "--k", "4"});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("parameters=2-(8,4,3) b=14 mu=2"));
  CHECK_THAT(r.out, ContainsSubstring("rep={0,1,2,3}"));
  CHECK_THAT(r.out, ContainsSubstring("rep={0,1,2,6}"));
  CHECK_THAT(r.out, ContainsSubstring("hits: 2"));

  RunResult dflt = run({"search", "--group", grp});
  REQUIRE(dflt.code == 0);
  CHECK_THAT(dflt.out, ContainsSubstring("hits: 2"));

  CHECK(run({"search", "--group", grp, "--k", "5"}).code == 2);
  CHECK(run({"search", "--group", grp, "--kmin", "4", "--kmax", "3"}).code == 2);
  CHECK(run({"search", "--group", grp, "--k", "4", "--kmin", "3"}).code == 2);

  std::string s21 = tmp / "sym21.grp";
  save_group_file(symmetric_group(21), s21);
  RunResult big = run({"search", "--group", s21, "--k", "3"});
  CHECK(big.code == 2);
  CHECK_THAT(big.err, ContainsSubstring("degree exceeds 20"));
}
