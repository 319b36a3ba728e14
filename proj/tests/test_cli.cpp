#include <gtest/gtest.h>
#include <json.hpp>

#include <boost/rational.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tpairs/cli.hpp"
#include "tpairs/fixtures.hpp"
#include "tpairs/hyper.hpp"
#include "tpairs/structure_file.hpp"

using namespace tpairs;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  json report;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.report = json::parse(r.out);
  return r;
}

std::string fixture(const std::string& name) { return std::string(TPAIRS_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, HilbertOfFreeAlgebra) {
  const auto r = run({"hilbert", "--free-letters", "2", "--kmax", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["coefficients"], json::parse("[2,4,8,16,32]"));
  EXPECT_EQ(r.report["verdict"], "computed");
  EXPECT_NE(r.err.find("ms)"), std::string::npos);
}

TEST(Cli, BooleanSpectrum) {
  const auto r = run({"spectrum", fixture("boolean.pair")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["primes"].size(), 1u);
  EXPECT_EQ(r.report["result"]["krull_dimension"], 0);
  EXPECT_EQ(r.report["input"]["source"], fixture("boolean.pair"));
}

TEST(Cli, BrokenSemiringFailsWithWitnessTriple) {
  const auto r = run({"verify", fixture("broken.semiring")});
  EXPECT_EQ(r.code, kExitFails);
  EXPECT_EQ(r.report["verdict"], "fails");
  const auto& v = r.report["result"]["semiring"]["violations"];
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0]["witness"].size(), 3u);
}

TEST(Cli, ShippedFilesVerify) {
  for (const char* f : {"boolean.pair", "double-boolean.pair", "supertropical.pair", "nmax3.pair", "krasner-zero.pair",
                        "krasner-ge2.pair", "krasner.hyper", "f5-quotient.hyper", "boolean-square.module"}) {
    const auto r = run({"verify", fixture(f)});
    EXPECT_EQ(r.code, kExitOk) << f << "\n" << r.out;
  }
}

TEST(Cli, ShippedFilesAreCanonical) {
  for (const auto& entry : std::filesystem::directory_iterator(TPAIRS_FIXTURE_DIR)) {
    const auto text = read_file(entry.path().string());
    EXPECT_EQ(serialize_structure(parse_structure(text, false)), text) << entry.path();
  }
  // The pair files are the library fixtures of the same name.
  EXPECT_EQ(read_file(fixture("boolean.pair")), serialize_structure(structure_of(fixture_pair("boolean"))));
  EXPECT_EQ(read_file(fixture("supertropical.pair")),
            serialize_structure(structure_of(fixture_pair("supertropical-trivial"))));
  EXPECT_EQ(read_file(fixture("krasner.hyper")), serialize_structure(structure_of(krasner_hyperfield())));
}

TEST(Cli, ExitCodeContract) {
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, kExitInput);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"spectrum", "/nonexistent/file.pair"}).code, kExitInput);
  EXPECT_EQ(run({"spectrum", "--builtin", "no-such-pair"}).code, kExitInput);
  EXPECT_EQ(run({"hilbert", "--free-letters", "2", "--poly-vars", "2"}).code, kExitInput);
  // Enumeration bound below the carrier size.
  const auto bound = run({"congruences", fixture("boolean.pair"), "--max-size", "1"});
  EXPECT_EQ(bound.code, kExitUnknown);
  EXPECT_EQ(bound.report["error"]["kind"], "bound");
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, LocatedDiagnostics) {
  const auto path = temp_file("tpairs_bad_dim.semiring",
                              "[semiring]\nelements = 0 1\nzero = 0\none = 1\n[add]\n0 1 1\n1 1\n[mul]\n0 0\n0 1\n");
  const auto r = run({"verify", path});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(r.report["error"]["kind"], "dimension");
  EXPECT_EQ(r.report["error"]["line"], 6);
  EXPECT_EQ(r.report["error"]["column"], 5);
  const auto label = temp_file("tpairs_bad_label.pair", read_file(fixture("boolean.pair")) + "");
  std::string text = read_file(label);
  text.replace(text.find("a0 = 0"), 6, "a0 = z");
  const auto r2 = run({"shallow", temp_file("tpairs_bad_label.pair", text)});
  EXPECT_EQ(r2.code, kExitInput);
  EXPECT_EQ(r2.report["error"]["kind"], "unknown label");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"congruences", fixture("double-boolean.pair")};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.report["input"]["digest"], b.report["input"]["digest"]);
  // File and builtin inputs of the same pair share a digest.
  EXPECT_EQ(run({"shallow", "--builtin", "double-boolean"}).report["input"]["digest"], a.report["input"]["digest"]);
  const auto compact = run({"shallow", fixture("boolean.pair"), "--json"});
  EXPECT_EQ(std::count(compact.out.begin(), compact.out.end(), '\n'), 1);
}

TEST(Cli, ShallowAndPropertyN) {
  EXPECT_EQ(run({"shallow", fixture("supertropical.pair")}).code, kExitOk);
  EXPECT_EQ(run({"shallow", fixture("double-boolean.pair")}).code, kExitOk);
  // N with every n >= 2 identified: 2 = 1 + 1 is neither tangible nor in A0.
  const auto path = temp_file("tpairs_n2.pair",
                              "[semiring]\nelements = 0 1 2\nzero = 0\none = 1\n[add]\n0 1 2\n1 2 2\n2 2 2\n"
                              "[mul]\n0 0 0\n0 1 2\n0 2 2\n[pair]\na0 = 0\ntangibles = 1\n");
  const auto ns = run({"shallow", path});
  EXPECT_EQ(ns.code, kExitFails);
  EXPECT_EQ(ns.report["result"]["counterexample"], "2");
  const auto pn = run({"property-n", fixture("double-boolean.pair")});
  EXPECT_EQ(pn.code, kExitOk);
  EXPECT_EQ(pn.report["result"]["partners"]["(1,0)"], json::array({"(0,1)"}));
  // No tangible of B has a partner.
  EXPECT_EQ(run({"property-n", fixture("boolean.pair")}).code, kExitFails);
}

TEST(Cli, SupertropicalRoots) {
  const auto r = run({"polyroots", "--builtin", "supertropical-z", "--window", "10", "--poly", "x^2 + 1*x + 4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["roots"], json::array({json::array({"2"})}));
  EXPECT_EQ(r.report["bounds"]["window"], 10);
  // Every ghost point surpasses 0 as well.
  const auto all = run({"polyroots", "--builtin", "supertropical-z", "--window", "10", "--poly", "x^2 + 1*x + 4",
                        "--domain", "all"});
  EXPECT_GT(all.report["result"]["roots"].size(), 1u);
  const auto none = run({"polyroots", fixture("boolean.pair"), "--poly", "x + 1"});
  EXPECT_EQ(none.code, kExitFails);
}

TEST(Cli, OreWitnessOnSupertropicalNaturals) {
  const auto r = run({"ore-witness", "--builtin", "supertropical-n", "--window", "20", "--a1", "1", "--a2", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["value_in_a0"], true);
  EXPECT_NE(r.report["result"]["b1"], "-inf");
  const auto shallow = run({"ore-witness", "--builtin", "supertropical-n", "--a1", "1", "--a2", "2", "--degree", "1"});
  EXPECT_EQ(shallow.code, kExitUnknown);
  EXPECT_EQ(shallow.report["bounds"]["degree"], 1);
}

TEST(Cli, KrasnerQuotientOfF3) {
  const auto r = run({"krasner", "--field", "3", "--subgroup", "1,2"});
  EXPECT_EQ(r.code, kExitOk);
  const auto& q = r.report["result"]["quotient"];
  ASSERT_EQ(q["elements"].size(), 2u);
  const auto one = r.report["result"]["projection"]["1"].get<std::string>();
  const auto zero = r.report["result"]["projection"]["0"].get<std::string>();
  EXPECT_EQ(q["add"][1][1], "{" + zero + "," + one + "}");
  // The emitted structure loads back.
  const auto text = r.report["result"]["structure"].get<std::string>();
  EXPECT_TRUE(parse_structure(text).hyper.has_value());
}

TEST(Cli, PowersetBothChoices) {
  for (const char* choice : {"contains_zero", "size_ge_two"}) {
    const auto r = run({"powerset", "--builtin", "krasner", "--a0-choice", choice});
    EXPECT_EQ(r.code, kExitOk) << choice;
    EXPECT_EQ(r.report["result"]["elements"].size(), 3u);
  }
  const auto from_file = run({"powerset", fixture("krasner.hyper")});
  EXPECT_EQ(from_file.code, kExitOk);
  EXPECT_EQ(run({"powerset", "--builtin", "krasner", "--a0-choice", "bogus"}).code, kExitInput);
}

TEST(Cli, GrowthFlags) {
  const auto g = run({"growth", "--poly-vars", "1", "--generators", "x1,x1*x1", "--zero-generators", "x1*x1", "--kmax",
                      "4"});
  EXPECT_EQ(g.code, kExitOk);
  EXPECT_EQ(g.report["result"]["d"], json::parse("[1,1,1,1]"));
  const auto h = run({"hilbert", "--poly-vars", "3", "--kmax", "6"});
  EXPECT_EQ(h.report["result"]["coefficients"], h.report["result"]["closed_form"]);
  const auto gk = run({"gk", "--poly-vars", "1", "--kmax", "10"});
  EXPECT_NEAR(gk.report["result"]["estimate"].get<double>(), 1.0, 0.25);
  const auto m = run({"gk", "--matrix", "2", "--kmax", "8"});
  EXPECT_NEAR(m.report["result"]["estimate"].get<double>(), 0.0, 0.1);
  EXPECT_EQ(run({"gk", "--free-letters", "2"}).report["result"]["divergent"], true);
  EXPECT_EQ(run({"growth", "--free-letters", "2", "--generators", "x3"}).code, kExitInput);
}

TEST(Cli, LocalizationOfNaturals) {
  const auto r = run({"localize", "--builtin", "natural", "--window", "40", "--s", "2", "--fractions", "3/2,5/4"});
  EXPECT_EQ(r.code, kExitOk);
  auto as_rational = [](const std::string& f) {
    const auto slash = f.find('/');
    if (slash == std::string::npos) return boost::rational<long>(std::stol(f));
    return boost::rational<long>(std::stol(f.substr(0, slash)), std::stol(f.substr(slash + 1)));
  };
  // s^-1 b reads as b / s.
  EXPECT_EQ(as_rational(r.report["result"]["sum"]), boost::rational<long>(3, 2) + boost::rational<long>(5, 4));
  EXPECT_EQ(as_rational(r.report["result"]["product"]), boost::rational<long>(15, 8));
  EXPECT_EQ(run({"localize", "--builtin", "natural", "--s", "2", "--fractions", "3/3,1/2"}).code, kExitInput);
}

TEST(Cli, LocalizationOnFiniteFile) {
  const auto r = run({"localize", fixture("supertropical.pair"), "--s", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["classes"], 3);
}

TEST(Cli, RadicalAndKrull) {
  const auto r = run({"radical", fixture("double-boolean.pair")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report["result"]["contains_input"].get<bool>());
  const auto k = run({"krull", fixture("boolean.pair")});
  EXPECT_EQ(k.report["result"]["krull_dimension"], 0);
  const auto clash = run({"radical", fixture("boolean.pair"), "--seed", "0:1"});
  EXPECT_EQ(clash.code, kExitFails);
  EXPECT_EQ(clash.report["result"]["offending"], json::array({"1", "0"}));
}

TEST(Cli, ClassifyElement) {
  const auto r = run({"classify-element", fixture("double-boolean.pair"), "--base", "(0,0),(1,0),(1,1)", "--element",
                      "(0,1)", "--degree", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report["result"]["integral"]["found"], "true");
  EXPECT_EQ(r.report["result"]["integral"]["degree"], 2);
}
