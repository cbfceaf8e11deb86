#include <gtest/gtest.h>

#include <sstream>

#include "enumerate.hpp"
#include "weylref/errors.hpp"
#include "weylref/json_io.hpp"

#ifdef WEYLREF_HAVE_CLI
#include "cli.hpp"
#endif

using namespace weylref;
using namespace testsupport;

TEST(Json, RootsAndVectors) {
  auto rs = RootSystem::build("B3");
  for (int r = 0; r < rs.num_roots(); ++r) EXPECT_EQ(root_from_json(rs, root_to_json(rs, r)), r);
  EXPECT_THROW(root_from_json(rs, Json::parse("[1, 1, 5]")), ValidationError);
  EXPECT_THROW(root_from_json(rs, Json::parse("[1, 1]")), ValidationError);
  Vector v(RatVec{make_rat(1, 2), Rat(-3), make_rat(7, 3)});
  EXPECT_EQ(vector_from_json(rs, vector_to_json(v)), v);
  EXPECT_EQ(vector_from_json(rs, Json::parse(R"(["1/2", -3, "14/6"])")), v);
}

TEST(Json, GFRoundTrip) {
  auto rs = RootSystem::build("G2");
  for_each_gf(rs, 1, [&](const GFPair& p) {
    auto j = to_json(rs, p.datum());
    EXPECT_EQ(gf_from_json(rs, j), p.datum());
    EXPECT_EQ(gf_from_json(rs, Json::parse(j.dump())), p.datum());
  });
}

TEST(Json, PsiXRoundTrip) {
  auto rs = RootSystem::build("B2");
  for (const auto& psi : all_subsystems(rs))
    for_each_psix(rs, psi, 2, 1, [&](const PsiXPair& p) {
      auto j = to_json(rs, p);
      EXPECT_EQ(psix_from_json(rs, Json::parse(j.dump())), p);
    });
}

TEST(Json, SchemaCheck) {
  EXPECT_NO_THROW(check_schema(Json::parse(R"({"schema": 1})")));
  EXPECT_NO_THROW(check_schema(Json::parse(R"({})")));
  EXPECT_THROW(check_schema(Json::parse(R"({"schema": 2})")), ValidationError);
}

TEST(Json, RejectsInvalidPsiX) {
  auto rs = RootSystem::build("A1");
  auto bad_point = Json::parse(R"({"psi": [[1], [-1]], "lattice": [{"kind": "P", "m": 1}], "a": ["1/4"]})");
  EXPECT_THROW(psix_from_json(rs, bad_point), ValidationError);
  auto bad_kind = Json::parse(R"({"psi": [[1], [-1]], "lattice": [{"kind": "Q", "m": 1}], "a": ["0"]})");
  EXPECT_THROW(psix_from_json(rs, bad_kind), ValidationError);
}

#ifdef WEYLREF_HAVE_CLI

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "weylref");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kFund = R"({"gamma": [{"root": [1], "f": 0}, {"root": [-1], "f": 1}]})";

}  // namespace

TEST(Cli, Classify) {
  auto a2 = run_cli({"classify", "A2", "--format", "json"});
  ASSERT_EQ(a2.code, 0) << a2.err;
  EXPECT_EQ(Json::parse(a2.out)["classes"].size(), 3u);
  auto b2 = run_cli({"--format", "json", "classify", "B2"});
  EXPECT_EQ(Json::parse(b2.out)["classes"].size(), 6u);
  EXPECT_EQ(run_cli({"classify", "Z9"}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
}

TEST(Cli, SubgroupActions) {
  auto vol = run_cli({"subgroup", "A1", "--datum", kFund, "--action", "volume", "--format", "json"});
  ASSERT_EQ(vol.code, 0) << vol.err;
  EXPECT_EQ(Json::parse(vol.out)["volume"], "1/2*sqrt(2)");
  auto idx = run_cli({"subgroup", "A1", "--datum", R"({"gamma": [{"root": [1], "f": 0}, {"root": [-1], "f": 2}]})",
                      "--action", "index", "--format", "json"});
  ASSERT_EQ(idx.code, 0) << idx.err;
  EXPECT_NE(idx.out.find("\"2\""), std::string::npos);
  auto bad = run_cli({"subgroup", "A1", "--datum", R"({"gamma": [{"root": [1], "f": -1}, {"root": [-1], "f": 2}]})",
                      "--action", "roots"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run_cli({"subgroup", "A1", "--datum", "{not json", "--action", "roots"}).code, 1);
  for (const char* action : {"roots", "alcove", "cosets", "type"})
    EXPECT_EQ(run_cli({"subgroup", "A1", "--datum", kFund, "--action", action}).code, 0) << action;
}

TEST(Cli, Bijection) {
  auto inv = run_cli({"bij", "A1", "--direction", "inverse", "--format", "json", "--datum",
                      R"({"psi": [[1], [-1]], "lattice": [{"kind": "P", "m": 1}], "a": ["0"]})"});
  ASSERT_EQ(inv.code, 0) << inv.err;
  auto rs = RootSystem::build("A1");
  EXPECT_EQ(gf_from_json(rs, Json::parse(inv.out)["result"]), fundamental_datum(rs));
  auto fwd = run_cli({"bij", "A1", "--direction", "forward", "--format", "json", "--datum", kFund});
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  EXPECT_EQ(Json::parse(fwd.out)["result"]["lattice"][0]["m"], 1);
}

TEST(Cli, Identity) {
  auto a2 = run_cli({"identity", "--type", "A2", "--mmax", "10", "--format", "json"});
  ASSERT_EQ(a2.code, 0) << a2.err;
  auto j = Json::parse(a2.out);
  EXPECT_EQ(j["checks"].size(), 10u);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_EQ(run_cli({"identity", "--type", "A1", "--mmax", "1"}).code, 0);
  EXPECT_EQ(run_cli({"identity", "--type", "B3", "--lattice", "Pdual", "--mmax", "4"}).code, 0);
  EXPECT_EQ(run_cli({"--weyl-bound", "10", "identity", "--type", "B3"}).code, 3);
}

TEST(Cli, Diagram) {
  auto d = run_cli({"diagram", "G2", "--completed"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("node 2"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::vector<std::string>> cmds = {
      {"classify", "B3", "--format", "json"},
      {"subgroup", "A1", "--datum", kFund, "--action", "cosets", "--lattice", "P", "--format", "json"},
      {"identity", "--type", "G2", "--mmax", "6", "--format", "json"},
  };
  for (const auto& c : cmds) {
    auto a = run_cli(c), b = run_cli(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

#endif
