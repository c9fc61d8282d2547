#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "ybe/cli.hpp"

using namespace ybe;
using io::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fresh_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("ybe_cli_" + name);
  std::filesystem::remove_all(p);
  return p.string();
}

}  // namespace

TEST(CliCheck, Examples) {
  const Outcome a = run({"check", "cybe", "--algebra", "catalog:aff1", "--tensor", "skew:e1^e2"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(oracle::is_zero(
      oracle::cybe(catalog_algebra("aff1"), pm_parts(Tensor2::wedge(catalog_algebra("aff1").space(), 0, 1)).minus.coeffs())));

  EXPECT_EQ(run({"check", "rb", "--algebra", "catalog:aff1", "--map", "zero", "--weight", "3/2"}).code, 0);

  const Outcome s = run({"check", "cybe", "--algebra", "catalog:sl2", "--tensor", "e(x)f"});
  EXPECT_EQ(s.code, 1);
  EXPECT_NE(s.out.find("(1,2,3) = -1"), std::string::npos) << s.out;
  const LieAlgebra& sl2 = catalog_algebra("sl2");
  const oracle::Cube c = oracle::cybe(sl2, Tensor2::simple(sl2.space(), 0, 2).coeffs());
  EXPECT_EQ(c[oracle::at(3, 0, 1, 2)], Scalar(-1));
}

TEST(CliCheck, AllKindsDispatch) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"check", "ecybe", "--algebra", "catalog:sl2", "--tensor", "casimir", "--eps", "1/4"}, 0},
      {{"check", "gcybe", "--algebra", "catalog:sl2", "--tensor", "casimir"}, 0},
      {{"check", "invariance", "--algebra", "catalog:so3", "--tensor", "casimir"}, 0},
      {{"check", "invariance", "--algebra", "catalog:sl2", "--tensor", "e(x)f"}, 1},
      {{"check", "myb", "--algebra", "catalog:aff1", "--map", "[[1,0],[0,-1]]"}, 0},
      {{"check", "myb", "--algebra", "catalog:aff1", "--map", "id"}, 0},
      {{"check", "myb", "--algebra", "catalog:aff1", "--map", "zero"}, 1},
      {{"check", "o-op", "--algebra", "catalog:aff1", "--map", "rb0"}, 0},
      {{"check", "o-op", "--algebra", "catalog:aff1", "--map", "id"}, 1},
      {{"check", "o-op-weighted", "--algebra", "catalog:aff1", "--module", "self", "--map", "id", "--weight", "-1"}, 0},
      {{"check", "rb", "--algebra", "catalog:aff1", "--map", "proj1", "--weight", "-1"}, 0},
      {{"check", "ext-o-op", "--algebra", "catalog:aff1", "--map", "id", "--beta", "id", "--mass", "-1"}, 0},
      {{"check", "antisym-hom", "--algebra", "catalog:aff1", "--map", "id", "--mass", "1"}, 0},
      {{"check", "gen-o-op", "--algebra", "catalog:aff1", "--module", "trivial:2", "--map", "zero"}, 0},
      {{"check", "reldiff", "--algebra", "catalog:aff1", "--module", "self", "--map", "zero", "--weight", "1"}, 0},
      {{"check", "reldiff", "--algebra", "catalog:aff1", "--module", "self", "--map", "id", "--weight", "1"}, 1},
      {{"check", "kupershmidt", "--algebra", "catalog:aff1", "--tensor", "r"}, 0},
      {{"check", "lie-coalgebra", "--algebra", "catalog:aff1", "--tensor", "r"}, 0},
      {{"check", "lie-coalgebra", "--algebra", "catalog:sl2", "--tensor", "e(x)f"}, 1},
  };
  for (const auto& [args, code] : cases) {
    const Outcome o = run(args);
    EXPECT_EQ(o.code, code) << args[1] << " " << args.back() << "\n" << o.out << o.err;
  }
}

TEST(CliCheck, InputErrors) {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"check"},
      {"check", "nonsense"},
      {"check", "cybe", "--algebra", "catalog:nope", "--tensor", "zero"},
      {"check", "cybe", "--algebra", "catalog:aff1"},
      {"check", "cybe", "--algebra", "catalog:aff1", "--tensor", "e1(x)e7"},
      {"check", "rb", "--algebra", "catalog:aff1", "--map", "[[1]]", "--weight", "1"},
      {"check", "rb", "--algebra", "catalog:aff1", "--map", "id", "--weight", "x"},
      {"check", "ecybe", "--algebra", "catalog:aff1", "--tensor", "zero"},
      {"check", "o-op", "--algebra", "catalog:aff1", "--module", "trivial:0", "--map", "zero"},
      {"check", "cybe", "--algebra", "/nonexistent/alg.json", "--tensor", "zero"},
      {"check", "cybe", "--algebra", "catalog:aff1", "--tensor", "zero", "--format", "xml"},
      {"check", "ext-o-op", "--algebra", "catalog:aff1", "--map", "id", "--beta", "[[1,0],[0,0]]", "--mass", "1"},
      {"verify-theorem", "no-such-theorem"},
      {"verify-theorem", "bai", "--trials", "0"},
      {"lift", "rb-weight", "--algebra", "catalog:aff1", "--map", "id", "--weight", "0"},
      {"lift", "invertible-o-to-rb", "--algebra", "catalog:aff1", "--map", "rb0", "--weight", "1", "--mu2", "0"},
  };
  for (const auto& args : cases) {
    const Outcome o = run(args);
    EXPECT_EQ(o.code, 2) << (args.empty() ? "(none)" : args.back());
    EXPECT_FALSE(o.err.empty());
  }
}

TEST(CliCheck, MachineFormat) {
  const std::vector<std::string> args{"check", "cybe", "--algebra", "catalog:sl2", "--tensor", "e(x)f", "--format",
                                      "machine"};
  const Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  const Report rep = io::report_from_json(j);
  EXPECT_FALSE(rep.ok());
  const LieAlgebra& sl2 = catalog_algebra("sl2");
  EXPECT_EQ(rep, to_report(cybe_residual(sl2, Tensor2::simple(sl2.space(), 0, 2)), "cybe"));
  EXPECT_EQ(j["nonzero"][0]["index"], json::array({1, 2, 3}));
  EXPECT_EQ(j["nonzero"][0]["value"], "-1");
}

TEST(CliLift, OOperatorExample) {
  const std::string dir = fresh_dir("oop");
  const Outcome o = run({"lift", "o-op", "--algebra", "catalog:aff1", "--map", "rb0", "--out", dir});
  EXPECT_EQ(o.code, 0) << o.err;
  const LieAlgebra big = io::load_algebra(dir + "/algebra.json");
  EXPECT_EQ(big.dim(), 4U);
  EXPECT_TRUE(oracle::jacobi(big));
  const Tensor2 r = io::tensor2_from(io::read_json_file(dir + "/tensor-1.json"));
  EXPECT_TRUE(oracle::is_zero(oracle::cybe(big, r.coeffs())));
  EXPECT_TRUE(is_skew(r));
  EXPECT_TRUE(io::report_from_json(io::read_json_file(dir + "/report.json")).ok());
  const LiftResult lift = io::lift_from(io::read_json_file(dir + "/lift.json"));
  EXPECT_EQ(lift.big, big);
  EXPECT_EQ(lift.tensors.at(0), r);
  std::filesystem::remove_all(dir);

  EXPECT_EQ(run({"lift", "o-op", "--algebra", "catalog:aff1", "--map", "id"}).code, 1);
}

TEST(CliLift, OtherConstructions) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"lift", "rb-weight", "--algebra", "catalog:aff1", "--map", "proj1", "--weight", "-1"}, 0},
      {{"lift", "rb-weight", "--algebra", "catalog:aff1", "--map", "id", "--weight", "1"}, 1},
      {{"lift", "baxter", "--algebra", "catalog:aff1", "--map", "id"}, 0},
      {{"lift", "baxter", "--algebra", "catalog:aff1", "--map", "id", "--sign", "-1"}, 0},
      {{"lift", "extended", "--algebra", "catalog:aff1", "--map", "id", "--beta", "id", "--mass", "-1"}, 0},
      {{"lift", "o-op-to-rb", "--algebra", "catalog:aff1", "--module", "self", "--map", "id", "--weight", "-1"}, 0},
      {{"lift", "o-op-to-rb", "--algebra", "catalog:aff1", "--map", "rb0", "--weight", "2", "--mu1", "2"}, 0},
      {{"lift", "invertible-o-to-rb", "--algebra", "catalog:aff1", "--map", "id", "--weight", "1", "--mu2", "0"}, 1},
      {{"lift", "invertible-o-to-rb", "--algebra", "catalog:abelian-2", "--module", "trivial:2", "--map", "id",
        "--weight", "1", "--mu2", "0"},
       0},
      {{"lift", "reldiff-to-rb", "--algebra", "catalog:aff1", "--module", "self", "--map", "zero"}, 0},
      {{"lift", "reldiff-to-rb", "--algebra", "catalog:aff1", "--module", "self", "--map", "id"}, 1},
      {{"lift", "reldiff-to-rb", "--algebra", "catalog:aff1", "--module", "trivial:1", "--map", "zero", "--weight",
        "2", "--mu1", "3"},
       0},
  };
  for (const auto& [args, code] : cases) {
    const Outcome o = run(args);
    EXPECT_EQ(o.code, code) << args[1] << " " << args.back() << "\n" << o.out << o.err;
  }
  const std::string dir = fresh_dir("rbw");
  EXPECT_EQ(run({"lift", "rb-weight", "--algebra", "catalog:aff1", "--map", "proj1", "--weight", "-1", "--out", dir})
                .code,
            0);
  EXPECT_TRUE(std::filesystem::exists(dir + "/tensor-2.json"));
  const Outcome m = run({"lift", "reldiff-to-rb", "--algebra", "catalog:aff1", "--module", "self", "--map", "zero",
                         "--out", dir, "--format", "machine"});
  EXPECT_EQ(m.code, 0);
  EXPECT_TRUE(json::parse(m.out)["verification"]["ok"].get<bool>());
  EXPECT_TRUE(std::filesystem::exists(dir + "/map-2.json"));
  std::filesystem::remove_all(dir);
}

TEST(CliVerify, CampaignsAndDeterminism) {
  const Outcome a = run({"verify-theorem", "bai", "--trials", "30", "--seed", "7", "--format", "machine"});
  EXPECT_EQ(a.code, 0) << a.out;
  const Outcome b = run({"verify-theorem", "o-operator-lift", "--trials", "30", "--seed", "7", "--format", "machine"});
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["trials"], 30);
  EXPECT_EQ(j["seed"], 7);
  const Outcome c = run({"verify-theorem", "bai", "--trials", "30", "--seed", "8", "--format", "machine"});
  EXPECT_NE(a.out, c.out);
  const Outcome h = run({"verify-theorem", "crbb", "--trials", "20", "--seed", "7"});
  EXPECT_EQ(h.code, 0);
  EXPECT_FALSE(h.out.empty());
}

TEST(CliList, ShowsCatalogAndTheorems) {
  const Outcome o = run({"list"});
  EXPECT_EQ(o.code, 0);
  for (const char* s : {"aff1", "heisenberg3", "sl2", "so3", "abelian-4", "duality", "kupershmidt", "bai", "crbb"})
    EXPECT_NE(o.out.find(s), std::string::npos) << s;
  EXPECT_EQ(run({"--help"}).code, 0);
}
