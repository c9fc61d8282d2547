// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// line fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ybe/cli.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Line {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

/// Campaign with no failures and at least `min` probes in each listed direction.
void campaign(Line& line, const std::string& name, std::size_t trials,
              const std::vector<std::pair<std::string, std::size_t>>& minimums) {
  const CampaignSummary s = run_campaign(name, trials, kSeed);
  line.require(s.ok(), name + " has " + std::to_string(s.failures.size()) + " failing probes");
  std::string counts;
  for (const auto& [dir, min] : minimums) {
    const std::size_t n = s.count(dir);
    line.require(n >= min, name + " " + dir + " count " + std::to_string(n) + " < " + std::to_string(min));
    counts += " " + dir + "=" + std::to_string(n);
  }
  line.note(s.theorem + ":" + counts);
}

/// Campaign where the two verdict directions together reach `min`, each nonempty.
void two_sided(Line& line, const std::string& name, std::size_t trials, const std::string& a, const std::string& b,
               std::size_t min) {
  const CampaignSummary s = run_campaign(name, trials, kSeed);
  line.require(s.ok(), name + " has " + std::to_string(s.failures.size()) + " failing probes");
  const std::size_t na = s.count(a), nb = s.count(b);
  line.require(na > 0 && nb > 0, name + " is one-sided");
  line.require(na + nb >= min, name + " instances " + std::to_string(na + nb) + " < " + std::to_string(min));
  line.note(s.theorem + ": " + a + "=" + std::to_string(na) + " " + b + "=" + std::to_string(nb));
}

Line criterion1() {
  Line l;
  campaign(l, "duality", 300, {{"hat-check", 100}, {"twist-dual", 100}, {"tilde-square", 100}});
  return l;
}

Line criterion2() {
  Line l;
  const LieAlgebra& aff1 = catalog_algebra("aff1");
  const Tensor2 w = Tensor2::wedge(aff1.space(), 0, 1);
  l.require(cybe_residual(aff1, w).is_zero(), "cybe(aff1, e1^e2) = 0");
  l.require(oracle::is_zero(oracle::cybe(aff1, w.coeffs())), "oracle cybe(aff1, e1^e2) = 0");

  const LieAlgebra& sl2 = catalog_algebra("sl2");
  const Tensor2 ef = Tensor2::simple(sl2.space(), 0, 2);
  Tensor3 expected(sl2.space());
  expected(0, 1, 2) = -1;
  l.require(cybe_residual(sl2, ef) == expected, "cybe(sl2, e(x)f) = -e(x)h(x)f");
  l.require(oracle::cybe(sl2, ef.coeffs()) == oracle::flatten(expected), "oracle cybe(sl2, e(x)f)");

  const Tensor2& cas = *catalog_entry("sl2").tensor("casimir");
  l.require(is_invariant(sl2, cas), "sl2 Casimir invariant");
  bool oracle_inv = true;
  for (const auto& m : oracle::invariance(sl2, cas.coeffs())) oracle_inv = oracle_inv && m.is_zero();
  l.require(oracle_inv, "oracle sl2 Casimir invariant");
  l.require(inverse(oracle::killing(sl2)) == cas.coeffs(), "Casimir equals inverse Killing form");

  two_sided(l, "symmetric-invariance", 300, "holds", "fails", 100);
  return l;
}

Line criterion3() {
  Line l;
  const CampaignSummary s = run_campaign("bai", 900, kSeed);
  l.require(s.ok(), "bai has failing probes");
  l.require(s.count("positive") >= 100, "bai positive count");
  l.require(s.count("negative") >= 200, "bai negative count " + std::to_string(s.count("negative")));
  l.require(s.count("skew") == s.count("positive") + s.count("negative"), "every lift checked for skewness");
  l.note("o-operator-lift: positive=" + std::to_string(s.count("positive")) +
         " negative=" + std::to_string(s.count("negative")) + " skew=" + std::to_string(s.count("skew")));
  return l;
}

Line criterion4() {
  Line l;
  // Trials cycle through beta in {0, id} x kappa in {-1, 0, 1} and both directions.
  campaign(l, "skewgm", 600, {{"positive", 100}, {"negative", 100}, {"symmetric-part-invariant", 100}});
  campaign(l, "cybea", 600, {{"holds", 100}, {"fails", 100}});
  return l;
}

Line criterion5() {
  Line l;
  for (const char* name : {"crbb", "cocrbb", "rota-baxter-invertible", "crdiff"}) {
    const CampaignSummary s = run_campaign(name, 600, kSeed);
    const std::size_t pos = s.count("positive"), neg = s.count("negative");
    l.require(s.ok(), std::string(name) + " has failing probes");
    l.require(pos > 0 && neg > 0 && pos + neg >= 200, std::string(name) + " instance counts");
    l.require(s.count("companion") == pos + neg, std::string(name) + " companion checked on every instance");
    l.note(s.theorem + ": positive=" + std::to_string(pos) + " negative=" + std::to_string(neg) +
           " companion=" + std::to_string(s.count("companion")));
  }
  return l;
}

Line criterion6() {
  Line l;
  two_sided(l, "bracycl", 600, "holds", "fails", 200);
  two_sided(l, "liebialgebra", 600, "holds", "fails", 200);
  campaign(l, "lakm", 600, {{"weight-zero", 100}});
  return l;
}

Line criterion7() {
  Line l;
  two_sided(l, "kupershmidt", 600, "holds", "fails", 100);
  return l;
}

Line criterion8() {
  Line l;
  std::size_t identical = 0;
  for (const auto& t : theorems()) {
    const auto a = summary_json(run_campaign(t.name, 60, kSeed)).dump(2);
    const auto b = summary_json(run_campaign(t.name, 60, kSeed)).dump(2);
    l.require(a == b, t.name + " summary differs between runs");
    identical += a == b;
  }
  const std::vector<std::string> args{"verify-theorem", "crbb", "--trials", "50", "--seed", "7", "--format", "machine"};
  std::ostringstream o1, o2, e;
  cli::run(args, o1, e);
  cli::run(args, o2, e);
  l.require(o1.str() == o2.str() && !o1.str().empty(), "CLI machine output differs between runs");

  Rng rng(kSeed);
  std::size_t objects = 0;
  for (int t = 0; t < 40; ++t) {
    const LieAlgebra& g = witness::random_algebra(rng);
    const auto V = witness::random_module(g, rng);
    const LieAlgebra big = semidirect_product(g, as_g_lie_algebra(dual_representation(V.rep)));
    const Tensor2 r(big.space(), big.space(), rng.matrix(big.dim(), big.dim()));
    const LinearMap m(V.rep.space, g.space(), rng.matrix(g.dim(), V.rep.dim()));
    const Tensor3 c = cybe_residual(big, r);
    const Report rep = to_report(c, "cybe");
    bool ok = io::algebra_from(io::to_json(big)) == big;
    ok = ok && io::tensor2_from(io::to_json(r)) == r;
    ok = ok && io::map_from(io::to_json(m)) == m;
    ok = ok && io::tensor3_from(io::to_json(c)) == c;
    ok = ok && io::report_from_json(io::to_json(rep)) == rep;
    const LiftResult lift = lift_o_operator(g, V.rep, m);
    ok = ok && io::lift_from(io::to_json(lift)) == lift;
    // Text form must survive a dump/parse cycle too.
    ok = ok && io::algebra_from(io::json::parse(io::to_json(big).dump())) == big;
    l.require(ok, "roundtrip at object group " + std::to_string(t));
    objects += 7;
  }
  l.require(objects >= 100, "roundtrip object count");
  l.note(std::to_string(identical) + " campaigns byte-identical, " + std::to_string(objects) + " roundtrips");
  return l;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Line (*)()>> criteria{
      {"duality identities", criterion1},
      {"known solutions and the symmetry lemma", criterion2},
      {"O-operator lift iff CYBE", criterion3},
      {"extended O-operator lift iff ECYBE", criterion4},
      {"Rota-Baxter equivalences and companions", criterion5},
      {"cyclic bracket and coboundary bialgebra criteria", criterion6},
      {"Kupershmidt form iff CYBE", criterion7},
      {"determinism and exact serialization", criterion8},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Line line;
    try {
      line = criteria[i].second();
    } catch (const std::exception& e) {
      line.pass = false;
      line.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (line.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    for (const auto& n : line.notes) std::cout << " | " << n;
    std::cout << '\n';
    failed += line.pass ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed ? "FAIL" : "PASS") << " overall (" << secs << " s)\n";
  return failed ? 1 : 0;
}
