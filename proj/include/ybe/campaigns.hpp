#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybe/catalog.hpp"
#include "ybe/error.hpp"
#include "ybe/liftings.hpp"
#include "ybe/operator_checkers.hpp"
#include "ybe/random.hpp"
#include "ybe/witnesses.hpp"
#include "ybe/ybe_checkers.hpp"

namespace ybe {

/// One verdict inside a trial. `direction` groups probes for tallying
/// (e.g. "positive", "negative", "holds", "fails").
struct Probe {
  std::string direction;
  bool pass = false;
  std::string detail;
};

struct Failure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string direction;
  std::string detail;
};

struct DirectionTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct CampaignSummary {
  std::string theorem;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<DirectionTally> directions;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }

  const DirectionTally* direction(const std::string& name) const {
    for (const auto& d : directions)
      if (d.name == name) return &d;
    return nullptr;
  }
  std::size_t count(const std::string& name) const {
    const auto* d = direction(name);
    return d ? d->total : 0;
  }
};

using TrialFn = std::function<std::vector<Probe>(Rng&, std::size_t)>;

struct TheoremSpec {
  std::string name;
  std::vector<std::string> aliases;
  std::string description;
  TrialFn run;
};

namespace campaign {

using witness::Module;
using witness::ModuleKind;

/// Probe list with small helpers.
struct Probes {
  std::vector<Probe> list;

  void add(std::string direction, bool pass, std::string detail = {}) {
    list.push_back({std::move(direction), pass, std::move(detail)});
  }
  /// A generated witness that misses its own hypothesis is a generator bug.
  bool witness(bool holds, const std::string& what) {
    if (!holds) add("witness", false, what + " witness misses its hypothesis");
    return holds;
  }
  /// Both sides of an equivalence; tallied under the verdict of the left.
  void agree(bool left, bool right, const std::string& what) {
    add(left ? "holds" : "fails", left == right,
        what + (left ? ": left holds" : ": left fails") + (right ? ", right holds" : ", right fails"));
  }
};

inline std::string describe(const LieAlgebra& g) { return g.name() + "(dim " + std::to_string(g.dim()) + ")"; }

inline LinearMap as_map(const Space& source, const Space& target, Matrix m) {
  return LinearMap(source, target, std::move(m));
}

inline Scalar nonzero_weight(Rng& rng) { return rng.nonzero_rational(); }

// ---- duality ---------------------------------------------------------------

inline std::vector<Probe> duality(Rng& rng, std::size_t) {
  Probes p;
  static const std::vector<std::string> names{"abelian-2", "abelian-3", "abelian-4", "aff1", "heisenberg3", "sl2",
                                              "so3"};
  const LieAlgebra& g = catalog_algebra(rng.pick(names));
  const Module V = witness::random_module(g, rng);
  const std::size_t n = g.dim(), m = V.rep.dim();

  const Tensor2 r(V.rep.space, g.space(), rng.matrix(m, n));
  const LinearMap a(V.rep.space, g.space(), rng.matrix(n, m));
  p.add("hat-check", check(hat(r)) == r && hat(check(a)) == a, describe(g));
  const Tensor2 s(g.space(), g.space(), rng.matrix(n, n));
  p.add("twist-dual", hat(twist(s)) == dual_map(hat(s)), describe(g));
  p.add("tilde-square", check(tilde_map(a)) == tilde_tensor(check(a)), describe(g));
  return p.list;
}

// ---- symmetric invariance --------------------------------------------------

inline std::vector<Probe> symmetric_invariance(Rng& rng, std::size_t) {
  Probes p;
  const LieAlgebra& g = witness::random_algebra(rng);
  const std::size_t n = g.dim();
  Tensor2 r = Tensor2::zero(g.space());
  const CatalogEntry& e = catalog_entry(g.name());
  if (const Tensor2* cas = e.tensor("casimir"); cas && rng.coin()) {
    r = rng.nonzero_rational() * *cas;
  } else {
    const Matrix a = rng.matrix(n, n);
    r = Tensor2(g.space(), g.space(), a + a.transpose());
  }
  const SymmetryCheck c = lemma_symmetry_check(g, r);
  p.add(c.invariant.ok() ? "holds" : "fails", c.consistent(), describe(g));
  return p.list;
}

// ---- O-operator lift -------------------------------------------------------

inline std::vector<Probe> o_operator_lift(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  const Module V = witness::random_module(g, rng);
  std::optional<LinearMap> alpha;
  if (positive) {
    alpha = witness::o_operator(g, V, rng);
    if (!p.witness(o_operator_residual(g, V.rep, *alpha).is_zero(), "O-operator")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), V.rep.dim(), [&](const Matrix& x) {
      return !o_operator_residual(g, V.rep, as_map(V.rep.space, g.space(), x)).is_zero();
    });
    if (!m) return p.list;
    alpha = as_map(V.rep.space, g.space(), *m);
  }
  const LiftResult lift = lift_o_operator(g, V.rep, *alpha);
  const Tensor2& r = lift.tensors.at(0);
  const bool solves = cybe_residual(lift.big, r).is_zero();
  p.add("skew", is_skew(r), describe(g));
  p.add(positive ? "positive" : "negative", solves == positive, describe(g));
  return p.list;
}

// ---- extended O-operators and ECYBE ----------------------------------------

struct ExtendedInstance {
  LieAlgebra g;
  Module V;
  LinearMap alpha;
  LinearMap beta;
  Scalar kappa;
};

/// Combination index c in [0, 6): beta = 0 or id, kappa in {-1, 0, 1}.
inline std::optional<ExtendedInstance> extended_instance(Rng& rng, std::size_t c, bool positive) {
  const bool beta_id = c / 3 == 1;
  const Scalar kappa = static_cast<long>(c % 3) - 1;
  const LieAlgebra* g = nullptr;
  if (beta_id && kappa == 1) {
    static const std::vector<std::string> kappa_one{"aff1", "abelian-1", "abelian-2", "abelian-3"};
    g = positive ? &catalog_algebra(rng.pick(kappa_one)) : &catalog_algebra("aff1");
  } else {
    g = positive ? &witness::random_algebra(rng) : &witness::random_nonabelian(rng);
  }
  const Module V = beta_id ? Module{adjoint_representation(*g), ModuleKind::adjoint} : witness::random_module(*g, rng);
  const LinearMap beta = beta_id ? LinearMap(V.rep.space, g->space(), Matrix::identity(g->dim()))
                                 : LinearMap::zero(V.rep.space, g->space());
  auto residual = [&](const Matrix& x) {
    return extended_o_residual(*g, V.rep, as_map(V.rep.space, g->space(), x), beta, kappa);
  };
  if (positive) {
    std::optional<LinearMap> a;
    if (beta_id) {
      if (auto s = witness::modified_solution(*g, kappa, rng)) a = as_map(V.rep.space, g->space(), s->matrix());
    } else {
      a = witness::o_operator(*g, V, rng);
    }
    if (!a) return std::nullopt;
    return ExtendedInstance{*g, V, *a, beta, kappa};
  }
  auto m = witness::random_nonsolution(rng, g->dim(), V.rep.dim(), [&](const Matrix& x) { return !residual(x).is_zero(); });
  if (!m) return std::nullopt;
  return ExtendedInstance{*g, V, as_map(V.rep.space, g->space(), *m), beta, kappa};
}

inline std::string describe(const ExtendedInstance& e) {
  return describe(e.g) + " beta=" + (e.beta.matrix().is_zero() ? "0" : "id") + " kappa=" + to_string(e.kappa);
}

inline std::vector<Probe> extended_lift(Rng& rng, std::size_t trial) {
  Probes p;
  const bool positive = (trial / 6) % 2 == 0;
  const auto inst = extended_instance(rng, trial % 6, positive);
  if (!inst) return p.list;
  const bool holds = extended_o_residual(inst->g, inst->V.rep, inst->alpha, inst->beta, inst->kappa).is_zero();
  if (!p.witness(holds == positive, "extended O-operator")) return p.list;
  const int sign = rng.coin() ? 1 : -1;
  const LiftResult lift = lift_extended(inst->g, inst->V.rep, inst->alpha, inst->beta, inst->kappa, sign);
  const Tensor2& r = lift.tensors.at(0);
  const bool solves = ecybe_residual(lift.big, r, (inst->kappa + 1) / 4).is_zero();
  p.add(positive ? "positive" : "negative", solves == positive, describe(*inst));
  p.add("symmetric-part-invariant", is_invariant(lift.big, pm_parts(r).plus), describe(*inst));
  return p.list;
}

/// Extended O-operator condition for r^_- with extension r^_+ on the
/// coadjoint module; r_+ must be invariant.
inline bool coadjoint_extended_holds(const LieAlgebra& G, const Tensor2& r, const Scalar& kappa) {
  const PmParts pm = pm_parts(r);
  return extended_o_residual(G, coadjoint_representation(G), hat(pm.minus), hat(pm.plus), kappa).is_zero();
}

inline std::vector<Probe> ecybe_operator(Rng& rng, std::size_t trial) {
  Probes p;
  LieAlgebra G;
  Tensor2 r;
  Scalar kappa;
  std::string what;
  if (trial % 3 == 2) {
    static const std::vector<std::string> semisimple{"sl2", "so3"};
    G = catalog_algebra(rng.pick(semisimple));
    kappa = static_cast<long>(rng.below(3)) - 1;
    r = rng.small_rational() * *catalog_entry(G.name()).tensor("casimir") + witness::skew_cybe_solution(G, rng);
    if (rng.coin()) {
      const Matrix a = rng.matrix(G.dim(), G.dim());
      r = r + Tensor2(G.space(), G.space(), a - a.transpose());
    }
    what = G.name() + " casimir kappa=" + to_string(kappa);
  } else {
    const auto inst = extended_instance(rng, rng.below(6), true);
    if (!inst) return p.list;
    const LiftResult lift = lift_extended(inst->g, inst->V.rep, inst->alpha, inst->beta, inst->kappa, rng.coin() ? 1 : -1);
    G = lift.big;
    r = lift.tensors.at(0);
    kappa = inst->kappa;
    what = "lift of " + describe(*inst);
    if (trial % 3 == 1) {
      const std::size_t n = G.dim();
      Matrix e(n, n);
      const std::size_t i = rng.below(n), j = rng.below(n);
      if (i != j) {
        const Scalar c = rng.nonzero_rational();
        e(i, j) = c;
        e(j, i) = -c;
      }
      r = r + Tensor2(G.space(), G.space(), e);
      what += " perturbed";
    }
  }
  if (!p.witness(is_invariant(G, pm_parts(r).plus), "invariant symmetric part")) return p.list;
  const bool ecybe = ecybe_residual(G, r, (kappa + 1) / 4).is_zero();
  p.agree(coadjoint_extended_holds(G, r, kappa), ecybe, what);
  return p.list;
}

// ---- generalized O-operators -----------------------------------------------

inline std::vector<Probe> generalized_o(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  Module V = witness::random_module(g, rng);
  std::optional<LinearMap> alpha;
  if (positive) {
    if (rng.coin()) {
      V = Module{adjoint_representation(g), ModuleKind::adjoint};
      if (auto s = witness::modified_solution(g, static_cast<long>(rng.below(3)) - 1, rng))
        alpha = as_map(V.rep.space, g.space(), s->matrix());
    }
    if (!alpha) alpha = witness::o_operator(g, V, rng);
    if (!p.witness(generalized_o_residuals(g, V.rep, *alpha).ok(), "generalized O-operator")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), V.rep.dim(), [&](const Matrix& x) {
      return !generalized_o_residuals(g, V.rep, as_map(V.rep.space, g.space(), x)).ok();
    });
    if (!m) return p.list;
    alpha = as_map(V.rep.space, g.space(), *m);
  }
  const LiftResult lift = lift_o_operator(g, V.rep, *alpha);
  const bool solves = all_zero(gcybe_residual(lift.big, lift.tensors.at(0)));
  p.add(positive ? "positive" : "negative", solves == positive, describe(g));
  return p.list;
}

// ---- Rota-Baxter constructions ---------------------------------------------

inline bool rb_pair_holds(const LiftResult& lift, const Scalar& lambda, std::string& detail) {
  const bool map_ok = rota_baxter_residual(lift.big, lift.maps.at(0), lambda).is_zero();
  const bool comp_ok = rota_baxter_residual(lift.big, lift.maps.at(1), lambda).is_zero();
  detail = std::string("map ") + (map_ok ? "solves" : "fails") + ", companion " + (comp_ok ? "solves" : "fails");
  return map_ok && comp_ok;
}

inline bool rb_pair_fails(const LiftResult& lift, const Scalar& lambda) {
  return !rota_baxter_residual(lift.big, lift.maps.at(0), lambda).is_zero() &&
         !rota_baxter_residual(lift.big, lift.maps.at(1), lambda).is_zero();
}

/// Records the two-sided verdict for a map and its companion.
inline void rb_verdict(Probes& p, const LiftResult& lift, const Scalar& lambda, bool positive,
                       const std::string& what) {
  std::string detail;
  const bool holds = rb_pair_holds(lift, lambda, detail);
  p.add(positive ? "positive" : "negative", positive ? holds : rb_pair_fails(lift, lambda), what + ": " + detail);
  const Matrix sum = lift.maps.at(0).matrix() + lift.maps.at(1).matrix();
  p.add("companion", sum == -lambda * Matrix::identity(lift.big.dim()), what);
}

inline std::vector<Probe> rota_baxter_o_operator(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  const Scalar lambda = rng.small_rational();
  const bool self = rng.coin();
  const GLieAlgebra K = self ? self_action(g) : as_g_lie_algebra(witness::random_module(g, rng).rep);
  auto residual = [&](const Matrix& x) {
    return o_operator_weighted_residual(g, K, as_map(K.pi.space, g.space(), x), lambda);
  };
  Matrix alpha;
  if (positive) {
    if (self) {
      alpha = witness::rb_operator(g, lambda, rng).matrix();
    } else {
      alpha = witness::rank_one_o_operator(g, K.pi, rng).matrix();
    }
    if (!p.witness(residual(alpha).is_zero(), "weighted O-operator")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), K.k.dim(), [&](const Matrix& x) { return !residual(x).is_zero(); });
    if (!m) return p.list;
    alpha = *m;
  }
  const LiftResult lift = o_op_to_rb(g, K, as_map(K.pi.space, g.space(), alpha), lambda);
  rb_verdict(p, lift, lambda, positive, describe(g) + (self ? " self" : " module") + " lambda=" + to_string(lambda));
  return p.list;
}

inline std::vector<Probe> rota_baxter_module(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  const Module V = witness::random_module(g, rng);
  const Scalar lambda = rng.small_rational();
  Matrix alpha;
  if (positive) {
    alpha = witness::o_operator(g, V, rng).matrix();
    if (!p.witness(o_operator_residual(g, V.rep, as_map(V.rep.space, g.space(), alpha)).is_zero(), "O-operator"))
      return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), V.rep.dim(), [&](const Matrix& x) {
      return !o_operator_residual(g, V.rep, as_map(V.rep.space, g.space(), x)).is_zero();
    });
    if (!m) return p.list;
    alpha = *m;
  }
  for (const long mu : {1L, 2L}) {
    const LiftResult lift = o_op_to_rb(g, as_g_lie_algebra(V.rep), as_map(V.rep.space, g.space(), alpha), lambda, mu);
    rb_verdict(p, lift, lambda, positive,
               describe(g) + " mu=" + std::to_string(mu) + " lambda=" + to_string(lambda));
  }
  return p.list;
}

inline std::vector<Probe> rota_baxter_invertible(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const Scalar lambda = rng.small_rational();
  const Scalar mu1 = rng.nonzero_rational();
  Scalar mu2;
  do mu2 = rng.small_rational();
  while (mu2 == lambda || mu2 == -lambda);

  std::optional<LieAlgebra> g;
  std::optional<Representation> V;
  Matrix alpha;
  if (positive) {
    switch (rng.below(3)) {
      case 0: {
        static const std::vector<std::string> ab{"abelian-1", "abelian-2", "abelian-3", "abelian-4"};
        g = catalog_algebra(rng.pick(ab));
        V = rng.coin() ? trivial_representation(*g, g->dim()) : adjoint_representation(*g);
        alpha = rng.invertible_matrix(g->dim());
        break;
      }
      case 1: {
        g = catalog_algebra("heisenberg3");
        V = adjoint_representation(*g);
        do alpha = witness::weight_zero_rb(*g, rng).matrix();
        while (is_zero(determinant(alpha)));
        break;
      }
      default: {
        g = catalog_algebra("aff1");
        V = coadjoint_representation(*g);
        Tensor2 r = Tensor2::zero(g->space());
        do r = witness::skew_cybe_solution(*g, rng);
        while (is_zero(determinant(r.coeffs())));
        alpha = hat(r).matrix();
        break;
      }
    }
    if (!p.witness(o_operator_residual(*g, *V, as_map(V->space, g->space(), alpha)).is_zero(), "invertible O-operator"))
      return p.list;
  } else {
    g = witness::random_nonabelian(rng);
    V = rng.coin() ? adjoint_representation(*g) : coadjoint_representation(*g);
    bool found = false;
    for (int i = 0; i < 64 && !found; ++i) {
      alpha = rng.invertible_matrix(g->dim());
      found = !o_operator_residual(*g, *V, as_map(V->space, g->space(), alpha)).is_zero();
    }
    if (!found) return p.list;
  }
  const LiftResult lift = invertible_o_to_rb(*g, *V, as_map(V->space, g->space(), alpha), lambda, mu1, mu2);
  rb_verdict(p, lift, lambda, positive,
             describe(*g) + " lambda=" + to_string(lambda) + " mu1=" + to_string(mu1) + " mu2=" + to_string(mu2));
  return p.list;
}

inline std::vector<Probe> rota_baxter_differential(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  if (rng.coin()) {
    // Weight-one operators into a g-Lie algebra, lifted at weight -1.
    const bool self = rng.coin();
    const GLieAlgebra K = self ? self_action(g) : as_g_lie_algebra(witness::random_module(g, rng).rep);
    auto residual = [&](const Matrix& x) { return reldiff_residual(g, K, as_map(g.space(), K.pi.space, x), 1); };
    Matrix f;
    if (positive) {
      f = self ? witness::lie_endomorphism(g, rng) - Matrix::identity(g.dim())
               : witness::module_cocycle(g, K.pi, rng).matrix();
      if (!p.witness(residual(f).is_zero(), "relative differential operator")) return p.list;
    } else {
      auto m = witness::random_nonsolution(rng, K.k.dim(), g.dim(), [&](const Matrix& x) { return !residual(x).is_zero(); });
      if (!m) return p.list;
      f = *m;
    }
    const LiftResult lift = reldiff_to_rb(g, K, as_map(g.space(), K.pi.space, f));
    rb_verdict(p, lift, -1, positive, describe(g) + (self ? " self" : " module"));
    return p.list;
  }
  // Module form with free weight and scale.
  const Module V = witness::random_module(g, rng);
  const Scalar lambda = rng.nonzero_rational(), mu = rng.nonzero_rational();
  auto residual = [&](const Matrix& x) { return reldiff_residual(g, V.rep, as_map(g.space(), V.rep.space, x)); };
  Matrix f;
  if (positive) {
    f = witness::module_cocycle(g, V.rep, rng).matrix();
    if (!p.witness(residual(f).is_zero(), "module differential operator")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, V.rep.dim(), g.dim(), [&](const Matrix& x) { return !residual(x).is_zero(); });
    if (!m) return p.list;
    f = *m;
  }
  const LiftResult lift = reldiff_to_rb(g, V.rep, as_map(g.space(), V.rep.space, f), lambda, mu);
  rb_verdict(p, lift, lambda, positive,
             describe(g) + " module lambda=" + to_string(lambda) + " mu=" + to_string(mu));
  return p.list;
}

// ---- Yang-Baxter lifts of operators on g -----------------------------------

inline std::vector<Probe> baxter_lift(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  Matrix R;
  if (positive) {
    R = witness::mybe_solution(g, rng).matrix();
    if (!p.witness(modified_ybe_residual(g, witness::endo(g, R)).is_zero(), "modified Yang-Baxter")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), g.dim(), [&](const Matrix& x) {
      return !modified_ybe_residual(g, witness::endo(g, x)).is_zero();
    });
    if (!m) return p.list;
    R = *m;
  }
  const Representation ad = adjoint_representation(g);
  for (const int sign : {1, -1}) {
    const LiftResult lift =
        lift_extended(g, ad, as_map(ad.space, g.space(), R), LinearMap(ad.space, g.space(), Matrix::identity(g.dim())),
                      -1, sign);
    const bool solves = cybe_residual(lift.big, lift.tensors.at(0)).is_zero();
    p.add(positive ? "positive" : "negative", solves == positive, describe(g) + " sign=" + std::to_string(sign));
  }
  return p.list;
}

inline std::vector<Probe> rota_baxter_lift(Rng& rng, std::size_t) {
  Probes p;
  const bool positive = rng.coin();
  const LieAlgebra& g = positive ? witness::random_algebra(rng) : witness::random_nonabelian(rng);
  const Scalar lambda = rng.nonzero_rational();
  Matrix P;
  if (positive) {
    P = witness::rb_operator(g, lambda, rng).matrix();
    if (!p.witness(rota_baxter_residual(g, witness::endo(g, P), lambda).is_zero(), "Rota-Baxter")) return p.list;
  } else {
    auto m = witness::random_nonsolution(rng, g.dim(), g.dim(), [&](const Matrix& x) {
      return !rota_baxter_residual(g, witness::endo(g, x), lambda).is_zero();
    });
    if (!m) return p.list;
    P = *m;
  }
  const LiftResult lift = lift_rb_weight(g, witness::endo(g, P), lambda);
  for (std::size_t t = 0; t < lift.tensors.size(); ++t) {
    const bool solves = cybe_residual(lift.big, lift.tensors[t]).is_zero();
    p.add(positive ? "positive" : "negative", solves == positive,
          describe(g) + " lambda=" + to_string(lambda) + " tensor " + std::to_string(t + 1));
  }
  return p.list;
}

// ---- weighted generalized CYBE ---------------------------------------------

inline std::vector<Probe> weighted_gcybe(Rng& rng, std::size_t trial) {
  Probes p;
  const LieAlgebra& g = witness::random_algebra(rng);
  if (trial % 2 == 0) {
    // Weight 0: the lift of an extended O-operator solves GCYBE.
    const GLieAlgebra K = self_action(g);
    const Scalar target = static_cast<long>(rng.below(3)) - 1;
    const Scalar mu = rng.small_rational();
    const Scalar kappa = target - mu;
    const auto s = witness::modified_solution(g, target, rng);
    if (!s) return p.list;
    const LinearMap alpha = as_map(K.pi.space, g.space(), s->matrix());
    const LinearMap beta(K.pi.space, g.space(), Matrix::identity(g.dim()));
    if (!p.witness(extended_o_residual(g, K, alpha, beta, 0, kappa, mu).is_zero(), "weight-zero extended O-operator"))
      return p.list;
    const LiftResult lift = lift_o_operator(g, K.pi, alpha);
    p.add("weight-zero", all_zero(gcybe_residual(lift.big, lift.tensors.at(0))),
          describe(g) + " kappa=" + to_string(kappa) + " mu=" + to_string(mu));
    return p.list;
  }
  const Scalar lambda = rng.nonzero_rational();
  const GLieAlgebra K = self_action(g);
  const LinearMap alpha = as_map(K.pi.space, g.space(), witness::rb_operator(g, lambda, rng).matrix());
  if (!p.witness(o_operator_weighted_residual(g, K, alpha, lambda).is_zero(), "weighted O-operator")) return p.list;
  const LiftResult lift = lift_o_operator(g, K.pi, alpha);
  p.agree(lakm_residuals(g, K, alpha, lambda).ok(), all_zero(gcybe_residual(lift.big, lift.tensors.at(0))),
          describe(g) + " lambda=" + to_string(lambda));
  return p.list;
}

// ---- induced bracket and coboundary bialgebras -----------------------------

inline std::vector<Probe> induced_bracket(Rng& rng, std::size_t) {
  Probes p;
  const LieAlgebra& g = witness::random_algebra(rng);
  Module V = witness::random_module(g, rng);
  LinearMap alpha = LinearMap::zero(V.rep.space, g.space());
  switch (rng.below(3)) {
    case 0: alpha = witness::o_operator(g, V, rng); break;
    case 1:
      V = Module{adjoint_representation(g), ModuleKind::adjoint};
      if (auto s = witness::modified_solution(g, static_cast<long>(rng.below(3)) - 1, rng))
        alpha = as_map(V.rep.space, g.space(), s->matrix());
      else
        alpha = as_map(V.rep.space, g.space(), rng.matrix(g.dim(), g.dim()));
      break;
    default: alpha = as_map(V.rep.space, g.space(), rng.matrix(g.dim(), V.rep.dim())); break;
  }
  p.agree(generalized_o_residuals(g, V.rep, alpha).cyclic.is_zero(), alpha_bracket_jacobi(g, V.rep, alpha).ok(),
          describe(g));
  return p.list;
}

inline Tensor2 random_bialgebra_candidate(const LieAlgebra& g, Rng& rng) {
  const std::size_t n = g.dim();
  const Tensor2* cas = catalog_entry(g.name()).tensor("casimir");
  const Matrix a = rng.matrix(n, n);
  const Tensor2 skew(g.space(), g.space(), a - a.transpose());
  switch (rng.below(5)) {
    case 0: return witness::skew_cybe_solution(g, rng);
    case 1: return cas ? rng.small_rational() * *cas + witness::skew_cybe_solution(g, rng) : skew;
    case 2: return skew;
    case 3: return cas ? rng.small_rational() * *cas + skew : Tensor2(g.space(), g.space(), a);
    default: return Tensor2(g.space(), g.space(), a);
  }
}

inline std::vector<Probe> coboundary_bialgebra(Rng& rng, std::size_t) {
  Probes p;
  const LieAlgebra& g = witness::random_algebra(rng);
  const Tensor2 r = random_bialgebra_candidate(g, rng);
  const CoalgebraCheck c = is_lie_coalgebra(g, r);
  p.agree(c.direct.ok(), c.criterion.ok(), describe(g));
  const Table pairing = dual_bracket_pairing(g, r);
  p.add("bracket-formula", pairing == dual_bracket_formula(g, r), describe(g));
  if (is_invariant(g, pm_parts(r).plus)) p.add("skew-bracket", pairing == skew_dual_bracket(g, r), describe(g));
  return p.list;
}

// ---- Kupershmidt -----------------------------------------------------------

inline std::vector<Probe> kupershmidt(Rng& rng, std::size_t) {
  Probes p;
  // Perturbing over an abelian algebra changes nothing.
  const bool perturb = rng.coin();
  const LieAlgebra& g = perturb ? witness::random_nonabelian(rng) : witness::random_algebra(rng);
  const std::size_t n = g.dim();
  Tensor2 r = witness::skew_cybe_solution(g, rng);
  if (perturb) {
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i != j) r = r + rng.nonzero_rational() * Tensor2::wedge(g.space(), i, j);
  }
  p.agree(cybe_residual(g, r).is_zero(), kupershmidt_residual(g, r).is_zero(), describe(g));
  return p.list;
}

}  // namespace campaign

inline const std::vector<TheoremSpec>& theorems() {
  static const std::vector<TheoremSpec> list{
      {"duality", {}, "hat/check inversion, twist duality and the tilde square", campaign::duality},
      {"symmetric-invariance",
       {},
       "for symmetric r: invariance, antisymmetry of r^ and equivariance of r^ agree",
       campaign::symmetric_invariance},
      {"o-operator-lift",
       {"bai"},
       "alpha is an O-operator iff its skew lift solves CYBE",
       campaign::o_operator_lift},
      {"extended-lift",
       {"skewgm"},
       "(alpha, beta) extended of mass kappa iff the lift solves ECYBE at (kappa+1)/4",
       campaign::extended_lift},
      {"ecybe-operator",
       {"cybea"},
       "with r_+ invariant: ECYBE at (kappa+1)/4 iff r^_- extended with extension r^_+ of mass kappa",
       campaign::ecybe_operator},
      {"generalized-o-operator",
       {"exogcybe"},
       "the lift solves GCYBE iff both generalized residuals vanish",
       campaign::generalized_o},
      {"rota-baxter-o-operator",
       {"crbb"},
       "(x,u) -> (alpha u - lambda x, 0) is Rota-Baxter iff alpha is an O-operator of weight lambda",
       campaign::rota_baxter_o_operator},
      {"rota-baxter-module",
       {"cocrbb"},
       "module version with a scale mu",
       campaign::rota_baxter_module},
      {"rota-baxter-invertible",
       {},
       "invertible O-operators and the two-parameter Rota-Baxter family",
       campaign::rota_baxter_invertible},
      {"rota-baxter-differential",
       {"crdiff"},
       "(x,u) -> (x, f x) is Rota-Baxter iff f is a relative differential operator",
       campaign::rota_baxter_differential},
      {"baxter-lift",
       {"motoaybe1c"},
       "R solves the modified Yang-Baxter equation iff R~_- +- id~_+ solves CYBE",
       campaign::baxter_lift},
      {"rota-baxter-lift",
       {"motoaybe1d"},
       "P Rota-Baxter of weight lambda iff both rb-weight tensors solve CYBE",
       campaign::rota_baxter_lift},
      {"weighted-gcybe",
       {"lakm"},
       "GCYBE for lifts of weighted O-operators",
       campaign::weighted_gcybe},
      {"induced-bracket",
       {"bracycl"},
       "the cyclic residual vanishes iff [u,v]_alpha satisfies Jacobi",
       campaign::induced_bracket},
      {"coboundary-bialgebra",
       {"liebialgebra"},
       "the dual bracket is Lie iff r_+ is invariant and r solves GCYBE",
       campaign::coboundary_bialgebra},
      {"kupershmidt",
       {},
       "r solves CYBE iff r^ is a Kupershmidt operator on the coadjoint module",
       campaign::kupershmidt},
  };
  return list;
}

inline const TheoremSpec& find_theorem(const std::string& name) {
  for (const auto& t : theorems()) {
    if (t.name == name) return t;
    for (const auto& a : t.aliases)
      if (a == name) return t;
  }
  throw NotFoundError("unknown theorem '" + name + "'");
}

inline CampaignSummary run_campaign(const TheoremSpec& theorem, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionError("a campaign needs at least one trial");
  CampaignSummary out;
  out.theorem = theorem.name;
  out.seed = seed;
  out.trials = trials;
  auto tally = [&](const std::string& dir) -> DirectionTally& {
    for (auto& d : out.directions)
      if (d.name == dir) return d;
    out.directions.push_back({dir, 0, 0});
    return out.directions.back();
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    Rng rng(s);
    std::vector<Probe> probes;
    try {
      probes = theorem.run(rng, t);
    } catch (const Error& e) {
      probes = {{"error", false, e.what()}};
    }
    for (const auto& pr : probes) {
      DirectionTally& d = tally(pr.direction);
      ++d.total;
      if (pr.pass) {
        ++d.passed;
      } else {
        out.failures.push_back({t, s, pr.direction, pr.detail});
      }
    }
  }
  return out;
}

inline CampaignSummary run_campaign(const std::string& name, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionError("a campaign needs at least one trial");
  return run_campaign(find_theorem(name), trials, seed);
}

inline nlohmann::ordered_json summary_json(const CampaignSummary& s) {
  nlohmann::ordered_json j;
  j["theorem"] = s.theorem;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["ok"] = s.ok();
  j["directions"] = nlohmann::ordered_json::array();
  for (const auto& d : s.directions) j["directions"].push_back({{"name", d.name}, {"passed", d.passed}, {"total", d.total}});
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : s.failures)
    j["failures"].push_back({{"trial", f.trial}, {"seed", f.seed}, {"direction", f.direction}, {"detail", f.detail}});
  return j;
}

inline std::string summary_text(const CampaignSummary& s) {
  std::string out = s.theorem + ": " + (s.ok() ? "ok" : "FAILED") + " (" + std::to_string(s.trials) +
                    " trials, seed " + std::to_string(s.seed) + ")\n";
  for (const auto& d : s.directions)
    out += "  " + d.name + ": " + std::to_string(d.passed) + "/" + std::to_string(d.total) + "\n";
  for (const auto& f : s.failures)
    out += "  failure at trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.seed) + ") [" + f.direction +
           "] " + f.detail + "\n";
  return out;
}

}  // namespace ybe
