#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/operator_checkers.hpp"
#include "ybe/report.hpp"
#include "ybe/tensor_calculus.hpp"
#include "ybe/ybe_checkers.hpp"

namespace ybe {

struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, Scalar>> params;

  const Scalar& param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw NotFoundError("provenance has no parameter '" + key + "'");
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Output of a constructive theorem: the enlarged algebra plus the tensors
/// or operators built on it.
struct LiftResult {
  LieAlgebra big;
  std::vector<Tensor2> tensors;
  std::vector<LinearMap> maps;
  Provenance provenance;

  friend bool operator==(const LiftResult&, const LiftResult&) = default;
};

/// g |x (V*, rho*).
inline LieAlgebra coadjoint_double(const LieAlgebra& g, const Representation& V) {
  validate_shape(g, V);
  return semidirect_product(g, as_g_lie_algebra(dual_representation(V)));
}

/// sum_i e_i* (x) alpha(e_i) as a tensor over g + V*, before symmetrizing.
inline Tensor2 lift_tensor(const Representation& V, const LinearMap& alpha) {
  require_same_space(alpha.source(), V.space, "lift source");
  return rotate_summands(tilde_tensor(check(alpha)), V.space.blocks().size());
}

inline LiftResult lift_o_operator(const LieAlgebra& g, const Representation& V, const LinearMap& alpha) {
  require_same_space(alpha.target(), g.space(), "lift target");
  if (!check_representation(g, V).ok()) throw PreconditionError("module is not a representation");
  LiftResult out;
  out.big = coadjoint_double(g, V);
  out.tensors.push_back(pm_parts(lift_tensor(V, alpha)).minus);
  out.provenance = {"o-op", {}};
  return out;
}

/// lift(alpha)_- + sign * lift(beta)_+; an ECYBE solution of mass
/// (kappa + 1)/4 exactly when (alpha, beta) is an extended O-operator.
inline LiftResult lift_extended(const LieAlgebra& g, const Representation& V, const LinearMap& alpha,
                                const LinearMap& beta, const Scalar& kappa, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  require_same_space(alpha.target(), g.space(), "lift target");
  if (!check_representation(g, V).ok()) throw PreconditionError("module is not a representation");
  if (!antisym_hom_residual(g, V, beta, kappa).ok()) {
    throw PreconditionError("extension is not an antisymmetric module homomorphism of the given mass");
  }
  LiftResult out;
  out.big = coadjoint_double(g, V);
  out.tensors.push_back(pm_parts(lift_tensor(V, alpha)).minus + Scalar(sign) * pm_parts(lift_tensor(V, beta)).plus);
  out.provenance = {"extended", {{"kappa", kappa}, {"sign", Scalar(sign)}, {"mass", (kappa + 1) / 4}}};
  return out;
}

/// For P on g and lambda != 0, with T = lift(id) over g |x g*:
///   (2/lambda) lift(P)_- + T   and   (2/lambda) lift(P)_- - twist(T).
/// Both solve CYBE exactly when P is Rota-Baxter of weight lambda.
inline LiftResult lift_rb_weight(const LieAlgebra& g, const LinearMap& P, const Scalar& lambda) {
  if (is_zero(lambda)) throw PreconditionError("rb-weight lift requires a nonzero weight");
  const Representation V = adjoint_representation(g);
  require_same_space(P.source(), g.space(), "rb-weight source");
  require_same_space(P.target(), g.space(), "rb-weight target");
  const Tensor2 skew = Scalar(2) / lambda * pm_parts(lift_tensor(V, P)).minus;
  const Tensor2 t = lift_tensor(V, LinearMap::identity(g.space()));
  LiftResult out;
  out.big = coadjoint_double(g, V);
  out.tensors = {skew + t, skew - twist(t)};
  out.provenance = {"rb-weight", {{"lambda", lambda}}};
  return out;
}

namespace detail {

inline Matrix block_matrix(std::size_t n, std::size_t m, const Matrix& tl, const Matrix& tr, const Matrix& bl,
                           const Matrix& br) {
  Matrix out(n + m, n + m);
  auto put = [&](const Matrix& b, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
  };
  put(tl, 0, 0);
  put(tr, 0, n);
  put(bl, n, 0);
  put(br, n, n);
  return out;
}

inline LiftResult rb_pair(LieAlgebra big, Matrix m, Matrix companion, Provenance prov) {
  LiftResult out;
  const Space s = big.space();
  out.maps = {LinearMap(s, s, std::move(m)), LinearMap(s, s, std::move(companion))};
  out.big = std::move(big);
  out.provenance = std::move(prov);
  return out;
}

}  // namespace detail

/// (x, u) |-> (mu a(u) - lambda x, 0) on g |x k, with companion
/// -lambda id - that map = (x, u) |-> (-mu a(u), -lambda u).
inline LiftResult o_op_to_rb(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& alpha, const Scalar& lambda,
                             const Scalar& mu = 1) {
  detail::require_map(alpha, K.pi.space, g.space(), "o-op-to-rb");
  const std::size_t n = g.dim(), m = K.k.dim();
  LieAlgebra big = semidirect_product(g, K);
  const Matrix I = Matrix::identity(n);
  Matrix map = detail::block_matrix(n, m, -lambda * I, mu * alpha.matrix(), Matrix(m, n), Matrix(m, m));
  Matrix comp = -lambda * Matrix::identity(n + m) - map;
  return detail::rb_pair(std::move(big), std::move(map), std::move(comp),
                         {"o-op-to-rb", {{"lambda", lambda}, {"mu", mu}}});
}

/// (x, u) |-> (mu1 a(u) - (mu2+lambda)/2 x, (lambda^2-mu2^2)/(4 mu1) a^-1(x) + (mu2-lambda)/2 u).
inline LiftResult invertible_o_to_rb(const LieAlgebra& g, const Representation& V, const LinearMap& alpha,
                                     const Scalar& lambda, const Scalar& mu1, const Scalar& mu2) {
  detail::require_map(alpha, V.space, g.space(), "invertible-o-to-rb");
  if (is_zero(mu1)) throw PreconditionError("mu1 must be nonzero");
  if (mu2 == lambda || mu2 == -lambda) throw PreconditionError("mu2 must differ from +-lambda");
  if (V.dim() != g.dim()) throw PreconditionError("invertible-o-to-rb needs dim V = dim g");
  const auto inv = try_inverse(alpha.matrix());
  if (!inv) throw PreconditionError("alpha is singular");
  const std::size_t n = g.dim();
  LieAlgebra big = semidirect_product(g, as_g_lie_algebra(V));
  const Matrix I = Matrix::identity(n);
  const Scalar half(1, 2);
  Matrix map = detail::block_matrix(n, n, -(half * (mu2 + lambda)) * I, mu1 * alpha.matrix(),
                                    Scalar((lambda * lambda - mu2 * mu2) / (4 * mu1)) * *inv,
                                    half * (mu2 - lambda) * I);
  Matrix comp = -lambda * Matrix::identity(2 * n) - map;
  return detail::rb_pair(std::move(big), std::move(map), std::move(comp),
                         {"invertible-o-to-rb", {{"lambda", lambda}, {"mu1", mu1}, {"mu2", mu2}}});
}

/// (x, u) |-> (x, f(x)), Rota-Baxter of weight -1 exactly when f is a
/// relative differential operator of weight 1; companion (0, u - f(x)).
inline LiftResult reldiff_to_rb(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& f) {
  detail::require_map(f, g.space(), K.pi.space, "reldiff-to-rb");
  const std::size_t n = g.dim(), m = K.k.dim();
  LieAlgebra big = semidirect_product(g, K);
  Matrix map = detail::block_matrix(n, m, Matrix::identity(n), Matrix(n, m), f.matrix(), Matrix(m, m));
  Matrix comp = Matrix::identity(n + m) - map;
  return detail::rb_pair(std::move(big), std::move(map), std::move(comp), {"reldiff-to-rb", {{"lambda", -1}}});
}

/// Module form: (x, u) |-> (-lambda x, mu f(x)), weight lambda; companion
/// (0, -mu f(x) - lambda u).
inline LiftResult reldiff_to_rb(const LieAlgebra& g, const Representation& V, const LinearMap& f,
                                const Scalar& lambda, const Scalar& mu) {
  if (is_zero(lambda) || is_zero(mu)) throw PreconditionError("lambda and mu must be nonzero");
  detail::require_map(f, g.space(), V.space, "reldiff-to-rb");
  const std::size_t n = g.dim(), m = V.dim();
  LieAlgebra big = semidirect_product(g, as_g_lie_algebra(V));
  Matrix map =
      detail::block_matrix(n, m, -lambda * Matrix::identity(n), Matrix(n, m), mu * f.matrix(), Matrix(m, m));
  Matrix comp = -lambda * Matrix::identity(n + m) - map;
  return detail::rb_pair(std::move(big), std::move(map), std::move(comp),
                         {"reldiff-to-rb", {{"lambda", lambda}, {"mu", mu}}});
}

/// Re-checks the equation a lift promises on its own output.
inline Report verify_lift(const LiftResult& lift) {
  const auto& c = lift.provenance.construction;
  Report rep;
  rep.context = "verify " + c;
  if (c == "o-op" || c == "rb-weight") {
    rep.kind = ResidualKind::tensor3;
    for (std::size_t t = 0; t < lift.tensors.size(); ++t)
      rep.absorb(cybe_residual(lift.big, lift.tensors[t]).coeffs(), "tensor " + std::to_string(t + 1));
    if (c == "o-op" && !is_skew(lift.tensors.at(0))) rep.add({}, 1, "not skew");
  } else if (c == "extended") {
    rep.kind = ResidualKind::tensor3;
    const Scalar mass = lift.provenance.param("mass");
    rep.absorb(ecybe_residual(lift.big, lift.tensors.at(0), mass).coeffs(), "ecybe");
  } else {
    rep.kind = ResidualKind::map_residual;
    const Scalar lambda = lift.provenance.param("lambda");
    for (std::size_t t = 0; t < lift.maps.size(); ++t)
      rep.absorb(rota_baxter_residual(lift.big, lift.maps[t], lambda), t == 0 ? "map" : "companion");
  }
  return rep;
}

// ---- coboundary Lie bialgebras ---------------------------------------------

/// delta(e_x) = (ad x (x) 1 + 1 (x) ad x) r, one tensor per basis element.
inline std::vector<Tensor2> coboundary_delta(const LieAlgebra& g, const Tensor2& r) {
  return invariance_residual(g, r);
}

/// [e_a*, e_b*] read off delta by pairing: entry (a, b, x).
inline Table dual_bracket_pairing(const LieAlgebra& g, const Tensor2& r) {
  const auto delta = coboundary_delta(g, r);
  const std::size_t n = g.dim();
  Table out({n, n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out(a, b, x) = delta[x].coeffs()(a, b);
  return out;
}

/// [a*, b*] = ad*(r^(a*)) b* + ad*(r^*(b*)) a*, r^* = dual of r^.
inline Table dual_bracket_formula(const LieAlgebra& g, const Tensor2& r) {
  detail::require_over(g, r, "dual_bracket_formula");
  const std::size_t n = g.dim();
  const LinearMap rh = hat(r), rs = dual_map(hat(r));
  std::vector<Matrix> left, right;
  for (std::size_t a = 0; a < n; ++a) {
    left.push_back(coad(g, rh(unit_vector(n, a))));
    right.push_back(coad(g, rs(unit_vector(n, a))));
  }
  Table out({n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) detail::write_row(out, a, b, left[a].column(b) + right[b].column(a));
  return out;
}

/// ad*(r_-^(a*)) b* - ad*(r_-^(b*)) a*.
inline Table skew_dual_bracket(const LieAlgebra& g, const Tensor2& r) {
  detail::require_over(g, r, "skew_dual_bracket");
  const std::size_t n = g.dim();
  const LinearMap rm = hat(pm_parts(r).minus);
  std::vector<Matrix> cs;
  for (std::size_t a = 0; a < n; ++a) cs.push_back(coad(g, rm(unit_vector(n, a))));
  Table out({n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) detail::write_row(out, a, b, cs[a].column(b) - cs[b].column(a));
  return out;
}

struct CoalgebraCheck {
  Report direct;     ///< antisymmetry and Jacobi of the dual bracket
  Report criterion;  ///< invariance of r_+ and GCYBE

  bool agree() const { return direct.ok() == criterion.ok(); }
  bool ok() const { return agree() && direct.ok(); }
};

inline CoalgebraCheck is_lie_coalgebra(const LieAlgebra& g, const Tensor2& r) {
  const std::size_t n = g.dim();
  const Table br = dual_bracket_pairing(g, r);
  CoalgebraCheck out;
  out.direct.kind = ResidualKind::scalar_table;
  out.direct.context = "dual bracket";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x) out.direct.add({a, b, x}, br(a, b, x) + br(b, a, x), "antisymmetry");
  if (out.direct.ok()) {
    std::vector<Scalar> c(br.size());
    for (std::size_t i = 0; i < br.size(); ++i) c[i] = br.flat(i);
    std::vector<std::string> names;
    for (const auto& s : g.basis_names()) names.push_back(s + "*");
    for (auto e : check_jacobi(LieAlgebra(g.name() + "*", std::move(names), std::move(c))).nonzero) {
      e.label = "jacobi";
      out.direct.nonzero.push_back(std::move(e));
    }
  }
  out.criterion = to_report(invariance_residual(g, pm_parts(r).plus), "criterion");
  for (auto& e : out.criterion.nonzero) e.label = "invariance";
  for (auto e : to_report(gcybe_residual(g, r), "gcybe").nonzero) {
    e.label = "gcybe";
    out.criterion.nonzero.push_back(std::move(e));
  }
  return out;
}

}  // namespace ybe
