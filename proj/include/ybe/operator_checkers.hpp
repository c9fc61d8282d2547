#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/report.hpp"
#include "ybe/table.hpp"

namespace ybe {

namespace detail {

inline void require_map(const LinearMap& m, const Space& source, const Space& target, const char* what) {
  require_same_space(m.source(), source, std::string(what) + " source");
  require_same_space(m.target(), target, std::string(what) + " target");
}

inline void write_row(Table& t, std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) t(i, j, k) = v[k];
}

}  // namespace detail

/// [a(x), a(y)] - a(pi(a x) y - pi(a y) x + lambda [x,y]_k), tabulated over
/// basis pairs of k.
inline Table o_operator_weighted_residual(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& alpha,
                                          const Scalar& lambda) {
  validate_shape(g, K.pi);
  detail::require_map(alpha, K.pi.space, g.space(), "O-operator");
  const std::size_t m = K.k.dim(), n = g.dim();
  std::vector<Element> images;
  std::vector<Matrix> acts;
  for (std::size_t u = 0; u < m; ++u) {
    images.push_back(alpha(unit_vector(m, u)));
    acts.push_back(K.pi.action(images.back()));
  }
  Table out({m, m, n});
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector inner = acts[u].column(v) - acts[v].column(u);
      if (!is_zero(lambda)) inner += lambda * K.k.bracket(unit_vector(m, u), unit_vector(m, v));
      detail::write_row(out, u, v, g.bracket(images[u], images[v]) - alpha(inner));
    }
  return out;
}

/// [a(u), a(v)] - a(rho(a u) v - rho(a v) u).
inline Table o_operator_residual(const LieAlgebra& g, const Representation& V, const LinearMap& alpha) {
  return o_operator_weighted_residual(g, as_g_lie_algebra(V), alpha, 0);
}

/// [Px,Py] - P([Px,y] + [x,Py] + lambda [x,y]).
inline Table rota_baxter_residual(const LieAlgebra& g, const LinearMap& P, const Scalar& lambda) {
  return o_operator_weighted_residual(g, self_action(g), P, lambda);
}

/// Antisymmetric module homomorphism conditions on beta: k -> g. Each
/// condition scaled by zero is dropped; a nonzero scale is divided out.
///   "antisymmetry":  beta(x).y + beta(y).x           index (x, y, c)
///   "equivariance":  beta(xi.x) - [xi, beta(x)]       index (xi, x, c)
///   "mu":            beta([x,y]_k).z - [beta(x).y, z]_k   index (x, y, z, c)
inline Report antisym_hom_residual(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& beta,
                                   const Scalar& kappa, const std::optional<Scalar>& mu = std::nullopt) {
  validate_shape(g, K.pi);
  detail::require_map(beta, K.pi.space, g.space(), "extension");
  const std::size_t m = K.k.dim(), n = g.dim();
  Report rep;
  rep.kind = ResidualKind::map_residual;
  rep.context = "antisymmetric module homomorphism";
  if (!is_zero(kappa)) {
    std::vector<Matrix> acts;
    for (std::size_t x = 0; x < m; ++x) acts.push_back(K.pi.action(beta(unit_vector(m, x))));
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x; y < m; ++y) {
        const Vector v = acts[x].column(y) + acts[y].column(x);
        for (std::size_t c = 0; c < m; ++c) rep.add({x, y, c}, v[c], "antisymmetry");
      }
    for (std::size_t xi = 0; xi < n; ++xi)
      for (std::size_t x = 0; x < m; ++x) {
        const Vector v = beta(K.pi.mats[xi].column(x)) - g.bracket(unit_vector(n, xi), beta(unit_vector(m, x)));
        for (std::size_t c = 0; c < n; ++c) rep.add({xi, x, c}, v[c], "equivariance");
      }
  }
  if (mu && !is_zero(*mu) && !K.k.is_abelian()) {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        const Vector ex = unit_vector(m, x), ey = unit_vector(m, y);
        const Matrix left = K.pi.action(beta(K.k.bracket(ex, ey)));
        const Vector bxy = K.pi.act(beta(ex), ey);
        for (std::size_t z = 0; z < m; ++z) {
          const Vector v = left.column(z) - K.k.bracket(bxy, unit_vector(m, z));
          for (std::size_t c = 0; c < m; ++c) rep.add({x, y, z, c}, v[c], "mu");
        }
      }
  }
  return rep;
}

inline Report antisym_hom_residual(const LieAlgebra& g, const Representation& V, const LinearMap& beta,
                                   const Scalar& kappa) {
  return antisym_hom_residual(g, as_g_lie_algebra(V), beta, kappa);
}

/// [ax,ay] - a(ax.y - ay.x + lambda[x,y]_k) - kappa[bx,by] - mu b([x,y]_k).
/// Throws PreconditionError unless beta is antisymmetric of mass (kappa, mu).
inline Table extended_o_residual(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& alpha,
                                 const LinearMap& beta, const Scalar& lambda, const Scalar& kappa, const Scalar& mu) {
  if (!antisym_hom_residual(g, K, beta, kappa, mu).ok()) {
    throw PreconditionError("extension is not an antisymmetric module homomorphism of the given mass");
  }
  Table out = o_operator_weighted_residual(g, K, alpha, lambda);
  const std::size_t m = K.k.dim();
  std::vector<Element> images;
  for (std::size_t u = 0; u < m; ++u) images.push_back(beta(unit_vector(m, u)));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vector extra = kappa * g.bracket(images[u], images[v]);
      if (!is_zero(mu)) extra += mu * beta(K.k.bracket(unit_vector(m, u), unit_vector(m, v)));
      for (std::size_t c = 0; c < g.dim(); ++c) out(u, v, c) -= extra[c];
    }
  return out;
}

inline Table extended_o_residual(const LieAlgebra& g, const Representation& V, const LinearMap& alpha,
                                 const LinearMap& beta, const Scalar& kappa) {
  return extended_o_residual(g, as_g_lie_algebra(V), alpha, beta, 0, kappa, 0);
}

/// B(u,v) = [a u, a v] - a(rho(a u) v - rho(a v) u).
inline Element b_alpha(const LieAlgebra& g, const Representation& V, const LinearMap& alpha, const Vector& u,
                       const Vector& v) {
  detail::require_map(alpha, V.space, g.space(), "b_alpha");
  const Element au = alpha(u), av = alpha(v);
  return g.bracket(au, av) - alpha(V.act(au, v) - V.act(av, u));
}

struct GeneralizedOResiduals {
  Table cyclic;        ///< (u, v, w, c): rho(B(v,u))w + rho(B(w,v))u + rho(B(u,w))v
  Table equivariance;  ///< (x, u, v, c): [x, B(u,v)] - B(rho(x)u, v) - B(u, rho(x)v)

  bool ok() const { return cyclic.is_zero() && equivariance.is_zero(); }
};

inline GeneralizedOResiduals generalized_o_residuals(const LieAlgebra& g, const Representation& V,
                                                     const LinearMap& alpha) {
  validate_shape(g, V);
  detail::require_map(alpha, V.space, g.space(), "generalized O-operator");
  const std::size_t m = V.dim(), n = g.dim();
  // B is bilinear, so tabulate it on basis pairs once.
  std::vector<Element> B(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) B[u * m + v] = b_alpha(g, V, alpha, unit_vector(m, u), unit_vector(m, v));
  auto b_of = [&](const Vector& x, std::size_t v) {
    Element out = zero_vector(n);
    for (std::size_t u = 0; u < m; ++u)
      if (!is_zero(x[u])) out += x[u] * B[u * m + v];
    return out;
  };
  std::vector<Matrix> actB(m * m);
  for (std::size_t i = 0; i < m * m; ++i) actB[i] = V.action(B[i]);

  GeneralizedOResiduals out{Table({m, m, m, m}), Table({n, m, m, n})};
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t c = 0; c < m; ++c)
          out.cyclic(u, v, w, c) = actB[v * m + u](c, w) + actB[w * m + v](c, u) + actB[u * m + w](c, v);
  for (std::size_t x = 0; x < n; ++x) {
    const Element ex = unit_vector(n, x);
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        // B(u, rho(x)v) = -B(rho(x)v, u) by antisymmetry.
        const Vector val =
            g.bracket(ex, B[u * m + v]) - b_of(V.mats[x].column(u), v) + b_of(V.mats[x].column(v), u);
        for (std::size_t c = 0; c < n; ++c) out.equivariance(x, u, v, c) = val[c];
      }
  }
  return out;
}

/// The bracket [u,v]_a = rho(a u) v - rho(a v) u on V as structure constants.
inline LieAlgebra alpha_bracket_algebra(const LieAlgebra& g, const Representation& V, const LinearMap& alpha) {
  validate_shape(g, V);
  detail::require_map(alpha, V.space, g.space(), "alpha bracket");
  const std::size_t m = V.dim();
  std::vector<Matrix> acts;
  for (std::size_t u = 0; u < m; ++u) acts.push_back(V.action(alpha(unit_vector(m, u))));
  std::vector<Scalar> c(m * m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) c[(u * m + v) * m + k] = acts[u](k, v) - acts[v](k, u);
  auto names = V.names.empty() ? default_names(V.space) : V.names;
  return LieAlgebra(V.space.to_string() + "[alpha]", std::move(names), std::move(c)).with_space(V.space);
}

inline Report alpha_bracket_jacobi(const LieAlgebra& g, const Representation& V, const LinearMap& alpha) {
  Report rep = check_jacobi(alpha_bracket_algebra(g, V, alpha));
  rep.context = "jacobi of the induced bracket on " + V.space.to_string();
  return rep;
}

/// f([x,y]) - pi(x) f(y) + pi(y) f(x) - lambda [f x, f y]_k on basis pairs of g.
inline Table reldiff_residual(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& f, const Scalar& lambda) {
  validate_shape(g, K.pi);
  detail::require_map(f, g.space(), K.pi.space, "relative differential operator");
  const std::size_t n = g.dim(), m = K.k.dim();
  std::vector<Vector> images;
  for (std::size_t x = 0; x < n; ++x) images.push_back(f(unit_vector(n, x)));
  Table out({n, n, m});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector v = f(g.bracket(unit_vector(n, x), unit_vector(n, y))) - K.pi.mats[x].apply(images[y]) +
                 K.pi.mats[y].apply(images[x]);
      if (!is_zero(lambda)) v -= lambda * K.k.bracket(images[x], images[y]);
      detail::write_row(out, x, y, v);
    }
  return out;
}

inline Table reldiff_residual(const LieAlgebra& g, const Representation& V, const LinearMap& f) {
  return reldiff_residual(g, as_g_lie_algebra(V), f, 0);
}

struct LakmResiduals {
  Table cyclic;        ///< (u, v, w, c): lambda (pi(a[u,v])w + pi(a[w,u])v + pi(a[v,w])u)
  Table equivariance;  ///< (x, u, v, c): lambda ([x, a[u,v]] - a[pi(x)u, v] - a[u, pi(x)v])

  bool ok() const { return cyclic.is_zero() && equivariance.is_zero(); }
};

inline LakmResiduals lakm_residuals(const LieAlgebra& g, const GLieAlgebra& K, const LinearMap& alpha,
                                    const Scalar& lambda) {
  validate_shape(g, K.pi);
  detail::require_map(alpha, K.pi.space, g.space(), "lakm");
  const std::size_t n = g.dim(), m = K.k.dim();
  LakmResiduals out{Table({m, m, m, m}), Table({n, m, m, n})};
  if (is_zero(lambda) || K.k.is_abelian()) return out;
  auto kb = [&](const Vector& a, const Vector& b) { return K.k.bracket(a, b); };
  std::vector<Matrix> act(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) act[u * m + v] = K.pi.action(alpha(kb(unit_vector(m, u), unit_vector(m, v))));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w)
        for (std::size_t c = 0; c < m; ++c)
          out.cyclic(u, v, w, c) =
              lambda * (act[u * m + v](c, w) + act[w * m + u](c, v) + act[v * m + w](c, u));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
        const Vector val = g.bracket(unit_vector(n, x), alpha(kb(eu, ev))) -
                           alpha(kb(K.pi.mats[x].column(u), ev)) - alpha(kb(eu, K.pi.mats[x].column(v)));
        for (std::size_t c = 0; c < n; ++c) out.equivariance(x, u, v, c) = lambda * val[c];
      }
  return out;
}

}  // namespace ybe
