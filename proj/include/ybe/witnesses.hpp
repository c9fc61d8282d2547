#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybe/catalog.hpp"
#include "ybe/core_algebra.hpp"
#include "ybe/random.hpp"
#include "ybe/tensor_calculus.hpp"

// Generators of exact solutions (and random non-solutions) for the
// two-sided campaigns. Structured families are keyed on catalog names;
// anything else falls back to generic constructions.

namespace ybe::witness {

enum class ModuleKind { adjoint, coadjoint, trivial };

struct Module {
  Representation rep;
  ModuleKind kind;
};

inline Module random_module(const LieAlgebra& g, Rng& rng) {
  switch (rng.below(3)) {
    case 0: return {adjoint_representation(g), ModuleKind::adjoint};
    case 1: return {coadjoint_representation(g), ModuleKind::coadjoint};
    default: return {trivial_representation(g, 1 + rng.below(2)), ModuleKind::trivial};
  }
}

inline const LieAlgebra& random_algebra(Rng& rng) { return rng.pick(catalog()).algebra; }

inline const LieAlgebra& random_nonabelian(Rng& rng) {
  static const std::vector<std::string> names{"aff1", "heisenberg3", "sl2", "so3"};
  return catalog_algebra(rng.pick(names));
}

inline bool ad_nilpotent(const LieAlgebra& L, std::size_t i) {
  Matrix p = Matrix::identity(L.dim());
  const Matrix a = L.ad(i);
  for (std::size_t k = 0; k < L.dim(); ++k) p = p * a;
  return p.is_zero();
}

inline Scalar nonzero_pm(Rng& rng) {
  static const std::vector<Scalar> pool{Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
  return rng.pick(pool);
}

/// A random automorphism: exponentials of nilpotent inner derivations,
/// composed with a diagonal automorphism where one is known.
inline Matrix random_automorphism(const LieAlgebra& L, Rng& rng) {
  const std::size_t n = L.dim();
  if (L.is_abelian()) return rng.invertible_matrix(n);
  Matrix phi = Matrix::identity(n);
  const std::string& name = L.name();
  if (name == "aff1") {
    phi(0, 0) = nonzero_pm(rng);
  } else if (name == "heisenberg3") {
    const Scalar a = nonzero_pm(rng), b = nonzero_pm(rng);
    phi(0, 0) = a;
    phi(1, 1) = b;
    phi(2, 2) = a * b;
  } else if (name == "sl2") {
    const Scalar a = nonzero_pm(rng);
    phi(0, 0) = a;
    phi(2, 2) = 1 / a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rng.coin() || !ad_nilpotent(L, i)) continue;
    phi = exp_nilpotent(rng.small_rational() * L.ad(i)) * phi;
  }
  return phi;
}

/// Columns of `basis` split into A (first k) and B (rest); both span
/// subalgebras and together span g.
struct Split {
  Matrix basis;
  std::size_t k = 0;
};

inline Split random_split(const LieAlgebra& L, Rng& rng) {
  const std::size_t n = L.dim();
  if (L.is_abelian()) return {rng.invertible_matrix(n), rng.below(n + 1)};
  const std::string& name = L.name();
  Split s{Matrix::identity(n), rng.coin() ? std::size_t{0} : n};
  auto cols = [&](std::vector<Vector> c, std::size_t k) {
    if (is_zero(determinant(Matrix::from_columns(c, n)))) return;
    s = Split{Matrix::from_columns(c, n), k};
  };
  if (name == "aff1") {
    const Matrix m = rng.invertible_matrix(2);
    s = Split{m, rng.below(3)};
  } else if (name == "heisenberg3") {
    const Vector e3 = unit_vector(3, 2), v = rng.vector(3), w = rng.vector(3);
    switch (rng.below(3)) {
      case 0: cols({e3, v, w}, 2); break;
      case 1: cols({w, e3, v}, 1); break;
      default: break;
    }
  } else if (name == "sl2") {
    const Vector e = unit_vector(3, 0), h = unit_vector(3, 1), f = unit_vector(3, 2);
    const Scalar a = rng.small_rational(), b = rng.small_rational();
    switch (rng.below(5)) {
      case 0: cols({e, h, f + a * e + b * h}, 2); break;
      case 1: cols({f, h, e + a * f + b * h}, 2); break;
      case 2: cols({e + a * h, h, f}, 1); break;
      case 3: cols({f + a * h, h, e}, 1); break;
      default: break;
    }
  }
  s.basis = random_automorphism(L, rng) * s.basis;
  return s;
}

/// Projection onto span(A) along span(B).
inline Matrix projection(const Split& s) {
  Matrix d(s.basis.rows(), s.basis.cols());
  for (std::size_t i = 0; i < s.k; ++i) d(i, i) = 1;
  return s.basis * d * inverse(s.basis);
}

inline LinearMap endo(const LieAlgebra& L, Matrix m) { return LinearMap(L.space(), L.space(), std::move(m)); }

/// alpha = w phi^T with phi killing the image of rho(w); always an
/// O-operator of weight 0.
inline LinearMap rank_one_o_operator(const LieAlgebra& g, const Representation& V, Rng& rng) {
  const Vector w = rng.vector(g.dim());
  const auto ns = nullspace(V.action(w).transpose());
  Vector phi(V.dim());
  for (const auto& b : ns) phi += rng.small_rational() * b;
  Matrix m(g.dim(), V.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < V.dim(); ++j) m(i, j) = w[i] * phi[j];
  return LinearMap(V.space, g.space(), std::move(m));
}

/// Rota-Baxter operator of weight 0 on g.
inline LinearMap weight_zero_rb(const LieAlgebra& g, Rng& rng) {
  const std::size_t n = g.dim();
  if (g.is_abelian()) return endo(g, rng.matrix(n, n));
  const std::string& name = g.name();
  if (name == "aff1" && rng.coin()) {
    const Matrix phi = random_automorphism(g, rng);
    return endo(g, phi * Matrix{{0, rng.small_rational()}, {0, 0}} * inverse(phi));
  }
  if (name == "heisenberg3" && rng.coin()) {
    if (rng.coin()) {
      Matrix m(3, 3);
      for (std::size_t j = 0; j < 3; ++j) m(2, j) = rng.small_rational();
      return endo(g, m);
    }
    // Inverse of the invertible derivation diag(a, b, a + b).
    Scalar a, b;
    do {
      a = rng.nonzero_rational();
      b = rng.nonzero_rational();
    } while (is_zero(a + b));
    Matrix d(3, 3);
    d(0, 0) = 1 / a;
    d(1, 1) = 1 / b;
    d(2, 2) = 1 / (a + b);
    const Matrix phi = random_automorphism(g, rng);
    return endo(g, phi * d * inverse(phi));
  }
  return rank_one_o_operator(g, adjoint_representation(g), rng);
}

/// Skew-symmetric solution of the classical Yang-Baxter equation.
inline Tensor2 skew_cybe_solution(const LieAlgebra& g, Rng& rng) {
  const std::size_t n = g.dim();
  if (g.is_abelian()) {
    const Matrix a = rng.matrix(n, n);
    return Tensor2(g.space(), g.space(), a - a.transpose());
  }
  const std::string& name = g.name();
  Matrix r(n, n);
  const Scalar c = rng.small_rational();
  if (name == "aff1") {
    r(0, 1) = c;
    r(1, 0) = -c;
  } else if (name == "heisenberg3") {
    const Vector v = rng.vector(3);
    for (std::size_t i = 0; i < 3; ++i) {
      r(i, 2) += c * v[i];
      r(2, i) -= c * v[i];
    }
  } else if (name == "sl2") {
    const std::size_t other = rng.coin() ? 0 : 2;
    r(1, other) = c;
    r(other, 1) = -c;
  } else {
    return Tensor2::zero(g.space());
  }
  const Matrix phi = random_automorphism(g, rng);
  return Tensor2(g.space(), g.space(), phi * r * phi.transpose());
}

/// O-operator of weight 0 from V to g.
inline LinearMap o_operator(const LieAlgebra& g, const Module& V, Rng& rng) {
  switch (rng.below(3)) {
    case 0: return LinearMap::zero(V.rep.space, g.space());
    case 1:
      if (V.kind == ModuleKind::adjoint) {
        const LinearMap p = weight_zero_rb(g, rng);
        return LinearMap(V.rep.space, g.space(), p.matrix());
      }
      if (V.kind == ModuleKind::coadjoint) return hat(skew_cybe_solution(g, rng));
      [[fallthrough]];
    default: return rank_one_o_operator(g, V.rep, rng);
  }
}

/// R on aff1 with [Rx,Ry] - R([Rx,y] + [x,Ry]) = kappa [x,y]: trace zero
/// and det R = -kappa.
inline LinearMap aff1_modified(const LieAlgebra& g, const Scalar& kappa, Rng& rng) {
  const Scalar a = rng.small_rational();
  Scalar b = rng.nonzero_rational(), c = (-a * a - kappa) / b;
  if (is_zero(-a * a - kappa) && rng.coin()) std::swap(b, c);
  const Matrix phi = random_automorphism(g, rng);
  return endo(g, phi * Matrix{{a, b}, {c, -a}} * inverse(phi));
}

/// Solution of [Rx,Ry] - R([Rx,y] + [x,Ry]) = -[x,y].
inline LinearMap mybe_solution(const LieAlgebra& g, Rng& rng) {
  if (g.name() == "aff1" && rng.coin()) return aff1_modified(g, -1, rng);
  const Matrix pa = projection(random_split(g, rng));
  return endo(g, Matrix::identity(g.dim()) - Scalar(2) * pa);
}

/// Same identity with right side kappa [x,y], for kappa in {-1, 0, 1};
/// empty when no family is known on g.
inline std::optional<LinearMap> modified_solution(const LieAlgebra& g, const Scalar& kappa, Rng& rng) {
  if (g.is_abelian()) return endo(g, rng.matrix(g.dim(), g.dim()));
  if (is_zero(kappa)) return weight_zero_rb(g, rng);
  if (kappa == -1) return mybe_solution(g, rng);
  if (g.name() == "aff1") return aff1_modified(g, kappa, rng);
  return std::nullopt;
}

/// Rota-Baxter operator of weight lambda.
inline LinearMap rb_operator(const LieAlgebra& g, const Scalar& lambda, Rng& rng) {
  if (is_zero(lambda)) return weight_zero_rb(g, rng);
  const std::size_t n = g.dim();
  switch (rng.below(4)) {
    case 0: return LinearMap::zero(g.space(), g.space());
    case 1: return endo(g, -lambda * Matrix::identity(n));
    default: return endo(g, -lambda * projection(random_split(g, rng)));
  }
}

/// Lie algebra endomorphism of g.
inline Matrix lie_endomorphism(const LieAlgebra& g, Rng& rng) {
  const std::size_t n = g.dim();
  if (g.is_abelian()) return rng.matrix(n, n);
  switch (rng.below(3)) {
    case 0: return Matrix(n, n);
    case 1: return Matrix::identity(n);
    default: return random_automorphism(g, rng);
  }
}

/// f: g -> V with f([x,y]) = rho(x) f(y) - rho(y) f(x).
inline LinearMap module_cocycle(const LieAlgebra& g, const Representation& V, Rng& rng) {
  const Vector v = rng.vector(V.dim());
  Matrix m(V.dim(), g.dim());
  for (std::size_t x = 0; x < g.dim(); ++x) {
    const Vector col = V.mats[x].apply(v);
    for (std::size_t i = 0; i < V.dim(); ++i) m(i, x) = col[i];
  }
  return LinearMap(g.space(), V.space, std::move(m));
}

/// Random matrix of the given shape until `bad` reports a nonzero residual;
/// empty if none turns up.
template <class Pred>
std::optional<Matrix> random_nonsolution(Rng& rng, std::size_t rows, std::size_t cols, Pred bad,
                                         int attempts = 64) {
  for (int i = 0; i < attempts; ++i) {
    Matrix m = rng.matrix(rows, cols);
    if (bad(m)) return m;
  }
  return std::nullopt;
}

}  // namespace ybe::witness
