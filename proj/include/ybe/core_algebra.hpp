#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ybe/error.hpp"
#include "ybe/matrix.hpp"
#include "ybe/report.hpp"
#include "ybe/scalar.hpp"
#include "ybe/space.hpp"

namespace ybe {

/// Coordinates of a vector relative to the declared basis of its space.
using Element = Vector;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebra {
 public:
  struct Term {
    std::size_t index;
    Scalar coeff;
  };

  LieAlgebra() = default;

  /// `constants` is dense with layout c[(i*n + j)*n + k]. Antisymmetry is
  /// enforced; the Jacobi identity is not (see check_jacobi).
  LieAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Scalar> constants)
      : name_(std::move(name)), names_(std::move(basis_names)), c_(std::move(constants)) {
    const std::size_t n = names_.size();
    if (n == 0) throw DimensionError("Lie algebra must have positive dimension");
    if (c_.size() != n * n * n) throw DimensionError("structure constant table has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (c_[(i * n + j) * n + k] != -c_[(j * n + i) * n + k]) {
            throw Error("structure constants of '" + name_ + "' are not antisymmetric at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
          }
        }
      }
    }
    space_ = Space::primal(name_, n);
    terms_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& v = c_[(i * n + j) * n + k];
          if (!ybe::is_zero(v)) terms_[i * n + j].push_back({k, v});
        }
  }

  static LieAlgebra abelian(std::size_t n, std::string name = {}, std::vector<std::string> names = {}) {
    if (name.empty()) name = "abelian-" + std::to_string(n);
    if (names.empty()) {
      for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    return LieAlgebra(std::move(name), std::move(names), std::vector<Scalar>(n * n * n));
  }

  std::size_t dim() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Space& space() const { return space_; }

  /// Same algebra re-tagged, e.g. as a direct sum of named summands.
  LieAlgebra with_space(Space space) const {
    if (space.dim() != dim()) throw DimensionError("space tag dimension differs from algebra dimension");
    LieAlgebra out = *this;
    out.space_ = std::move(space);
    return out;
  }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    return c_[(i * n + j) * n + k];
  }

  /// Nonzero terms of [e_i, e_j].
  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return terms_[i * dim() + j]; }

  bool is_abelian() const {
    for (const auto& t : terms_) {
      if (!t.empty()) return false;
    }
    return true;
  }

  Element basis(std::size_t i) const { return unit_vector(dim(), i); }

  Element bracket(const Element& x, const Element& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) {
      throw DimensionError("bracket in '" + name_ + "' expects elements of length " + std::to_string(n));
    }
    Element out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ybe::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (ybe::is_zero(y[j])) continue;
        const Scalar xy = x[i] * y[j];
        for (const auto& t : bracket_terms(i, j)) out[t.index] += xy * t.coeff;
      }
    }
    return out;
  }

  /// ad(e_i) with ad(e_i)(k, j) = c(i, j, k).
  Matrix ad(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : bracket_terms(i, j)) m(t.index, j) = t.coeff;
    return m;
  }

  Matrix ad(const Element& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw DimensionError("ad: element length mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ybe::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : bracket_terms(i, j)) m(t.index, j) += x[i] * t.coeff;
    }
    return m;
  }

  /// Names, space tag and structure constants all agree.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name_ == b.name_ && a.names_ == b.names_ && a.space_ == b.space_ && a.c_ == b.c_;
  }

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;
  Space space_;
  std::vector<std::vector<Term>> terms_;
};

/// One listed bracket [e_i, e_j] = sum value * e_k, 0-based.
struct BracketSpec {
  std::size_t i;
  std::size_t j;
  std::vector<std::pair<std::size_t, Scalar>> terms;
};

/// Builds a Lie algebra from a sparse bracket list. Unlisted brackets are
/// zero; the antisymmetric completion is implied, and a listed entry that
/// conflicts with the completion of another is rejected.
inline LieAlgebra make_lie_algebra(std::string name, std::vector<std::string> basis_names,
                                   const std::vector<BracketSpec>& brackets) {
  const std::size_t n = basis_names.size();
  std::vector<Scalar> c(n * n * n);
  std::vector<bool> listed(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw DimensionError("bracket index out of range in '" + name + "'");
    Vector value(n);
    for (const auto& [k, v] : b.terms) {
      if (k >= n) throw DimensionError("bracket target index out of range in '" + name + "'");
      value[k] += v;
    }
    auto pos = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    if (b.i == b.j) {
      if (!is_zero(value)) throw Error("bracket [e_i, e_i] must vanish in '" + name + "'");
      continue;
    }
    const bool seen_ij = listed[b.i * n + b.j];
    const bool seen_ji = listed[b.j * n + b.i];
    for (std::size_t k = 0; k < n; ++k) {
      if ((seen_ij || seen_ji) && c[pos(b.i, b.j, k)] != value[k]) {
        throw Error("conflicting bracket entries for (" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) +
                    ") in '" + name + "'");
      }
      c[pos(b.i, b.j, k)] = value[k];
      c[pos(b.j, b.i, k)] = -value[k];
    }
    listed[b.i * n + b.j] = true;
  }
  return LieAlgebra(std::move(name), std::move(basis_names), std::move(c));
}

/// Every basis triple i < j < k whose Jacobi sum is nonzero, with the
/// offending element components as (i, j, k, m) entries.
inline Report check_jacobi(const LieAlgebra& L) {
  Report rep;
  rep.kind = ResidualKind::scalar_table;
  rep.context = "jacobi(" + L.name() + ")";
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Element ei = L.basis(i), ej = L.basis(j), ek = L.basis(k);
        const Element s = L.bracket(L.bracket(ei, ej), ek) + L.bracket(L.bracket(ej, ek), ei) +
                          L.bracket(L.bracket(ek, ei), ej);
        for (std::size_t m = 0; m < n; ++m) rep.add({i, j, k, m}, s[m]);
      }
  return rep;
}

/// rho: g -> gl(V), one square matrix per basis element of g. `names`
/// labels the basis of V and may be empty.
struct Representation {
  Space space;
  std::vector<Matrix> mats;
  std::vector<std::string> names;

  std::size_t dim() const { return space.dim(); }

  /// rho(x) for an arbitrary element x of g.
  Matrix action(const Element& x) const {
    if (x.size() != mats.size()) throw DimensionError("representation: element length mismatch");
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!is_zero(x[i])) m = m + x[i] * mats[i];
    }
    return m;
  }

  Vector act(const Element& x, const Vector& v) const { return action(x).apply(v); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.space == b.space && a.mats == b.mats;
  }
};

inline void validate_shape(const LieAlgebra& L, const Representation& rho) {
  if (rho.mats.size() != L.dim()) {
    throw DimensionError("representation has " + std::to_string(rho.mats.size()) + " matrices, algebra '" +
                         L.name() + "' has dimension " + std::to_string(L.dim()));
  }
  for (const auto& m : rho.mats) {
    if (m.rows() != rho.dim() || m.cols() != rho.dim()) {
      throw DimensionError("representation matrix is " + m.shape_string() + ", expected " +
                           std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
    }
  }
}

inline std::vector<std::string> default_names(const Space& space) {
  std::vector<std::string> out;
  for (const auto& b : space.blocks()) {
    for (std::size_t i = 0; i < b.dim; ++i) out.push_back("v" + std::to_string(out.size() + 1) + (b.dual ? "*" : ""));
  }
  return out;
}

inline std::vector<std::string> dual_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& s : names) {
    out.push_back(!s.empty() && s.back() == '*' ? s.substr(0, s.size() - 1) : s + "*");
  }
  return out;
}

/// Empty report iff rho([e_i,e_j]) = [rho(e_i), rho(e_j)] for all i < j;
/// entries are (i, j, row, col).
inline Report check_representation(const LieAlgebra& L, const Representation& rho) {
  validate_shape(L, rho);
  Report rep;
  rep.kind = ResidualKind::scalar_table;
  rep.context = "representation(" + L.name() + " on " + rho.space.to_string() + ")";
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix diff = rho.action(L.bracket(L.basis(i), L.basis(j))) - commutator(rho.mats[i], rho.mats[j]);
      for (std::size_t a = 0; a < diff.rows(); ++a)
        for (std::size_t b = 0; b < diff.cols(); ++b) rep.add({i, j, a, b}, diff(a, b));
    }
  return rep;
}

inline Representation adjoint_representation(const LieAlgebra& L) {
  Representation rho;
  rho.space = L.space();
  rho.names = L.basis_names();
  for (std::size_t i = 0; i < L.dim(); ++i) rho.mats.push_back(L.ad(i));
  return rho;
}

/// rho*(e_i) = -rho(e_i)^T on the dual basis.
inline Representation dual_representation(const Representation& rho) {
  Representation out;
  out.space = rho.space.dual();
  out.names = rho.names.empty() ? default_names(out.space) : dual_names(rho.names);
  for (const auto& m : rho.mats) out.mats.push_back(-m.transpose());
  return out;
}

inline Representation coadjoint_representation(const LieAlgebra& L) {
  return dual_representation(adjoint_representation(L));
}

inline Representation trivial_representation(const LieAlgebra& L, std::size_t dim, std::string name = "triv") {
  Representation rho;
  rho.space = Space::primal(std::move(name), dim);
  rho.names = default_names(rho.space);
  for (std::size_t i = 0; i < L.dim(); ++i) rho.mats.emplace_back(dim, dim);
  return rho;
}

/// A Lie algebra k together with an action of g by derivations.
struct GLieAlgebra {
  LieAlgebra k;
  Representation pi;
};

/// A g-module seen as a g-Lie algebra with zero bracket.
inline GLieAlgebra as_g_lie_algebra(const Representation& module) {
  auto names = module.names.empty() ? default_names(module.space) : module.names;
  // The space tag of k is carried by pi (it may be a dual); k itself only
  // supplies the zero bracket.
  return GLieAlgebra{LieAlgebra::abelian(module.dim(), module.space.to_string(), std::move(names)).with_space(module.space),
                     module};
}

/// (g, ad): g acting on itself.
inline GLieAlgebra self_action(const LieAlgebra& g) { return GLieAlgebra{g, adjoint_representation(g)}; }

/// Empty iff pi(x)[u,v] = [pi(x)u, v] + [u, pi(x)v] for all basis x, u, v
/// (entries labelled "derivation", index (x, u, v, m)) and pi is a
/// representation (entries labelled "homomorphism").
inline Report check_derivation_action(const LieAlgebra& g, const GLieAlgebra& K) {
  validate_shape(g, K.pi);
  if (K.pi.dim() != K.k.dim()) throw DimensionError("action dimension differs from the acted-on algebra");
  Report rep = check_representation(g, K.pi);
  for (auto& e : rep.nonzero) e.label = "homomorphism";
  rep.context = "derivation_action(" + g.name() + " on " + K.pi.space.to_string() + ")";
  const std::size_t n = g.dim(), m = K.k.dim();
  if (K.k.is_abelian()) return rep;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& D = K.pi.mats[x];
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        const Element eu = K.k.basis(u), ev = K.k.basis(v);
        const Element lhs = D.apply(K.k.bracket(eu, ev));
        const Element rhs = K.k.bracket(D.apply(eu), ev) + K.k.bracket(eu, D.apply(ev));
        const Element diff = lhs - rhs;
        for (std::size_t c = 0; c < m; ++c) rep.add({x, u, v, c}, diff[c], "derivation");
      }
  }
  return rep;
}

/// g (x) k with basis ordered g-block first, k-block second.
inline LieAlgebra semidirect_product(const LieAlgebra& g, const GLieAlgebra& K, std::string name = {}) {
  if (const Report rep = check_derivation_action(g, K); !rep.ok()) {
    throw PreconditionError("semidirect product: action is not by derivations (" +
                            std::to_string(rep.nonzero.size()) + " failing entries)");
  }
  const std::size_t n = g.dim(), m = K.k.dim(), N = n + m;
  std::vector<Scalar> c(N * N * N);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * N + j) * N + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : g.bracket_terms(i, j)) at(i, j, t.index) = t.coeff;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t w = 0; w < m; ++w) {
        const Scalar& v = K.pi.mats[i](w, u);
        if (is_zero(v)) continue;
        at(i, n + u, n + w) = v;
        at(n + u, i, n + w) = -v;
      }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (const auto& t : K.k.bracket_terms(u, v)) at(n + u, n + v, n + t.index) = t.coeff;

  std::vector<std::string> names = g.basis_names();
  const auto knames = K.pi.names.empty() ? K.k.basis_names() : K.pi.names;
  names.insert(names.end(), knames.begin(), knames.end());
  if (name.empty()) name = g.name() + "|x" + K.pi.space.to_string();
  return LieAlgebra(std::move(name), std::move(names), std::move(c)).with_space(direct_sum(g.space(), K.pi.space));
}

/// Gram matrix B(e_i, e_j) = gram(i, j).
struct BilinearForm {
  Matrix gram;
};

struct FormCheck {
  bool symmetric = false;
  bool nondegenerate = false;
  bool invariant = false;
  Report invariance;  ///< (i, j, k) entries of B([e_i,e_j],e_k) - B(e_i,[e_j,e_k])

  bool ok() const { return symmetric && nondegenerate && invariant; }
};

inline Scalar evaluate(const BilinearForm& B, const Element& x, const Element& y) { return dot(x, B.gram.apply(y)); }

inline FormCheck check_invariant_form(const LieAlgebra& L, const BilinearForm& B) {
  const std::size_t n = L.dim();
  if (B.gram.rows() != n || B.gram.cols() != n) throw DimensionError("gram matrix does not match algebra dimension");
  FormCheck out;
  out.symmetric = B.gram == B.gram.transpose();
  out.nondegenerate = !is_zero(determinant(B.gram));
  out.invariance.kind = ResidualKind::scalar_table;
  out.invariance.context = "invariant_form(" + L.name() + ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element ei = L.basis(i), ej = L.basis(j), ek = L.basis(k);
        out.invariance.add({i, j, k}, evaluate(B, L.bracket(ei, ej), ek) - evaluate(B, ei, L.bracket(ej, ek)));
      }
  out.invariant = out.invariance.ok();
  return out;
}

/// kappa(x, y) = trace(ad x ad y).
inline BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(i));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = trace(ads[i] * ads[j]);
  return {gram};
}

/// Linear map between two tagged spaces; matrix is target.dim x source.dim.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Space source, Space target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != target_.dim() || m_.cols() != source_.dim()) {
      throw DimensionError("linear map matrix " + m_.shape_string() + " does not match " + source_.to_string() +
                           " -> " + target_.to_string());
    }
  }

  static LinearMap zero(Space source, Space target) {
    Matrix m(target.dim(), source.dim());
    return LinearMap(std::move(source), std::move(target), std::move(m));
  }

  static LinearMap identity(Space space) {
    Matrix m = Matrix::identity(space.dim());
    return LinearMap(space, space, std::move(m));
  }

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const Matrix& matrix() const { return m_; }

  Vector operator()(const Vector& v) const { return m_.apply(v); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    a.same_spaces(b);
    return LinearMap(a.source_, a.target_, a.m_ + b.m_);
  }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    a.same_spaces(b);
    return LinearMap(a.source_, a.target_, a.m_ - b.m_);
  }
  friend LinearMap operator*(const Scalar& s, const LinearMap& a) { return LinearMap(a.source_, a.target_, s * a.m_); }

 private:
  void same_spaces(const LinearMap& b) const {
    require_same_space(source_, b.source_, "linear map source");
    require_same_space(target_, b.target_, "linear map target");
  }

  Space source_;
  Space target_;
  Matrix m_;
};

inline LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  require_same_space(inner.target(), outer.source(), "compose");
  return LinearMap(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

}  // namespace ybe
