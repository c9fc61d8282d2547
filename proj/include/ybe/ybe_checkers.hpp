#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/report.hpp"
#include "ybe/table.hpp"
#include "ybe/tensor_calculus.hpp"

namespace ybe {

/// C(r) = [r12,r13] + [r12,r23] + [r13,r23].
inline Tensor3 cybe_residual(const LieAlgebra& L, const Tensor2& r) {
  auto b = yb_brackets(L, r, r);
  return b.r12_s13 + b.r12_s23 + b.r13_s23;
}

/// C(r) - eps [(r13 + r31), (r23 + r32)].
inline Tensor3 ecybe_residual(const LieAlgebra& L, const Tensor2& r, const Scalar& eps) {
  Tensor3 c = cybe_residual(L, r);
  if (is_zero(eps)) return c;
  return c - eps * ext_rhs(L, r);
}

/// (ad x (x) 1 (x) 1 + 1 (x) ad x (x) 1 + 1 (x) 1 (x) ad x) t for basis x.
inline Tensor3 slotwise_ad(const LieAlgebra& L, std::size_t x, const Tensor3& t) {
  require_same_space(t.space(), L.space(), "slotwise_ad");
  const std::size_t n = L.dim();
  Tensor3 out(L.space());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& v = t(a, b, c);
        if (is_zero(v)) continue;
        for (const auto& term : L.bracket_terms(x, a)) out(term.index, b, c) += term.coeff * v;
        for (const auto& term : L.bracket_terms(x, b)) out(a, term.index, c) += term.coeff * v;
        for (const auto& term : L.bracket_terms(x, c)) out(a, b, term.index) += term.coeff * v;
      }
  return out;
}

/// One tensor per basis element x.
inline std::vector<Tensor3> gcybe_residual(const LieAlgebra& L, const Tensor2& r) {
  const Tensor3 c = cybe_residual(L, r);
  std::vector<Tensor3> out;
  out.reserve(L.dim());
  for (std::size_t x = 0; x < L.dim(); ++x) out.push_back(slotwise_ad(L, x, c));
  return out;
}

/// (ad x (x) 1 + 1 (x) ad x) r for each basis x.
inline std::vector<Tensor2> invariance_residual(const LieAlgebra& L, const Tensor2& r) {
  detail::require_over(L, r, "invariance_residual");
  std::vector<Tensor2> out;
  out.reserve(L.dim());
  for (std::size_t x = 0; x < L.dim(); ++x) {
    const Matrix A = L.ad(x);
    out.emplace_back(L.space(), L.space(), A * r.coeffs() + r.coeffs() * A.transpose());
  }
  return out;
}

inline bool all_zero(const std::vector<Tensor2>& family) {
  for (const auto& t : family)
    if (!t.is_zero()) return false;
  return true;
}

inline bool all_zero(const std::vector<Tensor3>& family) {
  for (const auto& t : family)
    if (!t.is_zero()) return false;
  return true;
}

inline bool is_invariant(const LieAlgebra& L, const Tensor2& r) { return all_zero(invariance_residual(L, r)); }

/// Coadjoint action ad*(y) on dual coordinates.
inline Matrix coad(const LieAlgebra& L, const Element& y) { return -L.ad(y).transpose(); }

// ---- report builders -------------------------------------------------------

inline Report to_report(const Tensor3& t, std::string context) {
  return report_from(t.coeffs(), ResidualKind::tensor3, std::move(context));
}

inline Report to_report(const std::vector<Tensor3>& family, std::string context) {
  Report rep;
  rep.kind = ResidualKind::tensor3_family;
  rep.context = std::move(context);
  for (std::size_t x = 0; x < family.size(); ++x) rep.absorb(family[x].coeffs(), {}, {x});
  return rep;
}

inline Report to_report(const std::vector<Tensor2>& family, std::string context) {
  Report rep;
  rep.kind = ResidualKind::map_residual;
  rep.context = std::move(context);
  for (std::size_t x = 0; x < family.size(); ++x) {
    const Matrix& m = family[x].coeffs();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rep.add({x, i, j}, m(i, j));
  }
  return rep;
}

/// Residual of a bilinear identity: entry (i, j, k) is coordinate k of the
/// defect evaluated on basis pair (i, j).
inline Report map_report(const Table& t, std::string context) {
  return report_from(t, ResidualKind::map_residual, std::move(context));
}

// ---- symmetric tensors -----------------------------------------------------

/// The three equivalent conditions on a symmetric r, evaluated separately.
struct SymmetryCheck {
  Report invariant;      ///< (ad x (x) 1 + 1 (x) ad x) r = 0
  Report antisymmetric;  ///< ad*(r^(a*)) b* + ad*(r^(b*)) a* = 0
  Report equivariant;    ///< r^(ad*(x) a*) = [x, r^(a*)]

  bool consistent() const { return invariant.ok() == antisymmetric.ok() && invariant.ok() == equivariant.ok(); }
  bool ok() const { return consistent() && invariant.ok(); }

  /// All three tables in one report; a disagreement adds an "inconsistent"
  /// marker entry.
  Report merged() const {
    Report rep;
    rep.kind = ResidualKind::map_residual;
    rep.context = "symmetric tensor conditions";
    for (const auto* part : {&invariant, &antisymmetric, &equivariant})
      rep.nonzero.insert(rep.nonzero.end(), part->nonzero.begin(), part->nonzero.end());
    if (!consistent()) rep.add({}, 1, "inconsistent");
    return rep;
  }
};

inline SymmetryCheck lemma_symmetry_check(const LieAlgebra& L, const Tensor2& r) {
  detail::require_over(L, r, "lemma_symmetry_check");
  if (!is_symmetric(r)) throw PreconditionError("lemma_symmetry_check expects a symmetric tensor");
  const std::size_t n = L.dim();
  const LinearMap rh = hat(r);
  SymmetryCheck out;

  out.invariant = to_report(invariance_residual(L, r), "invariance");
  for (auto& e : out.invariant.nonzero) e.label = "invariant";

  out.antisymmetric.kind = ResidualKind::map_residual;
  out.antisymmetric.context = "antisymmetry of r^";
  std::vector<Matrix> coads;
  for (std::size_t a = 0; a < n; ++a) coads.push_back(coad(L, rh(unit_vector(n, a))));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Vector v = coads[a].column(b) + coads[b].column(a);
      for (std::size_t k = 0; k < n; ++k) out.antisymmetric.add({a, b, k}, v[k], "antisymmetric");
    }

  out.equivariant.kind = ResidualKind::map_residual;
  out.equivariant.context = "g-invariance of r^";
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix cx = coad(L, unit_vector(n, x));
    for (std::size_t a = 0; a < n; ++a) {
      const Vector v = rh(cx.column(a)) - L.bracket(unit_vector(n, x), rh(unit_vector(n, a)));
      for (std::size_t k = 0; k < n; ++k) out.equivariant.add({x, a, k}, v[k], "equivariant");
    }
  }
  return out;
}

// ---- operator forms on g ---------------------------------------------------

/// [Rx,Ry] - R([Rx,y] + [x,Ry]) - kappa [x,y] on basis pairs. kappa = -1
/// is the modified Yang-Baxter equation.
inline Table modified_ybe_residual(const LieAlgebra& L, const LinearMap& R, const Scalar& kappa = -1) {
  require_same_space(R.source(), L.space(), "modified_ybe_residual source");
  require_same_space(R.target(), L.space(), "modified_ybe_residual target");
  const std::size_t n = L.dim();
  Table out({n, n, n});
  for (std::size_t i = 0; i < n; ++i) {
    const Element ei = unit_vector(n, i), Ri = R(ei);
    for (std::size_t j = 0; j < n; ++j) {
      const Element ej = unit_vector(n, j), Rj = R(ej);
      const Vector v = L.bracket(Ri, Rj) - R(L.bracket(Ri, ej) + L.bracket(ei, Rj)) - kappa * L.bracket(ei, ej);
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
    }
  }
  return out;
}

/// [r^a*, r^b*] - r^(ad*(r^a*) b* - ad*(r^b*) a* + [a*,b*]_-) on dual basis
/// pairs, with [a*,b*]_- = -ad*((r + r^t)^ a*) b*. Requires r_+ invariant.
inline Table kupershmidt_residual(const LieAlgebra& L, const Tensor2& r) {
  detail::require_over(L, r, "kupershmidt_residual");
  if (!is_invariant(L, pm_parts(r).plus)) {
    throw PreconditionError("kupershmidt_residual: symmetric part of r is not invariant");
  }
  const std::size_t n = L.dim();
  const LinearMap rh = hat(r);
  const LinearMap sh = hat(r + twist(r));
  std::vector<Element> images;
  std::vector<Matrix> coads, coads_sym;
  for (std::size_t a = 0; a < n; ++a) {
    images.push_back(rh(unit_vector(n, a)));
    coads.push_back(coad(L, images.back()));
    coads_sym.push_back(coad(L, sh(unit_vector(n, a))));
  }
  Table out({n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector inner = coads[a].column(b) - coads[b].column(a) - coads_sym[a].column(b);
      const Vector v = L.bracket(images[a], images[b]) - rh(inner);
      for (std::size_t k = 0; k < n; ++k) out(a, b, k) = v[k];
    }
  return out;
}

}  // namespace ybe
