#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/matrix.hpp"
#include "ybe/space.hpp"
#include "ybe/table.hpp"

namespace ybe {

/// sum coeffs(i, j) v_i (x) w_j in V (x) W.
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(Space left, Space right, Matrix coeffs)
      : left_(std::move(left)), right_(std::move(right)), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != left_.dim() || coeffs_.cols() != right_.dim()) {
      throw DimensionError("tensor coefficients " + coeffs_.shape_string() + " do not match " + left_.to_string() +
                           " (x) " + right_.to_string());
    }
  }

  static Tensor2 zero(const Space& left, const Space& right) {
    return Tensor2(left, right, Matrix(left.dim(), right.dim()));
  }
  static Tensor2 zero(const Space& space) { return zero(space, space); }

  /// e_i (x) e_j.
  static Tensor2 simple(const Space& space, std::size_t i, std::size_t j) {
    Tensor2 t = zero(space);
    t.coeffs_.at(i, j) = 1;
    return t;
  }

  /// e_i (x) e_j - e_j (x) e_i.
  static Tensor2 wedge(const Space& space, std::size_t i, std::size_t j) {
    Tensor2 t = zero(space);
    t.coeffs_.at(i, j) += 1;
    t.coeffs_.at(j, i) -= 1;
    return t;
  }

  const Space& left() const { return left_; }
  const Space& right() const { return right_; }
  const Matrix& coeffs() const { return coeffs_; }
  bool is_square() const { return left_ == right_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(const Tensor2&, const Tensor2&) = default;

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
    a.same_spaces(b);
    return Tensor2(a.left_, a.right_, a.coeffs_ + b.coeffs_);
  }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
    a.same_spaces(b);
    return Tensor2(a.left_, a.right_, a.coeffs_ - b.coeffs_);
  }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return Tensor2(a.left_, a.right_, s * a.coeffs_); }

 private:
  void same_spaces(const Tensor2& b) const {
    require_same_space(left_, b.left_, "tensor left factor");
    require_same_space(right_, b.right_, "tensor right factor");
  }

  Space left_;
  Space right_;
  Matrix coeffs_;
};

/// Element of g (x) g (x) g with dense coefficients coeffs(a, b, c).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Space space) : space_(std::move(space)), coeffs_({space_.dim(), space_.dim(), space_.dim()}) {}
  Tensor3(Space space, Table coeffs) : space_(std::move(space)), coeffs_(std::move(coeffs)) {
    const std::size_t n = space_.dim();
    if (coeffs_.shape() != std::vector<std::size_t>{n, n, n}) throw DimensionError("order-3 tensor shape mismatch");
  }

  const Space& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Table& coeffs() const { return coeffs_; }
  Table& coeffs() { return coeffs_; }
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return coeffs_(a, b, c); }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return coeffs_(a, b, c); }
  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    require_same_space(a.space_, b.space_, "tensor3 sum");
    return Tensor3(a.space_, a.coeffs_ + b.coeffs_);
  }
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    require_same_space(a.space_, b.space_, "tensor3 difference");
    return Tensor3(a.space_, a.coeffs_ - b.coeffs_);
  }
  friend Tensor3 operator*(const Scalar& s, const Tensor3& a) { return Tensor3(a.space_, s * a.coeffs_); }

 private:
  Space space_;
  Table coeffs_;
};

/// sigma(x (x) y) = y (x) x on a square tensor.
inline Tensor2 twist(const Tensor2& r) {
  if (!r.is_square()) {
    throw DimensionError("twist expects a tensor over V (x) V, got " + r.left().to_string() + " (x) " +
                         r.right().to_string());
  }
  return Tensor2(r.left(), r.right(), r.coeffs().transpose());
}

struct PmParts {
  Tensor2 plus;   ///< (r + sigma r) / 2
  Tensor2 minus;  ///< (r - sigma r) / 2
};

inline PmParts pm_parts(const Tensor2& r) {
  const Tensor2 s = twist(r);
  const Scalar half(1, 2);
  return {half * (r + s), half * (r - s)};
}

inline bool is_symmetric(const Tensor2& r) { return r.is_square() && r.coeffs() == r.coeffs().transpose(); }
inline bool is_skew(const Tensor2& r) { return r.is_square() && r.coeffs() == -r.coeffs().transpose(); }

/// r in V (x) W as the map V* -> W, a* |-> sum a*(v_i) w_i.
inline LinearMap hat(const Tensor2& r) { return LinearMap(r.left().dual(), r.right(), r.coeffs().transpose()); }

/// alpha: V -> W as the tensor sum_i e_i* (x) alpha(e_i) in V* (x) W.
inline Tensor2 check(const LinearMap& alpha) {
  return Tensor2(alpha.source().dual(), alpha.target(), alpha.matrix().transpose());
}

/// alpha: V* -> W  gives  alpha*: W* -> V.
inline LinearMap dual_map(const LinearMap& alpha) {
  return LinearMap(alpha.target().dual(), alpha.source().dual(), alpha.matrix().transpose());
}

struct MapPmParts {
  LinearMap plus;
  LinearMap minus;
};

/// (alpha +- alpha*) / 2 for alpha: V* -> V.
inline MapPmParts map_pm_parts(const LinearMap& alpha) {
  if (!(alpha.source() == alpha.target().dual())) {
    throw DimensionError("map_pm_parts expects V* -> V, got " + alpha.source().to_string() + " -> " +
                         alpha.target().to_string());
  }
  const LinearMap d = dual_map(alpha);
  const Scalar half(1, 2);
  return {half * (alpha + d), half * (alpha - d)};
}

/// v (x) w |-> (v, 0) (x) (0, w) in (V + W)^(x)2.
inline Tensor2 tilde_tensor(const Tensor2& r) {
  const Space big = direct_sum(r.left(), r.right());
  const std::size_t dv = r.left().dim();
  Matrix m(big.dim(), big.dim());
  for (std::size_t i = 0; i < r.coeffs().rows(); ++i)
    for (std::size_t j = 0; j < r.coeffs().cols(); ++j) m(i, dv + j) = r.coeffs()(i, j);
  return Tensor2(big, big, std::move(m));
}

/// alpha: V -> W  as  iota_2 . alpha . p_1 : V + W* -> V* + W.
inline LinearMap tilde_map(const LinearMap& alpha) {
  const Space& v = alpha.source();
  const Space& w = alpha.target();
  const Space source = direct_sum(v, w.dual());
  const Space target = direct_sum(v.dual(), w);
  Matrix m(target.dim(), source.dim());
  const std::size_t dv = v.dim();
  for (std::size_t j = 0; j < w.dim(); ++j)
    for (std::size_t i = 0; i < dv; ++i) m(dv + j, i) = alpha.matrix()(j, i);
  return LinearMap(source, target, std::move(m));
}

/// Reorders a square tensor over A + B (A = the first `split` blocks of
/// its tag) into one over B + A.
inline Tensor2 rotate_summands(const Tensor2& r, std::size_t split) {
  if (!r.is_square()) throw DimensionError("rotate_summands expects a square tensor");
  const auto& blocks = r.left().blocks();
  if (split > blocks.size()) throw DimensionError("rotate_summands: split beyond block count");
  std::vector<SpaceBlock> a(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<SpaceBlock> b(blocks.begin() + static_cast<std::ptrdiff_t>(split), blocks.end());
  const Space sa(a), sb(b);
  const Space out = direct_sum(sb, sa);
  const std::size_t da = sa.dim(), db = sb.dim();
  auto moved = [&](std::size_t i) { return i < da ? db + i : i - da; };
  Matrix m(out.dim(), out.dim());
  for (std::size_t i = 0; i < r.coeffs().rows(); ++i)
    for (std::size_t j = 0; j < r.coeffs().cols(); ++j) m(moved(i), moved(j)) = r.coeffs()(i, j);
  return Tensor2(out, out, std::move(m));
}

namespace detail {

struct SparseEntry {
  std::size_t i;
  std::size_t j;
  Scalar value;
};

inline std::vector<SparseEntry> nonzeros(const Matrix& m) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out.push_back({i, j, m(i, j)});
  return out;
}

inline void require_over(const LieAlgebra& L, const Tensor2& r, const char* what) {
  require_same_space(r.left(), L.space(), what);
  require_same_space(r.right(), L.space(), what);
}

}  // namespace detail

struct YbBrackets {
  Tensor3 r12_s13;  ///< sum [a_i, c_j] (x) b_i (x) d_j
  Tensor3 r12_s23;  ///< sum a_i (x) [b_i, c_j] (x) d_j
  Tensor3 r13_s23;  ///< sum a_i (x) c_j (x) [b_i, d_j]
};

/// The three bracket combinations for r = sum a_i (x) b_i and
/// s = sum c_j (x) d_j, contracted directly against the structure constants.
inline YbBrackets yb_brackets(const LieAlgebra& L, const Tensor2& r, const Tensor2& s) {
  detail::require_over(L, r, "yb_brackets(r)");
  detail::require_over(L, s, "yb_brackets(s)");
  YbBrackets out{Tensor3(L.space()), Tensor3(L.space()), Tensor3(L.space())};
  const auto rn = detail::nonzeros(r.coeffs());
  const auto sn = detail::nonzeros(s.coeffs());
  Scalar w;
  for (const auto& [p, q, rv] : rn) {
    for (const auto& [pp, qq, sv] : sn) {
      w = rv * sv;
      for (const auto& t : L.bracket_terms(p, pp)) out.r12_s13(t.index, q, qq) += w * t.coeff;
      for (const auto& t : L.bracket_terms(q, pp)) out.r12_s23(p, t.index, qq) += w * t.coeff;
      for (const auto& t : L.bracket_terms(q, qq)) out.r13_s23(p, pp, t.index) += w * t.coeff;
    }
  }
  return out;
}

/// [(r13 + r31), (r23 + r32)] read as a commutator in the triple tensor
/// power of the enveloping algebra, where unit slots absorb:
///   sum a_i (x) a_j (x) [b_i, b_j] + a_i (x) b_j (x) [b_i, a_j]
///     + b_i (x) a_j (x) [a_i, b_j] + b_i (x) b_j (x) [a_i, a_j].
inline Tensor3 ext_rhs(const LieAlgebra& L, const Tensor2& r) {
  detail::require_over(L, r, "ext_rhs");
  Tensor3 out(L.space());
  const auto rn = detail::nonzeros(r.coeffs());
  Scalar w;
  for (const auto& [p, q, rv] : rn) {
    for (const auto& [pp, qq, sv] : rn) {
      w = rv * sv;
      for (const auto& t : L.bracket_terms(q, qq)) out(p, pp, t.index) += w * t.coeff;
      for (const auto& t : L.bracket_terms(q, pp)) out(p, qq, t.index) += w * t.coeff;
      for (const auto& t : L.bracket_terms(p, qq)) out(q, pp, t.index) += w * t.coeff;
      for (const auto& t : L.bracket_terms(p, pp)) out(q, qq, t.index) += w * t.coeff;
    }
  }
  return out;
}

}  // namespace ybe
