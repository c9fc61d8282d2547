#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/tensor_calculus.hpp"

namespace ybe {

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::string notes;
  std::vector<std::pair<std::string, Tensor2>> tensors;
  std::vector<std::pair<std::string, LinearMap>> maps;

  const Tensor2* tensor(const std::string& key) const {
    for (const auto& [k, t] : tensors)
      if (k == key) return &t;
    return nullptr;
  }
  const LinearMap* map(const std::string& key) const {
    for (const auto& [k, m] : maps)
      if (k == key) return &m;
    return nullptr;
  }
};

namespace detail {

inline Tensor2 tensor_from(const LieAlgebra& L, Matrix m) { return Tensor2(L.space(), L.space(), std::move(m)); }

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    const LieAlgebra L = LieAlgebra::abelian(n);
    out.push_back({L.name(), L, "all brackets zero", {}, {}});
  }
  {
    const LieAlgebra L = make_lie_algebra("aff1", {"e1", "e2"}, {{0, 1, {{0, 1}}}});
    out.push_back({"aff1",
                   L,
                   "[e1,e2] = e1",
                   {{"r", Tensor2::wedge(L.space(), 0, 1)}},
                   {{"rb0", LinearMap(L.space(), L.space(), Matrix{{0, 1}, {0, 0}})},
                    {"proj1", LinearMap(L.space(), L.space(), Matrix{{1, 0}, {0, 0}})}}});
  }
  {
    const LieAlgebra L = make_lie_algebra("heisenberg3", {"e1", "e2", "e3"}, {{0, 1, {{2, 1}}}});
    out.push_back({"heisenberg3",
                   L,
                   "[e1,e2] = e3",
                   {{"r", Tensor2::wedge(L.space(), 0, 2)}},
                   {{"rb0", LinearMap(L.space(), L.space(), Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}})}}});
  }
  {
    // Basis order (e, h, f).
    const LieAlgebra L = make_lie_algebra("sl2", {"e", "h", "f"}, {{1, 0, {{0, 2}}}, {1, 2, {{2, -2}}}, {0, 2, {{1, 1}}}});
    Matrix cas(3, 3);
    cas(0, 2) = Scalar(1, 4);
    cas(2, 0) = Scalar(1, 4);
    cas(1, 1) = Scalar(1, 8);
    out.push_back({"sl2",
                   L,
                   "[h,e] = 2e, [h,f] = -2f, [e,f] = h",
                   {{"casimir", tensor_from(L, cas)}, {"r", Tensor2::wedge(L.space(), 1, 0)}},
                   {}});
  }
  {
    const LieAlgebra L = make_lie_algebra("so3", {"e1", "e2", "e3"},
                                          {{0, 1, {{2, 1}}}, {1, 2, {{0, 1}}}, {2, 0, {{1, 1}}}});
    out.push_back({"so3",
                   L,
                   "[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2",
                   {{"casimir", tensor_from(L, Scalar(-1, 2) * Matrix::identity(3))}},
                   {}});
  }
  return out;
}

}  // namespace detail

/// Built-in algebras. Every entry is checked for the Jacobi identity on
/// first use; a failure throws Error.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto list = detail::build_catalog();
    for (const auto& e : list) {
      if (!check_jacobi(e.algebra).ok()) throw Error("catalog entry '" + e.name + "' fails the Jacobi identity");
    }
    return list;
  }();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw NotFoundError("no catalog entry named '" + name + "'");
}

inline const LieAlgebra& catalog_algebra(const std::string& name) { return catalog_entry(name).algebra; }

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

}  // namespace ybe
