#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybe/scalar.hpp"
#include "ybe/table.hpp"

namespace ybe {

enum class ResidualKind { tensor3, tensor3_family, map_residual, scalar_table };

inline const char* to_string(ResidualKind k) {
  switch (k) {
    case ResidualKind::tensor3: return "tensor3";
    case ResidualKind::tensor3_family: return "tensor3_family";
    case ResidualKind::map_residual: return "map_residual";
    case ResidualKind::scalar_table: return "scalar_table";
  }
  return "unknown";
}

/// One nonzero residual coefficient. Indices are 0-based; the I/O layer
/// shifts them to 1-based. `label` names the sub-condition when a report
/// merges several checks.
struct ReportEntry {
  std::vector<std::size_t> index;
  Scalar value;
  std::string label;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

/// Outcome of a residual evaluation. ok() holds exactly when no entry is
/// recorded.
struct Report {
  ResidualKind kind = ResidualKind::scalar_table;
  std::vector<ReportEntry> nonzero;
  std::string context;

  bool ok() const { return nonzero.empty(); }

  void add(std::vector<std::size_t> index, Scalar value, std::string label = {}) {
    if (!is_zero(value)) nonzero.push_back({std::move(index), std::move(value), std::move(label)});
  }

  void absorb(const Table& t, const std::string& label = {}, std::vector<std::size_t> prefix = {}) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (is_zero(t.flat(i))) continue;
      auto idx = prefix;
      auto tail = t.unflatten(i);
      idx.insert(idx.end(), tail.begin(), tail.end());
      nonzero.push_back({std::move(idx), t.flat(i), label});
    }
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline Report report_from(const Table& t, ResidualKind kind, std::string context) {
  Report r;
  r.kind = kind;
  r.context = std::move(context);
  r.absorb(t);
  return r;
}

}  // namespace ybe
