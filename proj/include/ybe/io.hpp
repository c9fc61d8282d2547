#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybe/catalog.hpp"
#include "ybe/core_algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/liftings.hpp"
#include "ybe/report.hpp"
#include "ybe/tensor_calculus.hpp"

// Wire formats use 1-based indices and rationals as strings; everything
// in memory is 0-based.

namespace ybe::io {

using json = nlohmann::ordered_json;

inline json scalar_json(const Scalar& s) { return to_string(s); }

inline Scalar scalar_from(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw ParseError("expected a rational as a string or integer, got " + j.dump());
}

inline std::size_t index_from(const json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": index must be an integer");
  const long long i = j.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > bound) {
    throw ParseError(std::string(what) + ": index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
  }
  return static_cast<std::size_t>(i - 1);
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

// ---- matrices ----------------------------------------------------------------

inline json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError("matrix must have " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from(j[i][c]);
  }
  return m;
}

/// Matrix of whatever shape the rows describe.
inline Matrix matrix_from(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a nonempty list of rows");
  return matrix_from(j, j.size(), j[0].size());
}

// ---- algebras ----------------------------------------------------------------

inline json to_json(const LieAlgebra& L) {
  json out;
  out["name"] = L.name();
  out["dim"] = L.dim();
  out["basis_names"] = L.basis_names();
  json brackets = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const auto& terms = L.bracket_terms(i, j);
      if (terms.empty()) continue;
      json ts = json::array();
      for (const auto& t : terms) ts.push_back(json::array({t.index + 1, scalar_json(t.coeff)}));
      brackets.push_back(json::array({i + 1, j + 1, std::move(ts)}));
    }
  out["brackets"] = std::move(brackets);
  out["space"] = L.space().to_string();
  return out;
}

inline LieAlgebra algebra_from(const json& j) {
  return guarded([&] {
    if (!j.is_object()) throw ParseError("algebra document must be an object");
    const std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) throw ParseError("algebra dimension must be positive");
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
      names = j.at("basis_names").get<std::vector<std::string>>();
      if (names.size() != n) throw ParseError("basis_names length differs from dim");
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    std::vector<BracketSpec> specs;
    for (const auto& b : j.value("brackets", json::array())) {
      if (!b.is_array() || b.size() != 3) throw ParseError("bracket entry must be [i, j, terms]");
      BracketSpec s{index_from(b[0], n, "bracket"), index_from(b[1], n, "bracket"), {}};
      for (const auto& t : b[2]) {
        if (!t.is_array() || t.size() != 2) throw ParseError("bracket term must be [k, value]");
        s.terms.emplace_back(index_from(t[0], n, "bracket term"), scalar_from(t[1]));
      }
      specs.push_back(std::move(s));
    }
    LieAlgebra L;
    try {
      L = make_lie_algebra(j.value("name", std::string("algebra")), std::move(names), specs);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (j.contains("space")) L = L.with_space(Space::parse(j.at("space").get<std::string>()));
    return L;
  });
}

// ---- representations ---------------------------------------------------------

inline json to_json(const Representation& rho) {
  json out;
  out["space"] = rho.space.to_string();
  out["names"] = rho.names;
  json mats = json::array();
  for (const auto& m : rho.mats) mats.push_back(matrix_json(m));
  out["mats"] = std::move(mats);
  return out;
}

inline Representation representation_from(const json& j, const LieAlgebra& g) {
  return guarded([&] {
    Representation rho;
    rho.space = Space::parse(j.at("space").get<std::string>());
    if (j.contains("names")) rho.names = j.at("names").get<std::vector<std::string>>();
    if (rho.names.empty()) rho.names = default_names(rho.space);
    const auto& mats = j.at("mats");
    if (!mats.is_array() || mats.size() != g.dim()) {
      throw ParseError("module needs one matrix per basis element of " + g.name());
    }
    for (const auto& m : mats) rho.mats.push_back(matrix_from(m, rho.dim(), rho.dim()));
    return rho;
  });
}

// ---- tensors and maps --------------------------------------------------------

inline json to_json(const Tensor2& t) {
  json out;
  out["space"] = {{"left", t.left().to_string()}, {"right", t.right().to_string()}};
  json entries = json::array();
  const Matrix& m = t.coeffs();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) entries.push_back(json::array({i + 1, j + 1, scalar_json(m(i, j))}));
  out["entries"] = std::move(entries);
  return out;
}

inline Tensor2 tensor2_from(const json& j) {
  return guarded([&] {
    const Space left = Space::parse(j.at("space").at("left").get<std::string>());
    const Space right = Space::parse(j.at("space").at("right").get<std::string>());
    Matrix m(left.dim(), right.dim());
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("tensor entry must be [i, j, value]");
      m(index_from(e[0], left.dim(), "tensor"), index_from(e[1], right.dim(), "tensor")) += scalar_from(e[2]);
    }
    return Tensor2(left, right, std::move(m));
  });
}

inline json to_json(const Tensor3& t) {
  json out;
  out["space"] = t.space().to_string();
  json entries = json::array();
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!is_zero(t(a, b, c))) entries.push_back(json::array({a + 1, b + 1, c + 1, scalar_json(t(a, b, c))}));
  out["entries"] = std::move(entries);
  return out;
}

inline Tensor3 tensor3_from(const json& j) {
  return guarded([&] {
    Tensor3 t(Space::parse(j.at("space").get<std::string>()));
    const std::size_t n = t.dim();
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("tensor entry must be [i, j, k, value]");
      t(index_from(e[0], n, "tensor"), index_from(e[1], n, "tensor"), index_from(e[2], n, "tensor")) +=
          scalar_from(e[3]);
    }
    return t;
  });
}

inline json to_json(const LinearMap& m) {
  json out;
  out["source"] = m.source().to_string();
  out["target"] = m.target().to_string();
  out["matrix"] = matrix_json(m.matrix());
  return out;
}

inline LinearMap map_from(const json& j) {
  return guarded([&] {
    const Space source = Space::parse(j.at("source").get<std::string>());
    const Space target = Space::parse(j.at("target").get<std::string>());
    return LinearMap(source, target, matrix_from(j.at("matrix"), target.dim(), source.dim()));
  });
}

// ---- reports and lifts -------------------------------------------------------

inline json to_json(const Report& r) {
  json out;
  out["ok"] = r.ok();
  out["kind"] = to_string(r.kind);
  json entries = json::array();
  for (const auto& e : r.nonzero) {
    json idx = json::array();
    for (auto i : e.index) idx.push_back(i + 1);
    json item;
    item["index"] = std::move(idx);
    item["value"] = scalar_json(e.value);
    if (!e.label.empty()) item["label"] = e.label;
    entries.push_back(std::move(item));
  }
  out["nonzero"] = std::move(entries);
  out["context"] = r.context;
  return out;
}

inline Report report_from_json(const json& j) {
  return guarded([&] {
    Report r;
    const auto kind = j.at("kind").get<std::string>();
    bool known = false;
    for (auto k : {ResidualKind::tensor3, ResidualKind::tensor3_family, ResidualKind::map_residual,
                   ResidualKind::scalar_table}) {
      if (kind == to_string(k)) {
        r.kind = k;
        known = true;
      }
    }
    if (!known) throw ParseError("unknown residual kind '" + kind + "'");
    for (const auto& e : j.at("nonzero")) {
      std::vector<std::size_t> idx;
      for (const auto& i : e.at("index")) {
        const long long v = i.get<long long>();
        if (v < 1) throw ParseError("report index must be positive");
        idx.push_back(static_cast<std::size_t>(v - 1));
      }
      r.nonzero.push_back({std::move(idx), scalar_from(e.at("value")), e.value("label", std::string())});
    }
    r.context = j.value("context", std::string());
    if (j.at("ok").get<bool>() != r.ok()) throw ParseError("report 'ok' flag contradicts its entries");
    return r;
  });
}

inline json to_json(const LiftResult& lift) {
  json out;
  out["big"] = to_json(lift.big);
  json ts = json::array();
  for (const auto& t : lift.tensors) ts.push_back(to_json(t));
  out["r"] = std::move(ts);
  json ms = json::array();
  for (const auto& m : lift.maps) ms.push_back(to_json(m));
  out["maps"] = std::move(ms);
  json params = json::array();
  for (const auto& [k, v] : lift.provenance.params) params.push_back(json::array({k, scalar_json(v)}));
  out["provenance"] = {{"construction", lift.provenance.construction}, {"params", std::move(params)}};
  return out;
}

inline LiftResult lift_from(const json& j) {
  return guarded([&] {
    LiftResult out;
    out.big = algebra_from(j.at("big"));
    for (const auto& t : j.at("r")) out.tensors.push_back(tensor2_from(t));
    for (const auto& m : j.value("maps", json::array())) out.maps.push_back(map_from(m));
    out.provenance.construction = j.at("provenance").at("construction").get<std::string>();
    for (const auto& p : j.at("provenance").at("params")) {
      out.provenance.params.emplace_back(p.at(0).get<std::string>(), scalar_from(p.at(1)));
    }
    return out;
  });
}

// ---- files -------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

/// "catalog:NAME" or a path to an algebra document.
inline LieAlgebra load_algebra(const std::string& ref) {
  const std::string prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) return catalog_algebra(ref.substr(prefix.size()));
  return algebra_from(read_json_file(ref));
}

/// "adjoint", "coadjoint", "trivial:N", or a path to a module document.
inline Representation load_module(const std::string& ref, const LieAlgebra& g) {
  if (ref == "adjoint") return adjoint_representation(g);
  if (ref == "coadjoint") return coadjoint_representation(g);
  if (ref.rfind("trivial:", 0) == 0) {
    const std::string n = ref.substr(8);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoul(n) == 0) {
      throw ParseError("trivial module needs a positive dimension, got '" + ref + "'");
    }
    return trivial_representation(g, std::stoul(n));
  }
  return representation_from(read_json_file(ref), g);
}

// ---- expressions -------------------------------------------------------------

namespace detail {

class ExprReader {
 public:
  explicit ExprReader(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }
  bool done() const { return pos_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::string identifier() {
    const std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }
  Scalar rational() {
    const std::size_t start = pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_scalar(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + s_ + "' at position " + std::to_string(pos_ + 1) + ": " + what);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

inline std::size_t basis_index(const LieAlgebra& L, const std::string& name, const ExprReader& rd) {
  const auto& names = L.basis_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  rd.fail("unknown basis element '" + name + "'");
}

}  // namespace detail

/// Inverse of the Killing form as a tensor; requires a semisimple algebra.
inline Tensor2 killing_casimir(const LieAlgebra& L) {
  const auto inv = try_inverse(killing_form(L).gram);
  if (!inv) throw PreconditionError("Killing form of " + L.name() + " is degenerate");
  return Tensor2(L.space(), L.space(), *inv);
}

/// Tensor over L (x) L from text.
///
///   [skew: | sym:] term {(+|-) term}
///   term := [p/q *] (name (x) name | name ^ name | zero | casimir | NAME)
///
/// where a^b = a(x)b - b(x)a and NAME is a distinguished tensor of the
/// catalog entry. A string naming an existing file is read as a document.
inline Tensor2 parse_tensor_expression(const LieAlgebra& L, const std::string& text) {
  if (std::ifstream(text).good()) {
    Tensor2 t = tensor2_from(read_json_file(text));
    ybe::detail::require_over(L, t, "tensor file");
    return t;
  }
  std::string body = text;
  int part = 0;
  if (body.rfind("skew:", 0) == 0) {
    part = -1;
    body = body.substr(5);
  } else if (body.rfind("sym:", 0) == 0) {
    part = 1;
    body = body.substr(4);
  }
  detail::ExprReader rd(body);
  if (rd.done()) rd.fail("empty expression");
  Tensor2 total = Tensor2::zero(L.space());
  bool first = true;
  while (!rd.done()) {
    Scalar sign = 1;
    if (rd.accept("+")) {
    } else if (rd.accept("-")) {
      sign = -1;
    } else if (!first) {
      rd.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(rd.peek()))) {
      coeff = rd.rational();
      if (!rd.accept("*")) rd.fail("expected '*' after coefficient");
    }
    const std::string a = rd.identifier();
    Tensor2 term;
    if (rd.accept("(x)")) {
      term = Tensor2::simple(L.space(), detail::basis_index(L, a, rd), detail::basis_index(L, rd.identifier(), rd));
    } else if (rd.accept("^")) {
      term = Tensor2::wedge(L.space(), detail::basis_index(L, a, rd), detail::basis_index(L, rd.identifier(), rd));
    } else if (a == "zero") {
      term = Tensor2::zero(L.space());
    } else {
      const Tensor2* named = nullptr;
      for (const auto& e : catalog())
        if (e.algebra == L) named = e.tensor(a);
      if (named) {
        term = *named;
      } else if (a == "casimir") {
        term = killing_casimir(L);
      } else {
        rd.fail("unknown tensor '" + a + "'");
      }
    }
    total = total + (sign * coeff) * term;
  }
  if (part == -1) return pm_parts(total).minus;
  if (part == 1) return pm_parts(total).plus;
  return total;
}

/// Map source -> target from "zero", "id", a named catalog operator, an
/// inline JSON matrix, or a path to a map document.
inline LinearMap parse_map_expression(const std::string& text, const Space& source, const Space& target,
                                      const LieAlgebra* owner = nullptr) {
  if (text == "zero") return LinearMap::zero(source, target);
  if (text == "id") {
    if (source.dim() != target.dim()) throw DimensionError("'id' needs equal source and target dimensions");
    return LinearMap(source, target, Matrix::identity(source.dim()));
  }
  if (!text.empty() && text.front() == '[') {
    const json j = guarded([&] { return json::parse(text); });
    return guarded([&] { return LinearMap(source, target, matrix_from(j, target.dim(), source.dim())); });
  }
  if (owner) {
    for (const auto& e : catalog()) {
      if (!(e.algebra == *owner)) continue;
      if (const LinearMap* m = e.map(text)) return LinearMap(source, target, m->matrix());
    }
  }
  if (std::ifstream(text).good()) {
    LinearMap m = map_from(read_json_file(text));
    require_same_space(m.source(), source, "map file source");
    require_same_space(m.target(), target, "map file target");
    return m;
  }
  throw ParseError("cannot interpret map '" + text + "'");
}

}  // namespace ybe::io
