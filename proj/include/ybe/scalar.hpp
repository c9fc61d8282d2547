#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "ybe/error.hpp"

namespace ybe {

/// Exact rational in lowest terms with positive denominator.
using Scalar = mpq_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "p", "-p", "p/q". Rejects zero denominators and anything that is
/// not plain base-10 digits.
inline Scalar parse_scalar(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits_only(num) || (slash != std::string_view::npos && !digits_only(den))) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  if (slash != std::string_view::npos) {
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }
  Scalar out(canonical, 10);
  out.canonicalize();
  return out;
}

inline std::string to_string(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return c.get_str();
}

}  // namespace ybe
