#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/scalar.hpp"

namespace ybe {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent seed for trial `index` of a campaign rooted at `root`.
inline std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) {
  return splitmix64(splitmix64(root) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Deterministic source of small rationals. Draws use plain modular
/// reduction of the raw 64-bit stream, so sequences are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  bool coin() { return (next() & 1U) != 0; }

  /// p/q with p in [-3, 3], q in {1, 2}.
  Scalar small_rational() {
    const long p = static_cast<long>(below(7)) - 3;
    const long q = static_cast<long>(below(2)) + 1;
    Scalar s(p, q);
    s.canonicalize();
    return s;
  }

  Scalar nonzero_rational() {
    Scalar s;
    do s = small_rational();
    while (is_zero(s));
    return s;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& s : v) s = small_rational();
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational();
    return m;
  }

  Matrix invertible_matrix(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (!is_zero(determinant(m))) return m;
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items.at(below(items.size()));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ybe
