#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ybe/error.hpp"
#include "ybe/scalar.hpp"

namespace ybe {

/// Dense rational array of arbitrary rank, row-major. Houses order-3 tensor
/// coefficients and basis-indexed residual tables.
class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    data_.resize(std::accumulate(shape_.begin(), shape_.end(), std::size_t{1}, std::multiplies<>()));
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * shape_[1] + j) * shape_[2] + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
  }

  Scalar& flat(std::size_t i) { return data_[i]; }
  const Scalar& flat(std::size_t i) const { return data_[i]; }

  std::vector<std::size_t> unflatten(std::size_t flat_index) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t d = shape_.size(); d-- > 0;) {
      idx[d] = flat_index % shape_[d];
      flat_index /= shape_[d];
    }
    return idx;
  }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!ybe::is_zero(s)) return false;
    }
    return true;
  }

  std::size_t count_nonzero() const {
    std::size_t n = 0;
    for (const auto& s : data_) n += ybe::is_zero(s) ? 0 : 1;
    return n;
  }

  friend bool operator==(const Table& a, const Table& b) { return a.shape_ == b.shape_ && a.data_ == b.data_; }

  friend Table operator+(const Table& a, const Table& b) {
    a.same_shape(b);
    Table out(a.shape_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }
  friend Table operator-(const Table& a, const Table& b) {
    a.same_shape(b);
    Table out(a.shape_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }
  friend Table operator*(const Scalar& s, const Table& a) {
    Table out(a.shape_);
    if (ybe::is_zero(s)) return out;
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
  }
  Table& operator+=(const Table& b) {
    same_shape(b);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
  }

 private:
  void same_shape(const Table& b) const {
    if (shape_ != b.shape_) throw DimensionError("table shape mismatch");
  }

  std::vector<std::size_t> shape_;
  std::vector<Scalar> data_;
};

}  // namespace ybe
