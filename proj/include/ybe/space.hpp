#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybe/error.hpp"

namespace ybe {

/// One summand of a space tag: a named space of fixed dimension, or its dual.
struct SpaceBlock {
  std::string name;
  std::size_t dim = 0;
  bool dual = false;

  friend bool operator==(const SpaceBlock&, const SpaceBlock&) = default;
};

/// Tag identifying the vector space a coordinate vector lives in.
///
/// A tag is an ordered direct sum of blocks. Taking the dual flips every
/// block, so (V + W*)* compares equal to V* + W and V** equals V.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<SpaceBlock> blocks) : blocks_(std::move(blocks)) {}

  static Space primal(std::string name, std::size_t dim) { return Space({{std::move(name), dim, false}}); }

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& b : blocks_) d += b.dim;
    return d;
  }

  const std::vector<SpaceBlock>& blocks() const { return blocks_; }

  Space dual() const {
    Space out = *this;
    for (auto& b : out.blocks_) b.dual = !b.dual;
    return out;
  }

  friend Space direct_sum(const Space& a, const Space& b) {
    Space out = a;
    out.blocks_.insert(out.blocks_.end(), b.blocks_.begin(), b.blocks_.end());
    return out;
  }

  /// "name:dim" per block, '*' suffix for duals, joined with '+'.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += "+";
      s += blocks_[i].name + ":" + std::to_string(blocks_[i].dim);
      if (blocks_[i].dual) s += "*";
    }
    return s;
  }

  static Space parse(const std::string& text) {
    std::vector<SpaceBlock> blocks;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('+', start);
      if (end == std::string::npos) end = text.size();
      std::string item = text.substr(start, end - start);
      SpaceBlock b;
      if (!item.empty() && item.back() == '*') {
        b.dual = true;
        item.pop_back();
      }
      const auto colon = item.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == item.size()) {
        throw ParseError("malformed space tag: '" + text + "'");
      }
      b.name = item.substr(0, colon);
      try {
        std::size_t used = 0;
        b.dim = std::stoul(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("malformed space dimension in tag: '" + text + "'");
      }
      blocks.push_back(std::move(b));
      start = end + 1;
    }
    return Space(std::move(blocks));
  }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::vector<SpaceBlock> blocks_;
};

inline void require_same_space(const Space& a, const Space& b, const std::string& what) {
  if (!(a == b)) {
    throw DimensionError(std::string(what) + ": space mismatch " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace ybe
