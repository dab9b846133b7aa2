#pragma once

#include <cstdint>
#include <vector>

#include "dgx/error.hpp"

namespace dgx {

// Sparse table over power-of-two windows; O(1) queries, leftmost minimum on
// ties. Keeps a copy of the source values (queries compare them).
class RmqIndex {
 public:
  RmqIndex() = default;
  explicit RmqIndex(std::vector<uint32_t> values);

  uint64_t size() const { return values_.size(); }
  const std::vector<uint32_t>& values() const { return values_; }
  uint32_t value_at(uint64_t i) const { return values_[i - 1]; }

  // Leftmost position of the minimum of values[i..j], 1-based.
  uint64_t query(uint64_t i, uint64_t j) const;

  // Table cells, for size accounting.
  uint64_t table_cells() const;

 private:
  std::vector<uint32_t> values_;
  std::vector<std::vector<uint32_t>> table_;  // table_[k][i] = argmin of length-2^(k+1) window
};

RmqIndex build_rmq(std::vector<uint32_t> values);

uint64_t rmq(const RmqIndex& r, uint64_t i, uint64_t j);

}  // namespace dgx
