#include "dgx/rmq.hpp"

#include <bit>

namespace dgx {

RmqIndex::RmqIndex(std::vector<uint32_t> values) : values_(std::move(values)) {
  if (values_.empty()) fail(Errc::empty_array, "rmq over empty array");
  size_t n = values_.size();
  // Level k covers windows of length 2^(k+1); the length-1 level is implicit.
  size_t levels = (n >= 2) ? static_cast<size_t>(std::bit_width(n) - 1) : 0;
  table_.resize(levels);
  for (size_t k = 0; k < levels; ++k) {
    size_t len = 1ull << (k + 1);
    size_t half = len >> 1;
    table_[k].resize(n - len + 1);
    for (size_t i = 0; i + len <= n; ++i) {
      uint32_t a = (k == 0) ? static_cast<uint32_t>(i) : table_[k - 1][i];
      uint32_t b = (k == 0) ? static_cast<uint32_t>(i + 1) : table_[k - 1][i + half];
      table_[k][i] = (values_[b] < values_[a]) ? b : a;  // tie keeps the left window
    }
  }
}

uint64_t RmqIndex::query(uint64_t i, uint64_t j) const {
  if (i < 1 || i > j || j > values_.size()) fail(Errc::out_of_bounds, "rmq range");
  if (i == j) return i;
  uint64_t len = j - i + 1;
  size_t k = static_cast<size_t>(std::bit_width(len) - 1);  // 2^k <= len
  uint64_t a = table_[k - 1][i - 1];
  uint64_t b = table_[k - 1][j - (1ull << k)];
  uint64_t pos = (values_[b] < values_[a] || (values_[b] == values_[a] && b < a)) ? b : a;
  return pos + 1;
}

uint64_t RmqIndex::table_cells() const {
  uint64_t cells = 0;
  for (const auto& level : table_) cells += level.size();
  return cells;
}

RmqIndex build_rmq(std::vector<uint32_t> values) { return RmqIndex(std::move(values)); }

uint64_t rmq(const RmqIndex& r, uint64_t i, uint64_t j) { return r.query(i, j); }

}  // namespace dgx
