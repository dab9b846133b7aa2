#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgx/corpus.hpp"

namespace dgx {

struct IlcpRun {
  uint64_t start;   // first rank of the run, 1-based
  uint64_t length;  // > 0
  uint32_t value;

  bool operator==(const IlcpRun&) const = default;
};

// Suffix array plus derived arrays over one collection. Arrays are built on
// demand; an empty vector means "not built". All ranks and positions 1-based.
struct SuffixIndex {
  std::vector<uint32_t> sa;    // permutation of [1..n]
  std::vector<uint32_t> da;    // document ids in [1,d]
  std::vector<uint32_t> lcp;   // lcp[0] corresponds to rank 1 and is 0
  std::vector<uint32_t> ilcp;  // per-document lcp values in global rank order
  std::vector<IlcpRun> ilcp_runs;
  std::vector<uint32_t> c;     // prior rank of same document, 0 if none

  uint64_t n() const { return sa.size(); }
  uint32_t sa_at(uint64_t i) const { return sa[i - 1]; }
  uint32_t da_at(uint64_t i) const { return da[i - 1]; }
  uint32_t lcp_at(uint64_t i) const { return lcp[i - 1]; }
  uint32_t ilcp_at(uint64_t i) const { return ilcp[i - 1]; }
  uint32_t c_at(uint64_t i) const { return c[i - 1]; }
};

struct RankRange {
  uint64_t sp;
  uint64_t ep;

  bool operator==(const RankRange&) const = default;
};

// Prefix-doubling construction; deterministic.
std::vector<uint32_t> build_sa(const Collection& c);

// Suffix range of suffixes prefixed by P; nullopt when P does not occur.
// Empty P matches every suffix.
std::optional<RankRange> find(const SuffixIndex& idx, const Collection& c, const std::string& P);

std::vector<uint64_t> locate(const SuffixIndex& idx, uint64_t sp, uint64_t ep);

std::vector<uint32_t> build_da(const SuffixIndex& idx, const Collection& c);

// Kasai's linear-time construction from the inverse permutation.
std::vector<uint32_t> build_lcp(const Collection& c, const SuffixIndex& idx);

// Per-document LCP arrays interleaved in global rank order, plus the maximal
// run-length encoding. Requires sa and da.
void build_ilcp(const Collection& c, SuffixIndex& idx);

std::vector<uint32_t> build_c(const std::vector<uint32_t>& da);

// Fills every derived array of idx from scratch.
SuffixIndex build_suffix_index(const Collection& c);

}  // namespace dgx
