#pragma once

#include <cstdint>
#include <vector>

#include "dgx/corpus.hpp"
#include "dgx/doclist.hpp"
#include "dgx/grammar.hpp"
#include "dgx/suffixes.hpp"

namespace dgx {

enum class PdlMode { listing, topk };

struct PdlStoredNode {
  uint64_t l = 0;
  uint64_t r = 0;
  Grammar docs;        // listing: ascending ids; topk: frequency desc, id asc
  FreqEncoding freqs;  // present only in topk mode with frequencies
};

// Precomputed document listing over the lcp-interval tree: leaf blocks of at
// most b suffixes, stored answer sets for designated nodes above them.
struct PdlIndex {
  uint64_t b = 0;
  double beta = 0.0;
  PdlMode mode = PdlMode::listing;
  bool with_freqs = false;
  std::vector<uint64_t> block_ends;    // ascending right ends; blocks partition [1..n]
  std::vector<PdlStoredNode> stored;   // sorted by (l asc, r desc); laminar

  uint64_t n() const { return block_ends.empty() ? 0 : block_ends.back(); }
};

// Designation rule for beta >= 1: a node above the blocks is stored iff the
// total size of the frontier sets below it is at least beta times its own
// answer set; beta = 0 stores every node above the blocks.
PdlIndex build_pdl(const SuffixIndex& idx, const Collection& c, uint64_t b, double beta,
                   PdlMode mode, bool with_freqs);

// Union of maximal stored ranges inside [sp,ep] plus brute-forced margins.
ListResult pdl_list(const PdlIndex& p, const SuffixIndex& idx, const Collection& c, uint64_t sp,
                    uint64_t ep);

struct TopkResult {
  std::vector<std::pair<uint32_t, uint64_t>> items;  // frequency desc, id asc
  bool freqs_valid = true;  // false when stored sets carry no frequencies

  bool operator==(const TopkResult&) const = default;
};

// [sp,ep] must be a pattern's find range. beta = 0 answers from one stored
// node or one block; beta >= 1 merges decoded sets with counted margins.
TopkResult pdl_topk(const PdlIndex& p, const SuffixIndex& idx, const Collection& c, uint64_t sp,
                    uint64_t ep, uint64_t k);

// Structural check: stored ranges pairwise nested or disjoint.
bool pdl_is_laminar(const PdlIndex& p);

}  // namespace dgx
