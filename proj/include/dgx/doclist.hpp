#pragma once

#include <cstdint>
#include <vector>

#include "dgx/corpus.hpp"
#include "dgx/rmq.hpp"
#include "dgx/suffixes.hpp"

namespace dgx {

struct ListResult {
  std::vector<uint32_t> docs;  // ascending, no duplicates
  uint64_t docc = 0;
  uint64_t occ = 0;

  bool operator==(const ListResult&) const = default;
};

// Per-document scratch bitmap with O(1) reset via generation stamps; grows
// on first use of an id and is reused across queries.
class SeenSet {
 public:
  void reset() { ++gen_; }

  // True on the first sighting of g in the current generation.
  bool insert(uint32_t g) {
    if (g >= stamp_.size()) stamp_.resize(static_cast<size_t>(g) + 1, 0);
    if (stamp_[g] == gen_) return false;
    stamp_[g] = gen_;
    return true;
  }

 private:
  std::vector<uint64_t> stamp_;
  uint64_t gen_ = 1;
};

struct MutStats {
  uint64_t visits = 0;   // nonempty subranges entered
  uint64_t reports = 0;  // positions whose document was reported
};

// Sorted distinct documents of DA[sp..ep], ids recovered via locate and the
// boundary bitvector.
ListResult list_brute_l(const SuffixIndex& idx, const Collection& c, uint64_t sp, uint64_t ep);

// Same, reading the document array directly.
ListResult list_brute_d(const SuffixIndex& idx, uint64_t sp, uint64_t ep);

// Recursive RMQ over C; a position is a first occurrence iff C[i] < sp.
ListResult list_mut(const SuffixIndex& idx, const RmqIndex& rmq_c, uint64_t sp, uint64_t ep,
                    MutStats* stats = nullptr);

// Preorder left-to-right RMQ recursion; the seen set replaces the C test.
ListResult list_sada_d(const SuffixIndex& idx, const RmqIndex& rmq_c, uint64_t sp, uint64_t ep,
                       SeenSet& seen);
ListResult list_sada_l(const SuffixIndex& idx, const Collection& c, const RmqIndex& rmq_c,
                       uint64_t sp, uint64_t ep, SeenSet& seen);

// RMQ over ILCP; a position qualifies iff ILCP[i] < m, no seen set needed.
// [sp,ep] must be the find range of a pattern of length m >= 1.
ListResult list_ilcp_d(const SuffixIndex& idx, const RmqIndex& rmq_ilcp, uint64_t sp, uint64_t ep,
                       uint64_t m);
ListResult list_ilcp_l(const SuffixIndex& idx, const Collection& c, const RmqIndex& rmq_ilcp,
                       uint64_t sp, uint64_t ep, uint64_t m);

// RMQ over ILCP run values; every position of a qualifying run inside the
// query range is reported.
ListResult list_ilcp_runs(const SuffixIndex& idx, const RmqIndex& rmq_runs, uint64_t sp,
                          uint64_t ep, uint64_t m);

// Occurrence count per document in DA[sp..ep], ascending by document id.
std::vector<std::pair<uint32_t, uint64_t>> count_freqs(const SuffixIndex& idx, uint64_t sp,
                                                       uint64_t ep);

// Top k by frequency, canonical order: frequency descending, ids ascending.
std::vector<std::pair<uint32_t, uint64_t>> topk_brute_d(const SuffixIndex& idx, uint64_t sp,
                                                        uint64_t ep, uint64_t k);
std::vector<std::pair<uint32_t, uint64_t>> topk_brute_l(const SuffixIndex& idx,
                                                        const Collection& c, uint64_t sp,
                                                        uint64_t ep, uint64_t k);

// Canonical (freq desc, id asc) selection from per-document counts.
std::vector<std::pair<uint32_t, uint64_t>> select_topk(
    std::vector<std::pair<uint32_t, uint64_t>> freqs, uint64_t k);

}  // namespace dgx
