#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dgx/error.hpp"

namespace dgx {

// Re-Pair output. Rule t (0-based) defines symbol terminal_limit + t and
// references only terminals or earlier rules.
struct Grammar {
  uint32_t terminal_limit = 0;
  std::vector<std::pair<uint32_t, uint32_t>> rules;
  std::vector<uint32_t> sequence;

  uint64_t symbol_count() const { return 2 * rules.size() + sequence.size(); }
};

struct RepairStats {
  uint64_t rules = 0;
  uint64_t min_creation_count = 0;  // smallest pair frequency any rule replaced
};

// Greedy Re-Pair: repeatedly replace the most frequent adjacent pair
// (left-to-right non-overlapping count, ties to the smallest pair) until no
// pair occurs twice. All input values must be < terminal_limit.
Grammar repair_compress(const std::vector<uint32_t>& seq, uint32_t terminal_limit,
                        RepairStats* stats = nullptr);

std::vector<uint32_t> repair_decompress(const Grammar& g);

// First min(k, expanded length) symbols, expanding rules left-first only as
// far as needed.
std::vector<uint32_t> repair_expand_prefix(const Grammar& g, uint64_t k);

// Set-oriented pair replacement: the pair co-occurring in the most sets
// becomes a rule, replaced wherever both symbols appear at top level.
struct SetGrammar {
  uint32_t symbol_limit = 0;  // rule t defines symbol symbol_limit + t
  std::vector<std::pair<uint32_t, uint32_t>> rules;
  std::vector<std::vector<uint32_t>> sets;  // rewritten, ascending
};

SetGrammar setpair_compress(const std::vector<std::vector<uint32_t>>& sets);

// Recursively replaces rules and deduplicates, recovering the original set.
std::vector<uint32_t> setgrammar_expand(const SetGrammar& g, const std::vector<uint32_t>& set);

// Run-length plus differential codec for non-increasing positive sequences.
struct FreqEncoding {
  std::vector<uint64_t> run_lengths;  // positive
  std::vector<uint64_t> head_gaps;    // first head, then positive decrements

  bool operator==(const FreqEncoding&) const = default;
};

// subtree_size > 0 additionally asserts the run bound r(r+1)/2 <= subtree_size
// (distinct positive values sum to at least the triangular number).
FreqEncoding encode_freqs(const std::vector<uint64_t>& freqs, uint64_t subtree_size = 0);

std::vector<uint64_t> decode_freqs(const FreqEncoding& e);

// First min(k, total) values without decoding every run.
std::vector<uint64_t> decode_freqs_prefix(const FreqEncoding& e, uint64_t k);

}  // namespace dgx
