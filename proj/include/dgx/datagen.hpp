#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "dgx/corpus.hpp"
#include "dgx/suffixes.hpp"

namespace dgx {

enum class GenKind { dna, concat, version };

struct GenSpec {
  GenKind kind = GenKind::dna;
  uint32_t base_count = 1;
  uint32_t variants_per_base = 1;
  uint64_t base_length = 0;
  double rate = 0.01;
  uint64_t seed = 0;
  std::string source;  // empty: a synthetic source is drawn from the seed
};

// Per-symbol weights with exact integer sampling.
class SymbolDist {
 public:
  static SymbolDist from_bytes(const std::string& s);

  uint8_t sample(std::mt19937_64& rng) const;
  uint64_t total() const { return total_; }
  uint64_t weight(uint8_t b) const { return counts_[b]; }

 private:
  std::array<uint64_t, 256> counts_{};
  std::vector<std::pair<uint64_t, uint8_t>> cum_;  // exclusive cumulative end, symbol
  uint64_t total_ = 0;
};

// Each position is independently replaced with probability rate by a draw
// from dist; the replacement may equal the original symbol.
std::string mutate_zero_order(const std::string& s, double rate, const SymbolDist& dist,
                              std::mt19937_64& rng);

// One source window; bases are mutations of it at rate min(10p, 0.9), each
// variant (mutated from its base at rate p) is a separate document.
Collection gen_dna(const GenSpec& spec);

// Disjoint source windows as bases, unmutated; variants at rate p. Concat
// joins the variants of one base into one document, Version keeps each
// variant separate; the variant bytes for equal specs are identical.
Collection gen_concat(const GenSpec& spec);
Collection gen_version(const GenSpec& spec);

Collection gen_collection(const GenSpec& spec);

// sample_count random terminator-free substrings of the given length,
// deduplicated, ranked by occ/docc descending with lexicographic ties, top
// keep returned.
std::vector<std::string> gen_patterns_substr(const Collection& c, uint64_t len,
                                             uint64_t sample_count, uint64_t keep,
                                             const SuffixIndex& idx, uint64_t seed);

// One pattern per line; hex mode writes two lowercase digits per byte so
// patterns with newlines or unprintable bytes survive the trip.
void write_patterns(const std::filesystem::path& path, const std::vector<std::string>& patterns,
                    bool hex);
std::vector<std::string> read_patterns(const std::filesystem::path& path, bool hex);

GenKind parse_gen_kind(const std::string& name);
const char* gen_kind_name(GenKind kind);

}  // namespace dgx
