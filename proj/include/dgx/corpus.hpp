#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgx/error.hpp"

namespace dgx {

// Terminator appended to every document, lexicographically smallest byte.
inline constexpr uint8_t kTerminator = 0x00;

// Bit sequence with constant-time rank support. Positions are 1-based.
class BitvectorRank {
 public:
  BitvectorRank() = default;
  BitvectorRank(uint64_t n, const std::vector<uint64_t>& one_positions);

  uint64_t size() const { return n_; }
  uint64_t ones() const { return ones_; }

  bool get(uint64_t i) const;          // 1 <= i <= n
  uint64_t rank1(uint64_t j) const;    // 0 <= j <= n, ones in [1..j]

 private:
  uint64_t n_ = 0;
  uint64_t ones_ = 0;
  std::vector<uint64_t> words_;
  std::vector<uint64_t> cum_;  // ones strictly before each word
};

// Concatenation of documents, each followed by a terminator. All positions
// are 1-based; text_at(i) reads T[i].
struct Collection {
  std::string text;                  // T[1..n], stored 0-based internally
  uint64_t n = 0;                    // total length including terminators
  uint32_t d = 0;                    // document count
  BitvectorRank starts;              // starts.get(i) iff a document begins at i
  std::vector<uint64_t> doc_starts;  // increasing, doc_starts[g-1] = start of doc g

  uint8_t text_at(uint64_t i) const { return static_cast<uint8_t>(text[i - 1]); }

  // Document length including the terminator.
  uint64_t doc_span(uint32_t g) const {
    uint64_t next = (g < d) ? doc_starts[g] : n + 1;
    return next - doc_starts[g - 1];
  }
};

// Concatenates docs with terminators. Documents may be empty; none may
// contain the terminator byte.
Collection build_collection(const std::vector<std::string>& docs);

uint64_t rank1(const BitvectorRank& b, uint64_t j);

// Identifier in [1,d] of the document containing T[i]; a terminator belongs
// to the document it ends.
uint32_t doc_of(const Collection& c, uint64_t i);

// Inverse of build_collection: cut at terminators.
std::vector<std::string> split_documents(const Collection& c);

// ".docs" container is the raw text T, terminators included; the boundary
// bitvector is recomputed on load.
void save_docs(const Collection& c, const std::string& path);
Collection load_docs(const std::string& path);

// Rebuilds a Collection from raw concatenated text (must end with a
// terminator).
Collection collection_from_text(std::string text);

// One file per document, lexicographic filename order.
Collection load_docs_dir(const std::string& dir);

}  // namespace dgx
