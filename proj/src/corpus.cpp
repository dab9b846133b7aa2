#include "dgx/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dgx {

BitvectorRank::BitvectorRank(uint64_t n, const std::vector<uint64_t>& one_positions) : n_(n) {
  words_.assign((n + 63) / 64, 0);
  for (uint64_t p : one_positions) {
    if (p < 1 || p > n) fail(Errc::out_of_bounds, "bit position " + std::to_string(p));
    words_[(p - 1) / 64] |= 1ull << ((p - 1) % 64);
  }
  cum_.resize(words_.size() + 1);
  cum_[0] = 0;
  for (size_t w = 0; w < words_.size(); ++w)
    cum_[w + 1] = cum_[w] + static_cast<uint64_t>(__builtin_popcountll(words_[w]));
  ones_ = cum_[words_.size()];
}

bool BitvectorRank::get(uint64_t i) const {
  if (i < 1 || i > n_) fail(Errc::out_of_bounds, "bit index " + std::to_string(i));
  return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1;
}

uint64_t BitvectorRank::rank1(uint64_t j) const {
  if (j > n_) fail(Errc::out_of_bounds, "rank position " + std::to_string(j));
  if (j == 0) return 0;
  uint64_t w = (j - 1) / 64;
  uint64_t in_word = (j - 1) % 64 + 1;  // bits of this word inside the prefix
  uint64_t mask = (in_word == 64) ? ~0ull : ((1ull << in_word) - 1);
  return cum_[w] + static_cast<uint64_t>(__builtin_popcountll(words_[w] & mask));
}

Collection build_collection(const std::vector<std::string>& docs) {
  if (docs.empty()) fail(Errc::empty_collection, "no documents");
  Collection c;
  c.d = static_cast<uint32_t>(docs.size());
  uint64_t total = 0;
  for (const std::string& doc : docs) total += doc.size() + 1;
  c.text.reserve(total);
  for (size_t g = 0; g < docs.size(); ++g) {
    size_t off = docs[g].find(static_cast<char>(kTerminator));
    if (off != std::string::npos)
      fail(Errc::forbidden_byte,
           "document " + std::to_string(g + 1) + " offset " + std::to_string(off + 1));
    c.doc_starts.push_back(c.text.size() + 1);
    c.text += docs[g];
    c.text += static_cast<char>(kTerminator);
  }
  c.n = c.text.size();
  c.starts = BitvectorRank(c.n, c.doc_starts);
  return c;
}

uint64_t rank1(const BitvectorRank& b, uint64_t j) { return b.rank1(j); }

uint32_t doc_of(const Collection& c, uint64_t i) {
  if (i < 1 || i > c.n) fail(Errc::out_of_bounds, "text position " + std::to_string(i));
  return static_cast<uint32_t>(c.starts.rank1(i));
}

std::vector<std::string> split_documents(const Collection& c) {
  std::vector<std::string> docs;
  std::string cur;
  for (uint64_t i = 1; i <= c.n; ++i) {
    uint8_t ch = c.text_at(i);
    if (ch == kTerminator) {
      docs.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(ch);
    }
  }
  return docs;
}

void save_docs(const Collection& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path);
  out.write(c.text.data(), static_cast<std::streamsize>(c.text.size()));
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

Collection collection_from_text(std::string text) {
  if (text.empty()) fail(Errc::empty_collection, "empty text");
  if (static_cast<uint8_t>(text.back()) != kTerminator)
    fail(Errc::malformed_input, "text does not end with a terminator");
  Collection c;
  c.text = std::move(text);
  c.n = c.text.size();
  c.doc_starts.push_back(1);
  for (uint64_t i = 1; i < c.n; ++i)
    if (static_cast<uint8_t>(c.text[i - 1]) == kTerminator) c.doc_starts.push_back(i + 1);
  c.d = static_cast<uint32_t>(c.doc_starts.size());
  c.starts = BitvectorRank(c.n, c.doc_starts);
  return c;
}

Collection load_docs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return collection_from_text(buf.str());
}

Collection load_docs_dir(const std::string& dir) {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) names.push_back(entry.path().string());
  std::sort(names.begin(), names.end());
  std::vector<std::string> docs;
  for (const std::string& name : names) {
    std::ifstream in(name, std::ios::binary);
    if (!in) fail(Errc::io_error, "cannot open: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    docs.push_back(buf.str());
  }
  return build_collection(docs);
}

}  // namespace dgx
