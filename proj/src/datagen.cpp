#include "dgx/datagen.hpp"

#include <algorithm>
#include <fstream>

#include "dgx/doclist.hpp"

namespace dgx {

namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_gen_spec(const GenSpec& spec) {
  if (spec.base_count == 0 || spec.variants_per_base == 0 || spec.base_length == 0)
    fail(Errc::invalid_params, "base count, variants, and length must be positive");
  if (spec.rate < 0.0 || spec.rate >= 1.0)
    fail(Errc::invalid_params, "mutation rate must lie in [0,1)");
}

std::string synthetic_source(GenKind kind, uint64_t length, std::mt19937_64& rng) {
  const std::string alphabet =
      kind == GenKind::dna ? "ACGT" : "abcdefghijklmnopqrstuvwxyz ";
  std::string out(length, '\0');
  for (auto& ch : out) ch = alphabet[rng() % alphabet.size()];
  return out;
}

std::string pick_source(const GenSpec& spec, uint64_t need, std::mt19937_64& rng) {
  std::string source =
      spec.source.empty() ? synthetic_source(spec.kind, need, rng) : spec.source;
  if (source.find(kTerminator) != std::string::npos)
    fail(Errc::forbidden_byte, "source contains the terminator byte");
  if (source.size() < need) fail(Errc::source_too_short, "source shorter than the base windows");
  return source;
}

// Base-major variant list shared by Concat and Version so both consume the
// generator identically.
std::vector<std::string> windowed_variants(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  uint64_t need = static_cast<uint64_t>(spec.base_count) * spec.base_length;
  std::string source = pick_source(spec, need, rng);
  SymbolDist dist = SymbolDist::from_bytes(source);
  uint64_t start = rng() % (source.size() - need + 1);
  std::vector<std::string> variants;
  variants.reserve(static_cast<size_t>(spec.base_count) * spec.variants_per_base);
  for (uint32_t g = 0; g < spec.base_count; ++g) {
    std::string base = source.substr(start + g * spec.base_length, spec.base_length);
    for (uint32_t v = 0; v < spec.variants_per_base; ++v)
      variants.push_back(mutate_zero_order(base, spec.rate, dist, rng));
  }
  return variants;
}

}  // namespace

SymbolDist SymbolDist::from_bytes(const std::string& s) {
  SymbolDist dist;
  for (unsigned char b : s) ++dist.counts_[b];
  uint64_t cum = 0;
  for (int b = 0; b < 256; ++b) {
    if (dist.counts_[b] == 0) continue;
    cum += dist.counts_[b];
    dist.cum_.emplace_back(cum, static_cast<uint8_t>(b));
  }
  dist.total_ = cum;
  return dist;
}

uint8_t SymbolDist::sample(std::mt19937_64& rng) const {
  uint64_t r = rng() % total_;
  auto it = std::upper_bound(cum_.begin(), cum_.end(), r,
                             [](uint64_t v, const auto& e) { return v < e.first; });
  return it->second;
}

std::string mutate_zero_order(const std::string& s, double rate, const SymbolDist& dist,
                              std::mt19937_64& rng) {
  if (dist.total() == 0) fail(Errc::empty_distribution, "no symbols to draw from");
  if (rate < 0.0 || rate > 1.0) fail(Errc::invalid_params, "rate must lie in [0,1]");
  std::string out = s;
  for (auto& ch : out)
    if (unit_uniform(rng) < rate) ch = static_cast<char>(dist.sample(rng));
  return out;
}

Collection gen_dna(const GenSpec& spec) {
  check_gen_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::string source = pick_source(spec, spec.base_length, rng);
  SymbolDist dist = SymbolDist::from_bytes(source);
  uint64_t start = rng() % (source.size() - spec.base_length + 1);
  std::string window = source.substr(start, spec.base_length);
  double base_rate = std::min(10.0 * spec.rate, 0.9);
  std::vector<std::string> docs;
  docs.reserve(static_cast<size_t>(spec.base_count) * spec.variants_per_base);
  for (uint32_t g = 0; g < spec.base_count; ++g) {
    std::string base = mutate_zero_order(window, base_rate, dist, rng);
    for (uint32_t v = 0; v < spec.variants_per_base; ++v)
      docs.push_back(mutate_zero_order(base, spec.rate, dist, rng));
  }
  return build_collection(docs);
}

Collection gen_concat(const GenSpec& spec) {
  check_gen_spec(spec);
  std::vector<std::string> variants = windowed_variants(spec);
  std::vector<std::string> docs(spec.base_count);
  for (uint32_t g = 0; g < spec.base_count; ++g) {
    docs[g].reserve(spec.base_length * spec.variants_per_base);
    for (uint32_t v = 0; v < spec.variants_per_base; ++v)
      docs[g] += variants[static_cast<size_t>(g) * spec.variants_per_base + v];
  }
  return build_collection(docs);
}

Collection gen_version(const GenSpec& spec) {
  check_gen_spec(spec);
  return build_collection(windowed_variants(spec));
}

Collection gen_collection(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::dna: return gen_dna(spec);
    case GenKind::concat: return gen_concat(spec);
    case GenKind::version: return gen_version(spec);
  }
  fail(Errc::invalid_params, "unknown generator kind");
}

std::vector<std::string> gen_patterns_substr(const Collection& c, uint64_t len,
                                             uint64_t sample_count, uint64_t keep,
                                             const SuffixIndex& idx, uint64_t seed) {
  if (len < 1 || sample_count < 1 || keep > sample_count)
    fail(Errc::invalid_params, "need len >= 1 and keep <= sample_count");
  std::vector<uint64_t> valid;
  for (uint32_t g = 1; g <= c.d; ++g) {
    uint64_t body = c.doc_span(g) - 1;
    if (body < len) continue;
    uint64_t first = c.doc_starts[g - 1];
    for (uint64_t j = first; j + len <= first + body; ++j) valid.push_back(j);
  }
  if (valid.empty())
    fail(Errc::pattern_length_exceeds_docs, "no document holds a window of that length");

  std::mt19937_64 rng(seed);
  std::vector<std::string> sampled;
  sampled.reserve(sample_count);
  for (uint64_t t = 0; t < sample_count; ++t) {
    uint64_t pos = valid[rng() % valid.size()];
    sampled.push_back(c.text.substr(pos - 1, len));
  }
  std::sort(sampled.begin(), sampled.end());
  sampled.erase(std::unique(sampled.begin(), sampled.end()), sampled.end());

  struct Ranked {
    std::string pattern;
    uint64_t occ;
    uint64_t docc;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(sampled.size());
  for (auto& p : sampled) {
    auto range = find(idx, c, p);
    uint64_t occ = range->ep - range->sp + 1;
    uint64_t docc = count_freqs(idx, range->sp, range->ep).size();
    ranked.push_back({std::move(p), occ, docc});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    uint64_t lhs = a.occ * b.docc;
    uint64_t rhs = b.occ * a.docc;
    if (lhs != rhs) return lhs > rhs;
    return a.pattern < b.pattern;
  });
  if (ranked.size() > keep) ranked.resize(keep);
  std::vector<std::string> out;
  out.reserve(ranked.size());
  for (auto& r : ranked) out.push_back(std::move(r.pattern));
  return out;
}

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

void write_patterns(const std::filesystem::path& path, const std::vector<std::string>& patterns,
                    bool hex) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open " + path.string());
  for (const auto& p : patterns) {
    if (hex) {
      std::string line;
      line.reserve(p.size() * 2);
      for (unsigned char b : p) {
        line += kHexDigits[b >> 4];
        line += kHexDigits[b & 0xf];
      }
      out << line << '\n';
    } else {
      out << p << '\n';
    }
  }
  if (!out) fail(Errc::io_error, "write failed for " + path.string());
}

std::vector<std::string> read_patterns(const std::filesystem::path& path, bool hex) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::vector<std::string> patterns;
  std::string line;
  while (std::getline(in, line)) {
    if (!hex) {
      patterns.push_back(line);
      continue;
    }
    if (line.size() % 2 != 0) fail(Errc::malformed_input, "odd hex line length");
    std::string p;
    p.reserve(line.size() / 2);
    for (size_t i = 0; i < line.size(); i += 2) {
      int hi = hex_value(line[i]);
      int lo = hex_value(line[i + 1]);
      if (hi < 0 || lo < 0) fail(Errc::malformed_input, "bad hex digit");
      p += static_cast<char>((hi << 4) | lo);
    }
    patterns.push_back(std::move(p));
  }
  return patterns;
}

GenKind parse_gen_kind(const std::string& name) {
  if (name == "dna") return GenKind::dna;
  if (name == "concat") return GenKind::concat;
  if (name == "version") return GenKind::version;
  fail(Errc::invalid_params, "unknown kind " + name);
}

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::dna: return "dna";
    case GenKind::concat: return "concat";
    case GenKind::version: return "version";
  }
  return "?";
}

}  // namespace dgx
