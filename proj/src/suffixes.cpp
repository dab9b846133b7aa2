#include "dgx/suffixes.hpp"

#include <algorithm>
#include <limits>

namespace dgx {

std::vector<uint32_t> build_sa(const Collection& c) {
  uint64_t n = c.n;
  if (n == 0) fail(Errc::empty_collection, "cannot sort an empty text");
  if (n >= std::numeric_limits<uint32_t>::max())
    fail(Errc::invalid_params, "collection exceeds 32-bit position range");

  std::vector<uint32_t> sa(n), rnk(n), next_rnk(n), tmp(n);
  uint64_t classes;
  {
    std::vector<uint32_t> cnt(256, 0);
    for (unsigned char ch : c.text) ++cnt[ch];
    std::vector<uint32_t> at(256);
    uint32_t acc = 0;
    for (int b = 0; b < 256; ++b) {
      at[b] = acc;
      acc += cnt[b];
    }
    for (uint64_t i = 0; i < n; ++i) sa[at[static_cast<unsigned char>(c.text[i])]++] = i;
    uint32_t r = 0;
    rnk[sa[0]] = 0;
    for (uint64_t i = 1; i < n; ++i) {
      if (c.text[sa[i]] != c.text[sa[i - 1]]) ++r;
      rnk[sa[i]] = r;
    }
    classes = r + 1;
  }

  // Each round sorts by (rank, rank k ahead); distinct suffixes guarantee
  // all classes split before k reaches n.
  for (uint64_t k = 1; classes < n && k < n; k <<= 1) {
    uint64_t p = 0;
    for (uint64_t i = n - k; i < n; ++i) tmp[p++] = i;  // empty second key sorts first
    for (uint64_t i = 0; i < n; ++i)
      if (sa[i] >= k) tmp[p++] = sa[i] - k;

    std::vector<uint32_t> cnt(classes, 0);
    for (uint64_t i = 0; i < n; ++i) ++cnt[rnk[i]];
    std::vector<uint32_t> at(classes);
    uint32_t acc = 0;
    for (uint64_t cl = 0; cl < classes; ++cl) {
      at[cl] = acc;
      acc += cnt[cl];
    }
    for (uint64_t i = 0; i < n; ++i) sa[at[rnk[tmp[i]]]++] = tmp[i];

    uint32_t r = 0;
    next_rnk[sa[0]] = 0;
    for (uint64_t i = 1; i < n; ++i) {
      uint32_t a = sa[i - 1], b = sa[i];
      bool same = rnk[a] == rnk[b];
      if (same) {
        uint32_t a2 = (a + k < n) ? rnk[a + k] + 1 : 0;
        uint32_t b2 = (b + k < n) ? rnk[b + k] + 1 : 0;
        same = a2 == b2;
      }
      if (!same) ++r;
      next_rnk[b] = r;
    }
    rnk.swap(next_rnk);
    classes = static_cast<uint64_t>(r) + 1;
  }

  for (uint64_t i = 0; i < n; ++i) ++sa[i];  // back to 1-based positions
  return sa;
}

namespace {

// -1: suffix < P, 0: P is a prefix of the suffix, +1: suffix > P.
int cmp_suffix_pattern(const Collection& c, uint64_t pos, const std::string& P) {
  uint64_t avail = c.n - pos + 1;
  for (uint64_t j = 0; j < P.size(); ++j) {
    if (j >= avail) return -1;  // suffix ran out, so it is a proper prefix of P
    uint8_t sc = c.text_at(pos + j);
    uint8_t pc = static_cast<uint8_t>(P[j]);
    if (sc != pc) return sc < pc ? -1 : 1;
  }
  return 0;
}

}  // namespace

std::optional<RankRange> find(const SuffixIndex& idx, const Collection& c, const std::string& P) {
  if (P.find(static_cast<char>(kTerminator)) != std::string::npos)
    fail(Errc::forbidden_byte, "pattern contains the terminator byte");
  uint64_t n = idx.n();
  if (P.empty()) return RankRange{1, n};

  // cmp over ranks is nondecreasing, so both boundaries binary-search cleanly.
  uint64_t lo = 1, hi = n + 1;
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (cmp_suffix_pattern(c, idx.sa_at(mid), P) < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  uint64_t sp = lo;
  hi = n + 1;
  while (lo < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (cmp_suffix_pattern(c, idx.sa_at(mid), P) <= 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  uint64_t ep = lo - 1;
  if (sp > ep) return std::nullopt;
  return RankRange{sp, ep};
}

std::vector<uint64_t> locate(const SuffixIndex& idx, uint64_t sp, uint64_t ep) {
  if (sp < 1 || sp > ep || ep > idx.n()) fail(Errc::out_of_bounds, "locate range");
  std::vector<uint64_t> out;
  out.reserve(ep - sp + 1);
  for (uint64_t i = sp; i <= ep; ++i) out.push_back(idx.sa_at(i));
  return out;
}

std::vector<uint32_t> build_da(const SuffixIndex& idx, const Collection& c) {
  std::vector<uint32_t> da(idx.sa.size());
  for (size_t i = 0; i < idx.sa.size(); ++i)
    da[i] = static_cast<uint32_t>(c.starts.rank1(idx.sa[i]));
  return da;
}

std::vector<uint32_t> build_lcp(const Collection& c, const SuffixIndex& idx) {
  uint64_t n = idx.n();
  std::vector<uint32_t> rank_of(n), lcp(n, 0);
  for (uint64_t i = 0; i < n; ++i) rank_of[idx.sa[i] - 1] = i;
  uint64_t h = 0;
  for (uint64_t p = 0; p < n; ++p) {
    uint64_t r = rank_of[p];
    if (r == 0) {
      h = 0;
      continue;
    }
    uint64_t q = idx.sa[r - 1] - 1;
    while (p + h < n && q + h < n && c.text[p + h] == c.text[q + h]) ++h;
    lcp[r] = static_cast<uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

void build_ilcp(const Collection& c, SuffixIndex& idx) {
  uint64_t n = idx.n();
  // Per-document LCP arrays; a document's suffixes keep their relative order
  // in the global suffix array, so a per-document cursor interleaves them.
  std::vector<std::vector<uint32_t>> doc_lcp(c.d);
  for (uint32_t g = 1; g <= c.d; ++g) {
    uint64_t start = c.doc_starts[g - 1];
    Collection one = collection_from_text(c.text.substr(start - 1, c.doc_span(g)));
    SuffixIndex di;
    di.sa = build_sa(one);
    doc_lcp[g - 1] = build_lcp(one, di);
  }
  idx.ilcp.assign(n, 0);
  std::vector<uint64_t> cursor(c.d, 0);
  for (uint64_t i = 0; i < n; ++i) {
    uint32_t g = idx.da[i];
    idx.ilcp[i] = doc_lcp[g - 1][cursor[g - 1]++];
  }
  idx.ilcp_runs.clear();
  for (uint64_t i = 0; i < n; ++i) {
    if (!idx.ilcp_runs.empty() && idx.ilcp_runs.back().value == idx.ilcp[i])
      ++idx.ilcp_runs.back().length;
    else
      idx.ilcp_runs.push_back({i + 1, 1, idx.ilcp[i]});
  }
}

std::vector<uint32_t> build_c(const std::vector<uint32_t>& da) {
  uint32_t d = 0;
  for (uint32_t g : da) d = std::max(d, g);
  std::vector<uint32_t> last(d + 1, 0), c(da.size());
  for (size_t i = 0; i < da.size(); ++i) {
    c[i] = last[da[i]];
    last[da[i]] = static_cast<uint32_t>(i + 1);
  }
  return c;
}

SuffixIndex build_suffix_index(const Collection& c) {
  SuffixIndex idx;
  idx.sa = build_sa(c);
  idx.da = build_da(idx, c);
  idx.lcp = build_lcp(c, idx);
  build_ilcp(c, idx);
  idx.c = build_c(idx.da);
  return idx;
}

}  // namespace dgx
